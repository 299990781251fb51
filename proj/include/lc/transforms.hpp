#pragma once

#include "lc/cert.hpp"

namespace lc {

// Copies both endpoint certificates onto every edge; when the input scheme
// already labels edges, the original edge certificate rides along as a third
// field. Semantics-preserving; the new verifier additionally insists the
// copies match, so the edge certificates really participate.
Scheme node_to_edge(const Scheme& s);

// Folds edge certificates into node certificates. Every edge with a
// non-empty certificate is stored, tagged with both endpoint ids, at the
// endpoint that comes earlier in a degeneracy order of the subgraph formed
// by those edges; the verifier reconstructs each incident edge certificate
// from its own and its neighbors' records and runs the original verifier on
// the rebuilt view. Two conflicting records for one edge are a local reject.
/// The prover throws std::invalid_argument when that subgraph is not
// d-degenerate (storing would not fit the size bound).
Scheme edge_to_node(const Scheme& s, int d);

} // namespace lc
