#pragma once

#include "lc/cert.hpp"
#include "lc/graph.hpp"

#include <functional>
#include <string>

namespace lc {

// Elementary schemes. All of them assume connected input graphs; none of
// them certify connectivity itself (a disconnected no-instance can always
// fake per-component certificates, and every caller here feeds connected
// graphs anyway).

// Accepts every connected graph. Certificates carry (root id, parent id,
// distance); the point of the scheme is the agreed root and the distance
// field other schemes build on. With rootless=true the root instead carries
// an empty certificate and its neighbors simulate its fields, so an
// accepting assignment marks exactly one node. Ingredient for schemes that
// need a unique elected node without writing its id everywhere.
Scheme scheme_spanning_tree(bool rootless = false);

// Accepts exactly the trees. Certificate is a single distance.
Scheme scheme_acyclicity();

// Accepts exactly the paths (including K1 and K2).
Scheme scheme_path();

// Accepts exactly the cycles. No certificates needed: 2-regularity is local.
Scheme scheme_cycle();

// Accepts exactly the stars K_{1,k} (including K1 and K2). Certificate is
// the broadcast center id.
Scheme scheme_star();

// Accepts exactly the graphs that have a Hamiltonian path all of whose
// remaining edges, read as position intervals along that path, are pairwise
// non-crossing (nested or disjoint; sharing an endpoint is fine). Certificate
// per node: path position plus the innermost chord interval covering the gap
// on each side of the node.
Scheme scheme_path_outerplanar();

// Like the scheme_path_outerplanar prover, but the Hamiltonian path is pinned
// to start at a and end at b. nullopt when a or b is missing, a == b, or no
// such order exists.
std::optional<Assignment> prove_path_outerplanar_between(const Graph& g, NodeId a, NodeId b);

// Endpoint test against an accepting scheme_path_outerplanar view: is_start
// demands path position 0, is_end demands no successor among the neighbors.
// Combined with the verifier itself these pin the view's node to the claimed
// end of the spine. Throws cert_parse_error on malformed certificates.
bool path_outerplanar_anchor(const LocalView& v, bool is_start, bool is_end);

// Accepts exactly the 2-connected outerplanar graphs (so n >= 3). Every
// certificate names one outer-cycle edge (a, b); peeling that edge leaves a
// Hamiltonian spine from a to b whose chords nest, which is the
// scheme_path_outerplanar certificate carried alongside.
Scheme scheme_outerplanar_2conn();

// Accepts exactly the connected graphs satisfying pred. Every node gets a
// full description of the graph (ids plus adjacency matrix) and checks its
// own row, so certificates are Theta(n^2) bits; only usable for classes
// whose members stay tiny. pred must be decidable from the id-labeled graph;
// every pred used here is isomorphism-invariant.
Scheme scheme_universal(const std::string& name, std::function<bool(const Graph&)> pred);

} // namespace lc
