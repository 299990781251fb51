#pragma once

#include "lc/cert.hpp"

namespace lc {

// 2-vertex-connectivity (n >= 3) certified by an open ear decomposition:
// two adjacent anchor nodes plus ears whose endpoints always sit in strictly
// earlier ears. Node certificates only.
Scheme scheme_2_connected();

// Same checks with K2 also accepted. Not a connectivity property on its own;
// this is the per-piece ingredient for schemes that certify something on
// every biconnected component.
Scheme scheme_2_connected_or_k2();

// 2-edge-connectivity via a closed ear decomposition: ear endpoints may
// coincide, but one-vertex closed ears are banned (they would certify a
// bridge) and one anchor additionally needs a witness that the base cycle
// is real.
Scheme scheme_2_edge_connected();

// 3-vertex-connectivity from a non-separating ear sequence: the open-ear
// checks plus a reserved edge between an anchor and the only inner vertex
// of the last ear, and every other inner vertex must see a strictly later
// ear. Uses node and edge certificates. The prover relies on an exhaustive
// ear search and refuses graphs with more than 12 nodes by throwing
// std::invalid_argument.
Scheme scheme_3_connected();

} // namespace lc
