#pragma once

#include "lc/cert.hpp"
#include "lc/graph.hpp"

namespace lc {

// Schemes accepting exactly the connected graphs with no h minor, for a
// catalog of small patterns. Built by composing the block decomposition
// lift, unions and the elementary schemes; each row mirrors a structural
// characterization of the h-free class and is validated against the exact
// minor oracle on the census. Patterns outside the catalog raise
// std::invalid_argument("minor pattern not covered: ...") unless avoiding
// them bounds the graph size outright, in which case a universal scheme on
// the few members does the job.
Scheme scheme_minor_free(const Graph& h);

// Named corners of the catalog.
Scheme scheme_C4_free();
Scheme scheme_C5_free();
Scheme scheme_diamond_free();
Scheme scheme_house_free();
Scheme scheme_K23_free();

// Outerplanar graphs, i.e. no k4 and no k23 minor. Blocks are bridges or
// 2-connected outerplanar.
Scheme scheme_outerplanar();

} // namespace lc
