#pragma once

#include "lc/graph.hpp"

#include <optional>
#include <vector>

namespace lc {

// Open ear decomposition of a 2-connected graph: a base edge (x0, y0) plus
// ears. Every ear is listed as its full vertex sequence a, w1..wt, b with
// t >= 1 inner vertices, endpoints a != b already covered earlier, inner
// vertices new. Ears with no inner vertices never appear; instead the
// leftover edges of g simply stay uncovered, which is fine for every use
// here (the ears only have to span the vertices).
struct OpenEarDecomposition {
    int x0 = -1, y0 = -1;
    std::vector<std::vector<int>> ears;
};

// Requires a 2-connected input (n >= 3); returns nothing otherwise.
std::optional<OpenEarDecomposition> open_ear_decomposition(const Graph& g);
bool validate_open_ears(const Graph& g, const OpenEarDecomposition& d);

// Same idea for 2-edge-connected graphs: the base is a cycle and ear
// endpoints may coincide.
struct ClosedEarDecomposition {
    std::vector<int> base_cycle; // length >= 3
    std::vector<std::vector<int>> ears;
};

std::optional<ClosedEarDecomposition> closed_ear_decomposition(const Graph& g);
bool validate_closed_ears(const Graph& g, const ClosedEarDecomposition& d);

// Open ear decomposition witnessing 3-connectivity: ears avoid the edge
// (r, u), u is the single inner vertex of the last ear, r sits on the base
// edge, and every inner vertex of an earlier ear keeps a neighbor that is
// added strictly later (so no ear prefix is separated by its boundary).
// Exhaustive search; only sensible for small graphs. Throws
// search_budget_exceeded when the budget runs out before an answer.
struct EarSequence3C {
    int r = -1, u = -1;
    int x0 = -1, y0 = -1;
    std::vector<std::vector<int>> ears;
};

std::optional<EarSequence3C> nonseparating_ear_sequence(const Graph& g,
                                                        long long budget = 50'000'000);
// pinned avoided edge; (r, u) must be an edge of g
std::optional<EarSequence3C> nonseparating_ear_sequence(const Graph& g, int r, int u,
                                                        long long budget = 50'000'000);
bool validate_ear_sequence_3c(const Graph& g, const EarSequence3C& d);

// Ear decomposition of a 2-connected series-parallel graph where every ear
// attaches to one host (the base path or an earlier ear) and the attachment
// spans on a common host never cross. Unlike the decompositions above this
// one accounts for every edge of g: edges are exactly the consecutive pairs
// of the base, the ear chains including their attachment edges, nothing
// else. Returns nothing when g is not series-parallel.
struct NestedEarDecomposition {
    std::vector<int> base; // vertex sequence of the root spine
    struct Ear {
        int host;          // -1 = base, otherwise earlier ear index
        int sa, sb;        // positions of the endpoints on the host, sa < sb
        std::vector<int> inner;
    };
    std::vector<Ear> ears;

    // full sequence of ear k: host_vertex(sa), inner..., host_vertex(sb)
    std::vector<int> ear_path(int k) const;
    std::vector<int> host_seq(int host) const; // -1 = base
    std::vector<std::vector<int>> all_ear_paths() const;
};

std::optional<NestedEarDecomposition> nested_ear_decomposition(const Graph& g);
bool validate_nested_ears(const Graph& g, const NestedEarDecomposition& d);

} // namespace lc
