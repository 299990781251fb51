#pragma once

#include "lc/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lc {

// Dense bitmask adjacency for tiny graphs. Canonical forms and isomorphism
// are only supported up to kDenseMax vertices; beyond that the permutation
// search would be pointless anyway.
inline constexpr int kDenseMax = 12;

struct DenseGraph {
    int n = 0;
    std::array<std::uint16_t, kDenseMax> adj{};

    bool has(int a, int b) const { return (adj[a] >> b) & 1; }
    void add(int a, int b) {
        adj[a] |= std::uint16_t(1u << b);
        adj[b] |= std::uint16_t(1u << a);
    }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    bool connected() const;
};

DenseGraph to_dense(const Graph& g); // throws std::invalid_argument if too big
Graph from_dense(const DenseGraph& d); // ids 0..n-1

// Lexicographically minimal adjacency-row vector over all vertex orderings
// compatible with an iterated-refinement partition. Equal keys iff isomorphic.
std::vector<std::uint16_t> canonical_key(const DenseGraph& d);

bool is_isomorphic(const Graph& a, const Graph& b);

// All connected graphs with 1..n_max vertices, one representative per
// isomorphism class, built by vertex augmentation. Deterministic order:
// by vertex count, then by canonical key. Representatives use ids 0..n-1
// laid out in canonical order. n_max <= 8. Known class counts per n:
// 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<Graph> connected_graphs_up_to(int n_max);

// Stable position of a connected graph in the ordering above, used when a
// certificate has to name a graph by number instead of shipping it.
int canonical_index(const Graph& g, int n_max);

// Small graphs by conventional name (lowercase): k1..k6, p2..p6, c3..c8,
// claw, paw, diamond, house, bull, k23, k24, gem. Disconnected ones join
// components with '+': 2k1, 3k1, 4k1, k2+k1, k2+2k1, p3+k1, k3+k1.
// Throws std::invalid_argument for unknown names.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

} // namespace lc
