#pragma once

#include "lc/graph.hpp"

#include <utility>
#include <vector>

namespace lc {

std::vector<std::vector<int>> connected_components(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);            // sorted indices
std::vector<std::pair<int, int>> bridges(const Graph& g); // (a<b), sorted

// Maximal 2-connected subgraphs plus bridge edges as their own blocks.
// Every vertex of a connected graph is in at least one block; isolated
// vertices form singleton blocks.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;           // sorted vertex index lists
    std::vector<char> is_cut;                       // per vertex
    std::vector<std::vector<int>> blocks_of_vertex; // block indices per vertex
};
BlockDecomposition block_decomposition(const Graph& g);

// Vertex connectivity tests. A graph is k-connected when it has at least
// k+1 vertices and no vertex set of size k-1 disconnects it. So K2 is
// 1-connected but not 2-connected, K3 is not 3-connected. Cutset search is
// exhaustive over (k-1)-subsets; fine for the sizes the tests use.
bool is_k_connected(const Graph& g, int k);
bool is_2_edge_connected(const Graph& g); // connected, n >= 3, bridgeless

// Removal order where each vertex has at most degeneracy(g) neighbors among
// later vertices.
std::vector<int> degeneracy_order(const Graph& g);
int degeneracy(const Graph& g);

// Girth; -1 for forests.
int shortest_cycle_length(const Graph& g);

// A shortest cycle as an ordered vertex list, nothing for forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

} // namespace lc
