#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lc {

using NodeId = std::uint64_t;

// Simple undirected graph. Node ids are arbitrary distinct u64 values.
// Internally nodes are indexed 0..n-1 in increasing id order; the public
// surface speaks ids, algorithms use indices.
class Graph {
public:
    Graph() = default;

    // nodes: distinct ids, edges: pairs of ids. Throws std::invalid_argument
    // on duplicate ids, self-loops, duplicate edges or edges on unknown ids.
    Graph(std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges);

    int n() const { return static_cast<int>(ids_.size()); }
    int m() const { return m_; }

    NodeId id_of(int idx) const { return ids_[idx]; }
    const std::vector<NodeId>& ids() const { return ids_; }

    // index lookup; nullopt when the id is not a node
    std::optional<int> index_of(NodeId id) const;

    const std::vector<int>& neighbors(int idx) const { return adj_[idx]; }
    int degree(int idx) const { return static_cast<int>(adj_[idx].size()); }

    bool has_edge(int a, int b) const;
    bool has_edge_ids(NodeId a, NodeId b) const;

    // all edges as index pairs (a < b), sorted
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<NodeId, NodeId>> edge_ids() const;

    bool connected() const;

    // induced subgraph on the given indices, keeping ids
    Graph induced(const std::vector<int>& keep) const;

    // graph with node indices mapped to new ids (same adjacency)
    Graph relabeled(const std::vector<NodeId>& new_ids) const;

private:
    std::vector<NodeId> ids_;          // sorted
    std::vector<std::vector<int>> adj_; // sorted neighbor indices
    int m_ = 0;
};

// ---------------- text format ----------------
// line 1: "n m", then m lines "u v" (decimal u64 ids). '#' starts a comment,
// blank lines are skipped. Duplicate edges and self-loops are rejected.
// Nodes never mentioned in an edge still exist: they are the ids 0..n-1?  No:
// the header fixes the node count; ids are collected from edge endpoints and,
// when fewer than n distinct ids appear, the remaining nodes are the smallest
// unused ids starting from 0. A file may also list isolated nodes explicitly
// with lines "v <id>".

struct ParseError {
    std::string message;
};

// throws std::runtime_error with a description on malformed input
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

Graph read_graph_file(const std::string& path);

// ---------------- small helpers ----------------

// connected component of start, as sorted indices, restricted to alive[i]
std::vector<int> component_of(const Graph& g, int start, const std::vector<char>& alive);

// number of connected components among alive vertices
int component_count(const Graph& g, const std::vector<char>& alive);

// BFS distances from start (-1 when unreachable)
std::vector<int> bfs_distances(const Graph& g, int start);

// builder convenience used everywhere in tests and generators
Graph make_graph(std::initializer_list<NodeId> nodes,
                 std::initializer_list<std::pair<NodeId, NodeId>> edges);

} // namespace lc
