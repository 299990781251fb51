#pragma once

#include "lc/cert.hpp"
#include "lc/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace lc {

// Scheme combinators. Each takes schemes for simpler classes and yields a
// scheme for a derived class; verifiers of the result simulate the input
// verifiers on views they reconstruct from their certificates. All inputs
// must label nodes only unless a combinator says otherwise.

// Accepts graphs of the class with one distinguished node, chosen by the
// prover via `chooser` (default: smallest id). The distinguished node keeps
// no class certificate of its own: its would-be certificate is copied to its
// neighbors and it cross-checks the copies, so forged double marks and
// missing marks are both local rejects.
Scheme pointed(const Scheme& s, std::function<NodeId(const Graph&)> chooser = {});

// Up to k distinguished nodes, pairwise non-adjacent. A rooted spanning tree
// with per-subtree counters bounds how many marks exist; each mark's
// certificate is reconstructed from copies held by its neighbors as in
// pointed(). chooser defaults to a greedy independent prefix of size <= k.
Scheme k_pointed(const Scheme& s, int k,
                 std::function<std::vector<NodeId>(const Graph&)> chooser = {});

// Witness subgraph handed to subgraph_closure provers: node ids plus the
// edges kept. Edges must join listed nodes.
struct SubgraphWitness {
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
};
using WitnessFinder = std::function<std::optional<SubgraphWitness>(const Graph&)>;

struct ClosureVariant {
    enum class Kind { General, Degenerate, Induced };
    Kind kind = Kind::General;
    int fold_degeneracy = 0; // Degenerate only
};
inline ClosureVariant closure_general() { return {}; }
inline ClosureVariant closure_degenerate(int d) {
    return {ClosureVariant::Kind::Degenerate, d};
}
inline ClosureVariant closure_induced() { return {ClosureVariant::Kind::Induced, 0}; }

// Accepts graphs containing a subgraph the input scheme accepts. Witness
// nodes and edges are marked, everyone stores a tree path to a marked root,
// and marked nodes re-run the input verifier on the marked part of their
// view. General marks edges too (certificates on nodes and edges); Induced
// takes all edges between marked nodes; Degenerate stores the general
// variant's edge marks at an endpoint, valid when the witness is
// d-degenerate. The default finder tries the whole graph, then all connected
// induced subgraphs on up to 10 nodes. The input scheme decides any witness
// it accepts, so it must reject junk it would not certify (all schemes here
// do: their verifiers reject rather than assume global facts).
Scheme subgraph_closure(const Scheme& s, ClosureVariant variant = {},
                        WitnessFinder finder = {});

// Partition of the node set into bags, used by node_expansion provers.
using BagDecomposer =
    std::function<std::optional<std::vector<std::vector<NodeId>>>(const Graph&)>;

// Accepts graphs obtained from a graph of s1's class (max degree <= delta)
// by replacing each of its nodes with a connected graph of s2's class and
// each of its edges with at least one edge between the two bags. Bags are
// identified by the id of a leader inside them, so a certificate cannot
// split or merge bags without breaking a leader-rooted tree. Per adjacent
// bag, a rootless in-bag tree points to a contact holding a real cross edge.
// The default decomposer puts every node in its own bag.
Scheme node_expansion(const Scheme& s1, const Scheme& s2, int delta,
                      BagDecomposer decomposer = {});

// How a graph decomposes as an edge expansion: which nodes are original and,
// for every edge, which base edge's replacement component it lies in. The
// component of base edge (u, v) is keyed (u, v, copy); copy stays 0 unless
// the base is a multigraph.
struct EdgeExpansionPlan {
    std::vector<NodeId> originals;
    std::map<EdgeKey, std::tuple<NodeId, NodeId, std::uint32_t>> group_of_edge;
};
using EdgePlanner = std::function<std::optional<EdgeExpansionPlan>(const Graph&)>;

// Accepts graphs obtained from a graph of s1's class by replacing every edge
// (u, v) with a connected graph of s2's class containing u and v, the
// replacements sharing nothing but original nodes. All certificates live on
// edges: each edge carries its component key, the base certificates of u and
// v, and per endpoint the s2 certificate plus distances to u and v inside
// the component, which pin u and v as real members. Original nodes simulate
// both verifiers, interior nodes only s2's. With multigraph_base, parallel
// base edges are allowed (distinct copy numbers) and s1's verifier sees one
// neighbor entry per parallel edge; s1's prover still sees the underlying
// simple graph. The default planner reads the graph itself as its own base
// (every replacement a single edge).
Scheme edge_expansion(const Scheme& s1, const Scheme& s2,
                      bool multigraph_base = false, EdgePlanner planner = {});

// Accepts graphs containing h as a minor. h must be connected with at most 6
// nodes (the prover leans on the exact minor search). Built by composition:
// a witness subgraph made of one tree per branch set plus one edge per h
// edge is an expansion, by trees, of a small map containing h as a minor;
// the map is certified whole, bag structure by node_expansion, the witness
// marking by the degenerate subgraph closure. Certificates are
// O(size(h)^2 + log n) bits on nodes only.
Scheme has_minor(const Graph& h);

// Accepts the union of the branch classes. Every node certificate gets a
// one-byte branch tag prefix; all nodes must pick the same branch and the
// chosen branch's verifier runs on the view with tags stripped. Edge
// certificates pass through untouched (branches that do not label edges
// ignore them). The prover tries the branches in order and keeps the first
// accepting one; branch provers that throw std::invalid_argument or run out
// of minor-search budget are skipped, not fatal.
Scheme scheme_union(const std::vector<Scheme>& branches, const std::string& name = "");

// Lifts a scheme for 2-connected graphs and K2 to the class of graphs whose
// biconnected blocks all satisfy it (the lifted property must be exactly
// "every block is in the class"; that needs closure under cut-vertex gluing,
// which holds e.g. for excluding a 2-connected minor). s must accept K2 and
// every 2-connected member; single-node graphs are accepted outright since
// they have no such block. Each node carries data for one block only: the
// block it lies in closest to a root block. Inside a block, members certify
// 2-connectivity-or-K2 and s with the certificates of the cut node toward
// the root erased as in pointed(); depth counters that drop by one exactly
// when stepping through that cut node keep the claimed block tree rigid.
Scheme block_cut_lift(const Scheme& s);

} // namespace lc
