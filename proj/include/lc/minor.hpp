#pragma once

#include "lc/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lc {

// Branch sets witnessing an h-minor: parts[i] lists the g vertex indices
// contracted into pattern vertex i. Parts are disjoint, nonempty, connected,
// and every h edge has at least one g edge between the two parts.
struct MinorModel {
    std::vector<std::vector<int>> parts;
};

bool validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m);

struct search_budget_exceeded : std::runtime_error {
    search_budget_exceeded() : std::runtime_error("minor search budget exceeded") {}
};

// Exact search with a step budget. Throws search_budget_exceeded instead of
// guessing when the budget runs out. Requires g.n() <= 64.
std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h,
                                           long long budget = 200'000'000);

// The oracle. Exact within guards: h.n <= 6 and g.n <= 14, except that a
// 2-connected h lifts the g guard entirely because a 2-connected minor
// always sits inside one block of g (searched per block then). Out of range
// throws std::invalid_argument rather than ever returning a wrong answer.
std::optional<MinorModel> contains_minor(const Graph& g, const Graph& h);

// Unguarded except for the budget; for internal predicates on graphs the
// guarded oracle would refuse.
bool contains_minor_budgeted(const Graph& g, const Graph& h, long long budget);

// Independent slow check used to validate the search: tries every assignment
// of g vertices to pattern vertices (or none). Only for g.n() <= 9.
bool contains_minor_naive(const Graph& g, const Graph& h);

// Replace each listed edge by a path with `times` internal vertices. New ids
// are allocated above the current maximum. Throws if an edge is missing.
Graph subdivide_edges(const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& edges,
                      int times);

} // namespace lc
