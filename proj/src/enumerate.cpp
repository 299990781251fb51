#include "lc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lc {

bool DenseGraph::connected() const {
    if (n == 0) return true;
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 16 ? std::uint16_t(0xffff) : std::uint16_t((1u << n) - 1));
}

DenseGraph to_dense(const Graph& g) {
    if (g.n() > kDenseMax) throw std::invalid_argument("graph too large for dense form");
    DenseGraph d;
    d.n = g.n();
    for (auto [a, b] : g.edges()) d.add(a, b);
    return d;
}

Graph from_dense(const DenseGraph& d) {
    std::vector<NodeId> nodes(d.n);
    for (int i = 0; i < d.n; ++i) nodes[i] = static_cast<NodeId>(i);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int a = 0; a < d.n; ++a)
        for (int b = a + 1; b < d.n; ++b)
            if (d.has(a, b)) es.emplace_back(a, b);
    return Graph(std::move(nodes), es);
}

namespace {

// Iterated neighborhood refinement. The resulting color classes are
// isomorphism invariant, so restricting the permutation search to orderings
// that respect them keeps the minimum well defined across isomorphic graphs.
std::vector<int> refine_colors(const DenseGraph& d) {
    std::vector<int> color(d.n, 0);
    for (int v = 0; v < d.n; ++v) color[v] = d.degree(v);
    for (int round = 0; round < d.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(d.n);
        for (int v = 0; v < d.n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<int> nb;
            for (int w = 0; w < d.n; ++w)
                if (d.has(v, w)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(d.n);
        int c = 0;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::vector<std::uint16_t> rows_under(const DenseGraph& d, const std::vector<int>& perm) {
    std::vector<int> pos(d.n);
    for (int i = 0; i < d.n; ++i) pos[perm[i]] = i;
    std::vector<std::uint16_t> rows(d.n, 0);
    for (int i = 0; i < d.n; ++i) {
        std::uint16_t src = d.adj[perm[i]];
        std::uint16_t out = 0;
        while (src) {
            int w = __builtin_ctz(src);
            src &= std::uint16_t(src - 1);
            out |= std::uint16_t(1u << pos[w]);
        }
        rows[i] = out;
    }
    return rows;
}

} // namespace

std::vector<std::uint16_t> canonical_key(const DenseGraph& d) {
    if (d.n == 0) return {};
    auto color = refine_colors(d);
    // group vertices by color, classes already ordered by color value
    int nclasses = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> classes(nclasses);
    for (int v = 0; v < d.n; ++v) classes[color[v]].push_back(v);

    std::vector<std::uint16_t> best;
    std::vector<int> perm;
    perm.reserve(d.n);
    while (true) {
        perm.clear();
        for (const auto& c : classes) perm.insert(perm.end(), c.begin(), c.end());
        auto rows = rows_under(d, perm);
        if (best.empty() || rows < best) best = std::move(rows);
        // odometer over per-class permutations
        int k = nclasses - 1;
        while (k >= 0 && !std::next_permutation(classes[k].begin(), classes[k].end())) --k;
        if (k < 0) break;
    }
    return best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (a.n() == 0) return true;
    return canonical_key(to_dense(a)) == canonical_key(to_dense(b));
}

namespace {

DenseGraph dense_from_rows(int n, const std::vector<std::uint16_t>& rows) {
    DenseGraph d;
    d.n = n;
    for (int i = 0; i < n; ++i) d.adj[i] = rows[i];
    return d;
}

std::vector<std::vector<std::uint16_t>> connected_keys(int n_max) {
    std::vector<std::vector<std::vector<std::uint16_t>>> by_n(n_max + 1);
    if (n_max >= 1) by_n[1] = {{0}};
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::vector<std::uint16_t>, bool> seen;
        for (const auto& parent : by_n[n - 1]) {
            DenseGraph base = dense_from_rows(n - 1, parent);
            base.n = n;
            for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
                DenseGraph d = base;
                d.adj[n - 1] = std::uint16_t(mask);
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) d.adj[v] |= std::uint16_t(1u << (n - 1));
                seen.emplace(canonical_key(d), true);
            }
        }
        by_n[n].reserve(seen.size());
        for (auto& [k, _] : seen) by_n[n].push_back(k);
    }
    std::vector<std::vector<std::uint16_t>> out;
    for (int n = 1; n <= n_max; ++n)
        for (auto& k : by_n[n]) out.push_back(std::move(k));
    return out;
}

std::mutex census_mutex;
std::map<int, std::vector<std::vector<std::uint16_t>>> census_cache;

const std::vector<std::vector<std::uint16_t>>& census(int n_max) {
    if (n_max < 1 || n_max > 8) throw std::invalid_argument("census supports 1..8 vertices");
    std::lock_guard<std::mutex> lock(census_mutex);
    auto it = census_cache.find(n_max);
    if (it == census_cache.end())
        it = census_cache.emplace(n_max, connected_keys(n_max)).first;
    return it->second;
}

} // namespace

std::vector<Graph> connected_graphs_up_to(int n_max) {
    std::vector<Graph> out;
    for (const auto& key : census(n_max))
        out.push_back(from_dense(dense_from_rows(static_cast<int>(key.size()), key)));
    return out;
}

int canonical_index(const Graph& g, int n_max) {
    if (g.n() < 1 || g.n() > n_max) throw std::invalid_argument("graph outside census range");
    auto key = canonical_key(to_dense(g));
    const auto& all = census(n_max);
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == key) return static_cast<int>(i);
    throw std::invalid_argument("graph not in census (disconnected?)");
}

namespace {

Graph complete(int n) {
    std::vector<NodeId> nodes(n);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 0; i < n; ++i) {
        nodes[i] = i;
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    }
    return Graph(std::move(nodes), es);
}

Graph path_n(int n) {
    std::vector<NodeId> nodes(n);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 0; i < n; ++i) {
        nodes[i] = i;
        if (i) es.emplace_back(i - 1, i);
    }
    return Graph(std::move(nodes), es);
}

Graph cycle_n(int n) {
    std::vector<NodeId> nodes(n);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 0; i < n; ++i) {
        nodes[i] = i;
        es.emplace_back(i, (i + 1) % n);
    }
    return Graph(std::move(nodes), es);
}

Graph biclique(int a, int b) {
    std::vector<NodeId> nodes(a + b);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 0; i < a + b; ++i) nodes[i] = i;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(std::move(nodes), es);
}

Graph empty_n(int n) {
    std::vector<NodeId> nodes(n);
    for (int i = 0; i < n; ++i) nodes[i] = i;
    return Graph(std::move(nodes), {});
}

} // namespace

Graph named_graph(const std::string& name) {
    if (name == "k1") return complete(1);
    if (name == "k2" || name == "p2") return complete(2);
    if (name == "k3" || name == "c3") return complete(3);
    if (name == "k4") return complete(4);
    if (name == "k5") return complete(5);
    if (name == "k6") return complete(6);
    if (name == "p3") return path_n(3);
    if (name == "p4") return path_n(4);
    if (name == "p5") return path_n(5);
    if (name == "p6") return path_n(6);
    if (name == "c4") return cycle_n(4);
    if (name == "c5") return cycle_n(5);
    if (name == "c6") return cycle_n(6);
    if (name == "c7") return cycle_n(7);
    if (name == "c8") return cycle_n(8);
    if (name == "claw" || name == "k13" || name == "s13")
        return make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "paw") return make_graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    if (name == "diamond")
        return make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (name == "house")
        return make_graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    if (name == "bull")
        return make_graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
    if (name == "gem")
        return make_graph({0, 1, 2, 3, 4},
                          {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    if (name == "k23") return biclique(2, 3);
    if (name == "k24") return biclique(2, 4);
    if (name == "2k1") return empty_n(2);
    if (name == "3k1") return empty_n(3);
    if (name == "4k1") return empty_n(4);
    if (name == "k2+k1") return make_graph({0, 1, 2}, {{0, 1}});
    if (name == "k2+2k1") return make_graph({0, 1, 2, 3}, {{0, 1}});
    if (name == "p3+k1") return make_graph({0, 1, 2, 3}, {{0, 1}, {1, 2}});
    if (name == "k3+k1") return make_graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}});
    throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_graph_names() {
    return {"k1",  "k2",    "k3",    "k4",     "k5",     "k6",    "p3",    "p4",
            "p5",  "p6",    "c4",    "c5",     "c6",     "c7",    "c8",    "claw",
            "paw", "diamond", "house", "bull",   "gem",    "k23",   "k24",   "2k1",
            "3k1", "4k1",   "k2+k1", "k2+2k1", "p3+k1",  "k3+k1"};
}

} // namespace lc
