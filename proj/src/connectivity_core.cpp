#include "lc/connectivity_core.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace lc {

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<char> alive(g.n(), 1), seen(g.n(), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        auto comp = component_of(g, s, alive);
        for (int v : comp) seen[v] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// One lowlink pass computing cut vertices, bridges and blocks together.
struct LowlinkResult {
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> bridges;
    std::vector<std::vector<int>> blocks;
};

LowlinkResult lowlink_scan(const Graph& g) {
    int n = g.n();
    LowlinkResult res;
    res.is_cut.assign(n, 0);
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            res.blocks.push_back({root});
            continue;
        }
        int root_children = 0;
        std::vector<int> stack = {root};
        disc[root] = timer++;
        low[root] = disc[root];
        while (!stack.empty()) {
            int v = stack.back();
            if (next_child[v] < g.degree(v)) {
                int w = g.neighbors(v)[next_child[v]++];
                if (disc[w] < 0) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    disc[w] = timer++;
                    low[w] = disc[w];
                    stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back(); // parent of v
                low[u] = std::min(low[u], low[v]);
                if (u == root) ++root_children;
                if (low[v] >= disc[u]) {
                    // pop the block hanging below edge (u, v)
                    std::vector<int> verts;
                    std::pair<int, int> e;
                    do {
                        e = estack.back();
                        estack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                    } while (e != std::make_pair(u, v));
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    if (verts.size() == 2) {
                        auto a = std::minmax(u, v);
                        res.bridges.emplace_back(a.first, a.second);
                    }
                    res.blocks.push_back(std::move(verts));
                    if (u != root) res.is_cut[u] = 1;
                }
            }
        }
        if (root_children >= 2) res.is_cut[root] = 1;
    }
    std::sort(res.bridges.begin(), res.bridges.end());
    return res;
}

} // namespace

std::vector<int> cut_vertices(const Graph& g) {
    auto res = lowlink_scan(g);
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (res.is_cut[v]) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    return lowlink_scan(g).bridges;
}

BlockDecomposition block_decomposition(const Graph& g) {
    auto res = lowlink_scan(g);
    BlockDecomposition d;
    d.blocks = std::move(res.blocks);
    d.is_cut = std::move(res.is_cut);
    d.blocks_of_vertex.assign(g.n(), {});
    for (size_t b = 0; b < d.blocks.size(); ++b)
        for (int v : d.blocks[b]) d.blocks_of_vertex[v].push_back(static_cast<int>(b));
    return d;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) return true;
    if (g.n() < k + 1) return false;
    if (!g.connected()) return false;
    if (k == 1) return true;
    // try all (k-1)-subsets as cutsets
    std::vector<int> pick;
    std::vector<char> alive(g.n(), 1);
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(pick.size()) == k - 1) {
            for (int v : pick) alive[v] = 0;
            bool still = component_count(g, alive) <= 1;
            for (int v : pick) alive[v] = 1;
            return still;
        }
        for (int v = from; v < g.n(); ++v) {
            pick.push_back(v);
            if (!rec(v + 1)) return false;
            pick.pop_back();
        }
        return true;
    };
    return rec(0);
}

bool is_2_edge_connected(const Graph& g) {
    return g.n() >= 3 && g.connected() && bridges(g).empty();
}

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    std::vector<std::vector<int>> bucket(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        bucket[deg[v]].push_back(v);
    }
    int floor = 0;
    for (int step = 0; step < n; ++step) {
        while (floor < n && bucket[floor].empty()) ++floor;
        // entries can be stale, skip until a live one at the right degree
        int v = -1;
        while (floor < n) {
            if (bucket[floor].empty()) {
                ++floor;
                continue;
            }
            int cand = bucket[floor].back();
            bucket[floor].pop_back();
            if (!removed[cand] && deg[cand] == floor) {
                v = cand;
                break;
            }
        }
        order.push_back(v);
        removed[v] = 1;
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                --deg[w];
                bucket[deg[w]].push_back(w);
                if (deg[w] < floor) floor = deg[w];
            }
    }
    return order;
}

int degeneracy(const Graph& g) {
    auto order = degeneracy_order(g);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    int d = 0;
    for (int v = 0; v < g.n(); ++v) {
        int fwd = 0;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) ++fwd;
        d = std::max(d, fwd);
    }
    return d;
}

namespace {

void root_scan(const Graph& g, int r, std::vector<int>& dist, std::vector<int>& par,
               int& best, std::pair<int, int>& best_edge) {
    dist = bfs_distances(g, r);
    par.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v))
            if (dist[w] == dist[v] + 1 && par[w] < 0) par[w] = v;
    for (auto [u, w] : g.edges()) {
        if (dist[u] < 0 || dist[w] < 0) continue;
        if (par[u] == w || par[w] == u) continue;
        if (dist[u] + dist[w] + 1 < best) {
            best = dist[u] + dist[w] + 1;
            best_edge = {u, w};
        }
    }
}

} // namespace

int shortest_cycle_length(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist, par;
    std::pair<int, int> e{-1, -1};
    for (int r = 0; r < g.n(); ++r) root_scan(g, r, dist, par, best, e);
    return best == std::numeric_limits<int>::max() ? -1 : best;
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    int best_root = -1;
    std::pair<int, int> best_edge{-1, -1};
    std::vector<int> dist, par;
    for (int r = 0; r < g.n(); ++r) {
        int before = best;
        root_scan(g, r, dist, par, best, best_edge);
        if (best < before) best_root = r;
    }
    if (best_root < 0) return std::nullopt;
    // at the global minimum the two root paths only share the root, so the
    // concatenation is a simple cycle
    int throwaway = std::numeric_limits<int>::max();
    std::pair<int, int> e{-1, -1};
    root_scan(g, best_root, dist, par, throwaway, e);
    auto walk_up = [&](int v) {
        std::vector<int> p;
        for (int c = v; c != -1; c = par[c]) p.push_back(c);
        std::reverse(p.begin(), p.end());
        return p; // best_root .. v
    };
    auto pu = walk_up(e.first), pw = walk_up(e.second);
    std::vector<int> cycle = pu;
    for (size_t i = pw.size(); i-- > 1;) cycle.push_back(pw[i]);
    std::vector<char> seen(g.n(), 0);
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (seen[cycle[i]]) throw std::logic_error("shortest cycle reconstruction failed");
        seen[cycle[i]] = 1;
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
            throw std::logic_error("shortest cycle reconstruction failed");
    }
    return cycle;
}

} // namespace lc
