#include "lc/minor.hpp"

#include "lc/connectivity_core.hpp"

#include <algorithm>
#include <set>

namespace lc {

bool validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
    if (static_cast<int>(m.parts.size()) != h.n()) return false;
    std::vector<int> owner(g.n(), -1);
    for (size_t i = 0; i < m.parts.size(); ++i) {
        if (m.parts[i].empty()) return false;
        for (int v : m.parts[i]) {
            if (v < 0 || v >= g.n() || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
        }
    }
    for (const auto& part : m.parts) {
        std::vector<char> alive(g.n(), 0);
        for (int v : part) alive[v] = 1;
        if (component_of(g, part[0], alive).size() != part.size()) return false;
    }
    for (auto [a, b] : h.edges()) {
        bool found = false;
        for (int u : m.parts[a]) {
            for (int w : g.neighbors(u))
                if (owner[w] == b) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

namespace {

// Pattern vertices with matching neighborhoods are interchangeable: any model
// stays valid after permuting their branch sets. Grouping them and forcing
// the minimum g vertex of consecutive parts to increase removes a factorial
// from the search (the big win on bicliques).
bool interchangeable(const Graph& h, int i, int j) {
    std::set<int> ni, nj;
    for (int w : h.neighbors(i))
        if (w != j) ni.insert(w);
    for (int w : h.neighbors(j))
        if (w != i) nj.insert(w);
    return ni == nj;
}

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    int gn, hn;
    std::vector<std::uint64_t> adj; // g adjacency as bitmasks
    std::vector<int> ord;           // slot -> h vertex
    std::vector<char> chain;        // slot interchangeable with previous slot
    std::vector<std::uint32_t> need;   // slot -> bitmask of earlier adjacent slots
    std::vector<std::uint32_t> touch;  // g vertex -> bitmask of assigned slots it neighbors
    std::vector<std::uint64_t> parts;  // slot -> assigned vertex mask
    std::vector<int> part_min;
    std::uint64_t unassigned;
    long long budget;

    MinorSearch(const Graph& g_, const Graph& h_, long long b)
        : g(g_), h(h_), gn(g_.n()), hn(h_.n()), budget(b) {
        adj.assign(gn, 0);
        for (auto [a, c] : g.edges()) {
            adj[a] |= 1ull << c;
            adj[c] |= 1ull << a;
        }
        // slots: interchangeability classes, high degree first
        std::vector<char> placed(hn, 0);
        std::vector<std::vector<int>> classes;
        std::vector<int> verts(hn);
        for (int i = 0; i < hn; ++i) verts[i] = i;
        std::sort(verts.begin(), verts.end(), [&](int a, int c) {
            if (h.degree(a) != h.degree(c)) return h.degree(a) > h.degree(c);
            return a < c;
        });
        for (int v : verts) {
            if (placed[v]) continue;
            std::vector<int> cls = {v};
            placed[v] = 1;
            for (int w : verts)
                if (!placed[w]) {
                    bool ok = true;
                    for (int x : cls)
                        if (!interchangeable(h, x, w)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        cls.push_back(w);
                        placed[w] = 1;
                    }
                }
            classes.push_back(std::move(cls));
        }
        for (const auto& cls : classes)
            for (size_t i = 0; i < cls.size(); ++i) {
                chain.push_back(i > 0);
                ord.push_back(cls[i]);
            }
        std::vector<int> slot_of(hn);
        for (int t = 0; t < hn; ++t) slot_of[ord[t]] = t;
        need.assign(hn, 0);
        for (int t = 0; t < hn; ++t)
            for (int w : h.neighbors(ord[t]))
                if (slot_of[w] < t) need[t] |= 1u << slot_of[w];
        touch.assign(gn, 0);
        parts.assign(hn, 0);
        part_min.assign(hn, -1);
        unassigned = gn == 64 ? ~0ull : (1ull << gn) - 1;
    }

    void step() {
        if (--budget < 0) throw search_budget_exceeded();
    }

    std::uint64_t nbrs(std::uint64_t s) const {
        std::uint64_t out = 0;
        while (s) {
            int v = __builtin_ctzll(s);
            s &= s - 1;
            out |= adj[v];
        }
        return out;
    }

    bool assign_and_descend(int t, std::uint64_t s, int mn) {
        parts[t] = s;
        part_min[t] = mn;
        unassigned &= ~s;
        std::uint64_t touched = nbrs(s) & unassigned;
        std::uint64_t it = touched;
        while (it) {
            int v = __builtin_ctzll(it);
            it &= it - 1;
            touch[v] |= 1u << t;
        }
        bool found = fill_slot(t + 1);
        if (found) return true; // leave the assignment in place for run()
        it = touched;
        while (it) {
            int v = __builtin_ctzll(it);
            it &= it - 1;
            touch[v] &= ~(1u << t);
        }
        unassigned |= s;
        parts[t] = 0;
        part_min[t] = -1;
        return false;
    }

    // Enumerate connected subsets containing their minimum vertex `seed`,
    // growing only into allowed vertices. Each subset is visited once via the
    // include/ban split on extension vertices.
    bool grow(int t, std::uint64_t s, std::uint32_t have, std::uint64_t allow,
              std::uint64_t banned, int seed, int room) {
        step();
        if ((have & need[t]) == need[t])
            if (assign_and_descend(t, s, seed)) return true;
        if (__builtin_popcountll(s) >= room) return false;
        std::uint64_t ext = nbrs(s) & allow & ~banned & ~s;
        while (ext) {
            int v = __builtin_ctzll(ext);
            ext &= ext - 1;
            std::uint64_t bit = 1ull << v;
            if (grow(t, s | bit, have | touch[v], allow, banned, seed, room)) return true;
            banned |= bit;
        }
        return false;
    }

    bool fill_slot(int t) {
        if (t == hn) return true;
        step();
        int later = hn - t - 1;
        int room = __builtin_popcountll(unassigned) - later;
        if (room <= 0) return false;
        std::uint64_t seeds = unassigned;
        if (chain[t] && part_min[t - 1] >= 0)
            seeds &= ~((part_min[t - 1] >= 63) ? ~0ull : ((1ull << (part_min[t - 1] + 1)) - 1));
        while (seeds) {
            int s = __builtin_ctzll(seeds);
            seeds &= seeds - 1;
            std::uint64_t allow = unassigned & ~((s >= 63) ? ~0ull : ((1ull << (s + 1)) - 1));
            if (grow(t, 1ull << s, touch[s], allow, 0, s, room)) return true;
        }
        return false;
    }

    std::optional<MinorModel> run() {
        if (gn < hn || g.m() < h.m()) return std::nullopt;
        if (!fill_slot(0)) return std::nullopt;
        MinorModel m;
        m.parts.assign(hn, {});
        for (int t = 0; t < hn; ++t) {
            std::uint64_t s = parts[t];
            while (s) {
                m.parts[ord[t]].push_back(__builtin_ctzll(s));
                s &= s - 1;
            }
        }
        return m;
    }
};

} // namespace

std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h, long long budget) {
    if (g.n() > 64) throw std::invalid_argument("minor search limited to 64 vertices");
    if (h.n() == 0) return MinorModel{};
    if (g.n() == 0) return std::nullopt;
    MinorSearch s(g, h, budget);
    auto res = s.run();
    if (res && !validate_minor_model(g, h, *res))
        throw std::logic_error("minor search produced an invalid model");
    return res;
}

namespace {

std::optional<MinorModel> minor_blockwise(const Graph& g, const Graph& h, long long budget) {
    auto bd = block_decomposition(g);
    for (const auto& blk : bd.blocks) {
        if (static_cast<int>(blk.size()) < h.n()) continue;
        Graph sub = g.induced(blk);
        if (auto m = find_minor_model(sub, h, budget)) {
            // map block-local indices back to g
            for (auto& part : m->parts)
                for (int& v : part) v = *g.index_of(sub.id_of(v));
            return m;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<MinorModel> contains_minor(const Graph& g, const Graph& h) {
    if (h.n() > 6) throw std::invalid_argument("oracle out of range: pattern over 6 vertices");
    constexpr long long kBudget = 200'000'000;
    if (h.n() >= 3 && is_k_connected(h, 2)) return minor_blockwise(g, h, kBudget);
    if (g.n() > 14) throw std::invalid_argument("oracle out of range: graph over 14 vertices");
    return find_minor_model(g, h, kBudget);
}

bool contains_minor_budgeted(const Graph& g, const Graph& h, long long budget) {
    if (h.n() >= 3 && is_k_connected(h, 2)) return minor_blockwise(g, h, budget).has_value();
    return find_minor_model(g, h, budget).has_value();
}

bool contains_minor_naive(const Graph& g, const Graph& h) {
    if (g.n() > 9) throw std::invalid_argument("naive minor check limited to 9 vertices");
    if (h.n() == 0) return true;
    if (g.n() < h.n()) return false;
    int hn = h.n();
    std::vector<int> assign(g.n(), 0); // 0 = unused, 1..hn = pattern vertex
    while (true) {
        MinorModel m;
        m.parts.assign(hn, {});
        for (int v = 0; v < g.n(); ++v)
            if (assign[v] > 0) m.parts[assign[v] - 1].push_back(v);
        bool full = true;
        for (const auto& p : m.parts)
            if (p.empty()) {
                full = false;
                break;
            }
        if (full && validate_minor_model(g, h, m)) return true;
        int i = 0;
        while (i < g.n() && assign[i] == hn) {
            assign[i] = 0;
            ++i;
        }
        if (i == g.n()) return false;
        ++assign[i];
    }
}

Graph subdivide_edges(const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& sel,
                      int times) {
    std::set<std::pair<NodeId, NodeId>> remove;
    for (auto [u, v] : sel) {
        if (!g.has_edge_ids(u, v)) throw std::invalid_argument("subdividing a missing edge");
        auto key = std::minmax(u, v);
        if (!remove.insert({key.first, key.second}).second)
            throw std::invalid_argument("edge listed twice");
    }
    NodeId next = 0;
    for (NodeId id : g.ids()) next = std::max(next, id + 1);
    std::vector<NodeId> nodes = g.ids();
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (auto [u, v] : g.edge_ids()) {
        auto key = std::minmax(u, v);
        if (!remove.count({key.first, key.second})) {
            edges.emplace_back(u, v);
            continue;
        }
        NodeId prev = u;
        for (int i = 0; i < times; ++i) {
            nodes.push_back(next);
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(std::move(nodes), edges);
}

} // namespace lc
