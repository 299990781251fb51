#include "lc/ears.hpp"

#include "lc/connectivity_core.hpp"
#include "lc/minor.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace lc {

namespace {

// Shortest path from `from` to the first vertex satisfying `stop`, moving
// only through vertices allowed by `mid`. The stop vertex itself does not
// need to pass `mid`. Skips the single move `from -> banned_first`.
std::vector<int> bfs_path(const Graph& g, int from, const std::vector<char>& mid,
                          const std::vector<char>& stop, int banned_first) {
    std::vector<int> par(g.n(), -2);
    par[from] = -1;
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.neighbors(x)) {
            if (x == from && w == banned_first) continue;
            if (stop[w]) {
                std::vector<int> path = {w};
                for (int c = x; c != -1; c = par[c]) path.push_back(c);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (mid[w] && par[w] == -2) {
                par[w] = x;
                q.push(w);
            }
        }
    }
    return {};
}

} // namespace

std::optional<OpenEarDecomposition> open_ear_decomposition(const Graph& g) {
    if (g.n() < 3 || !g.connected() || !cut_vertices(g).empty()) return std::nullopt;
    OpenEarDecomposition d;
    d.x0 = 0;
    d.y0 = g.neighbors(0)[0];
    std::vector<char> placed(g.n(), 0);
    placed[d.x0] = placed[d.y0] = 1;
    int count = 2;
    while (count < g.n()) {
        int a = -1, v = -1;
        for (int p = 0; p < g.n() && a < 0; ++p) {
            if (!placed[p]) continue;
            for (int w : g.neighbors(p))
                if (!placed[w]) {
                    a = p;
                    v = w;
                    break;
                }
        }
        if (a < 0) return std::nullopt; // disconnected, caught above anyway
        // path from v to another placed vertex that avoids a entirely
        std::vector<char> mid(g.n(), 0), stop(g.n(), 0);
        for (int i = 0; i < g.n(); ++i) {
            mid[i] = !placed[i];
            stop[i] = placed[i] && i != a;
        }
        mid[a] = 0;
        auto path = bfs_path(g, v, mid, stop, a);
        if (path.empty()) return std::nullopt;
        std::vector<int> ear = {a};
        ear.insert(ear.end(), path.begin(), path.end());
        for (size_t i = 1; i + 1 < ear.size(); ++i) {
            placed[ear[i]] = 1;
            ++count;
        }
        d.ears.push_back(std::move(ear));
    }
    return d;
}

bool validate_open_ears(const Graph& g, const OpenEarDecomposition& d) {
    if (d.x0 < 0 || d.y0 < 0 || d.x0 >= g.n() || d.y0 >= g.n()) return false;
    if (d.x0 == d.y0 || !g.has_edge(d.x0, d.y0)) return false;
    std::vector<char> placed(g.n(), 0);
    placed[d.x0] = placed[d.y0] = 1;
    int count = 2;
    for (const auto& ear : d.ears) {
        if (ear.size() < 3) return false;
        int a = ear.front(), b = ear.back();
        if (a == b || !placed[a] || !placed[b]) return false;
        for (size_t i = 0; i + 1 < ear.size(); ++i)
            if (!g.has_edge(ear[i], ear[i + 1])) return false;
        for (size_t i = 1; i + 1 < ear.size(); ++i) {
            if (placed[ear[i]]) return false;
            placed[ear[i]] = 1;
            ++count;
        }
    }
    return count == g.n();
}

std::optional<ClosedEarDecomposition> closed_ear_decomposition(const Graph& g) {
    if (!is_2_edge_connected(g)) return std::nullopt;
    ClosedEarDecomposition d;
    int s = 0, t = g.neighbors(0)[0];
    // cycle through edge (s, t): path t -> s not using that edge
    std::vector<char> mid(g.n(), 1), stop(g.n(), 0);
    stop[s] = 1;
    mid[s] = 0;
    auto path = bfs_path(g, t, mid, stop, s);
    if (path.empty()) return std::nullopt;
    d.base_cycle = {s};
    d.base_cycle.insert(d.base_cycle.end(), path.begin(), path.end() - 1);
    std::vector<char> placed(g.n(), 0);
    for (int v : d.base_cycle) placed[v] = 1;
    int count = static_cast<int>(d.base_cycle.size());
    while (count < g.n()) {
        int a = -1, v = -1;
        for (int p = 0; p < g.n() && a < 0; ++p) {
            if (!placed[p]) continue;
            for (int w : g.neighbors(p))
                if (!placed[w]) {
                    a = p;
                    v = w;
                    break;
                }
        }
        if (a < 0) return std::nullopt;
        for (int i = 0; i < g.n(); ++i) {
            mid[i] = !placed[i];
            stop[i] = placed[i];
        }
        auto epath = bfs_path(g, v, mid, stop, a); // may end at a, via another edge
        if (epath.empty()) return std::nullopt;
        std::vector<int> ear = {a};
        ear.insert(ear.end(), epath.begin(), epath.end());
        for (size_t i = 1; i + 1 < ear.size(); ++i) {
            placed[ear[i]] = 1;
            ++count;
        }
        d.ears.push_back(std::move(ear));
    }
    return d;
}

bool validate_closed_ears(const Graph& g, const ClosedEarDecomposition& d) {
    int c = static_cast<int>(d.base_cycle.size());
    if (c < 3) return false;
    std::vector<char> placed(g.n(), 0);
    for (int i = 0; i < c; ++i) {
        int v = d.base_cycle[i];
        if (v < 0 || v >= g.n() || placed[v]) return false;
        placed[v] = 1;
        if (!g.has_edge(v, d.base_cycle[(i + 1) % c])) return false;
    }
    int count = c;
    for (const auto& ear : d.ears) {
        if (ear.size() < 3) return false;
        int a = ear.front(), b = ear.back();
        if (!placed[a] || !placed[b]) return false; // a == b allowed here
        for (size_t i = 0; i + 1 < ear.size(); ++i)
            if (!g.has_edge(ear[i], ear[i + 1])) return false;
        for (size_t i = 1; i + 1 < ear.size(); ++i) {
            if (placed[ear[i]]) return false;
            placed[ear[i]] = 1;
            ++count;
        }
    }
    return count == g.n();
}

namespace {

struct SeqSearch {
    const Graph& g;
    int r, u;
    long long* budget;
    std::vector<int> idx; // -1 unplaced, 0 base, k = inner of ear k
    std::vector<std::vector<int>> ears;
    int placed_count = 0;

    SeqSearch(const Graph& g_, int r_, int u_, long long* b)
        : g(g_), r(r_), u(u_), budget(b), idx(g_.n(), -1) {}

    void step() {
        if (--*budget < 0) throw search_budget_exceeded();
    }

    bool final_check() const {
        int last = static_cast<int>(ears.size()) + 1; // index of the closing ear
        for (int w = 0; w < g.n(); ++w) {
            if (w == u) continue;
            bool later = false;
            for (int y : g.neighbors(w)) {
                int iy = y == u ? last : idx[y];
                if (iy > idx[w]) {
                    later = true;
                    break;
                }
            }
            if (!later) return false;
        }
        return true;
    }

    bool search() {
        step();
        if (placed_count == g.n() - 1) {
            // close with the ear a - u - b
            int a = -1, b = -1;
            for (int y : g.neighbors(u)) {
                if (y == r) continue;
                if (a < 0)
                    a = y;
                else if (b < 0)
                    b = y;
            }
            if (b < 0) return false;
            if (!final_check()) return false;
            ears.push_back({a, u, b});
            return true;
        }
        // dead-vertex prune
        for (int w = 0; w < g.n(); ++w) {
            if (idx[w] < 0 || w == u) continue;
            bool open = false;
            for (int y : g.neighbors(w))
                if (idx[y] < 0 || idx[y] > idx[w] || y == u) {
                    open = true;
                    break;
                }
            if (!open) return false;
        }
        int k = static_cast<int>(ears.size()) + 1;
        for (int a = 0; a < g.n(); ++a) {
            if (idx[a] < 0) continue;
            for (int w1 : g.neighbors(a)) {
                if (idx[w1] >= 0 || w1 == u) continue;
                std::vector<int> path = {a, w1};
                idx[w1] = k;
                ++placed_count;
                if (grow(path, k)) return true;
                idx[w1] = -1;
                --placed_count;
            }
        }
        return false;
    }

    bool grow(std::vector<int>& path, int k) {
        step();
        int x = path.back();
        int a = path.front();
        for (int y : g.neighbors(x)) {
            if (idx[y] >= 0 && idx[y] < k && y != a) {
                path.push_back(y);
                ears.push_back(path);
                if (search()) return true;
                ears.pop_back();
                path.pop_back();
            } else if (idx[y] < 0 && y != u) {
                path.push_back(y);
                idx[y] = k;
                ++placed_count;
                if (grow(path, k)) return true;
                idx[y] = -1;
                --placed_count;
                path.pop_back();
            }
        }
        return false;
    }
};

} // namespace

namespace {

std::optional<EarSequence3C> seq_for(const Graph& g, int r, int u, long long* budget) {
    for (int y0 : g.neighbors(r)) {
        if (y0 == u) continue;
        SeqSearch s(g, r, u, budget);
        s.idx[r] = 0;
        s.idx[y0] = 0;
        s.placed_count = 2;
        if (s.search()) {
            EarSequence3C out;
            out.r = r;
            out.u = u;
            out.x0 = r;
            out.y0 = y0;
            out.ears = std::move(s.ears);
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<EarSequence3C> nonseparating_ear_sequence(const Graph& g, long long budget) {
    if (g.n() > 12) throw std::invalid_argument("ear sequence search limited to 12 vertices");
    if (g.n() < 4 || !is_k_connected(g, 3)) return std::nullopt;
    for (auto [re, ue] : g.edges())
        for (int flip = 0; flip < 2; ++flip) {
            if (auto s = seq_for(g, flip ? ue : re, flip ? re : ue, &budget)) return s;
        }
    return std::nullopt;
}

std::optional<EarSequence3C> nonseparating_ear_sequence(const Graph& g, int r, int u,
                                                        long long budget) {
    if (g.n() > 12) throw std::invalid_argument("ear sequence search limited to 12 vertices");
    if (!g.has_edge(r, u)) throw std::invalid_argument("avoided pair is not an edge");
    if (g.n() < 4 || !is_k_connected(g, 3)) return std::nullopt;
    return seq_for(g, r, u, &budget);
}

bool validate_ear_sequence_3c(const Graph& g, const EarSequence3C& d) {
    if (d.r < 0 || d.u < 0 || d.r == d.u || !g.has_edge(d.r, d.u)) return false;
    if (d.x0 != d.r && d.y0 != d.r) return false;
    if (d.x0 == d.u || d.y0 == d.u) return false;
    OpenEarDecomposition od{d.x0, d.y0, d.ears};
    if (!validate_open_ears(g, od)) return false;
    // no ear may use the edge (r, u)
    for (const auto& ear : d.ears)
        for (size_t i = 0; i + 1 < ear.size(); ++i) {
            auto lo = std::minmax(ear[i], ear[i + 1]);
            if (lo == std::minmax(d.r, d.u)) return false;
        }
    const auto& last = d.ears.back();
    if (last.size() != 3 || last[1] != d.u) return false;
    if (last[0] == d.r || last[2] == d.r) return false;
    // creation indices: base 0, ear i -> i+1
    std::vector<int> idx(g.n(), -1);
    idx[d.x0] = idx[d.y0] = 0;
    for (size_t e = 0; e < d.ears.size(); ++e)
        for (size_t i = 1; i + 1 < d.ears[e].size(); ++i) idx[d.ears[e][i]] = static_cast<int>(e) + 1;
    int last_idx = static_cast<int>(d.ears.size());
    for (int w = 0; w < g.n(); ++w) {
        if (idx[w] == last_idx) continue; // u itself
        bool later = false;
        for (int y : g.neighbors(w))
            if (idx[y] > idx[w]) {
                later = true;
                break;
            }
        if (!later) return false;
    }
    return true;
}

// ---------------- series-parallel nested ears ----------------

namespace {

struct Frag {
    enum Kind { Leaf, Series, Parallel } kind;
    int s, t;
    std::vector<int> children;
    std::vector<char> flip;
};

struct SPReduce {
    std::vector<Frag> pool;
    struct E {
        int s, t, frag;
        bool alive;
    };
    std::vector<E> edges;
    std::vector<std::set<int>> inc;
    std::map<std::pair<int, int>, int> by_pair;
    std::queue<int> deg2;

    explicit SPReduce(const Graph& g) : inc(g.n()) {
        for (auto [a, b] : g.edges()) {
            pool.push_back({Frag::Leaf, a, b, {}, {}});
            add_edge(a, b, static_cast<int>(pool.size()) - 1);
        }
        for (int v = 0; v < g.n(); ++v) deg2.push(v);
    }

    void absorb(Frag& parent, int child, bool flip) {
        const Frag& c = pool[child];
        if (c.kind == parent.kind && parent.kind == Frag::Series) {
            if (!flip)
                for (size_t i = 0; i < c.children.size(); ++i) {
                    parent.children.push_back(c.children[i]);
                    parent.flip.push_back(c.flip[i]);
                }
            else
                for (size_t i = c.children.size(); i-- > 0;) {
                    parent.children.push_back(c.children[i]);
                    parent.flip.push_back(!c.flip[i]);
                }
        } else if (c.kind == parent.kind && parent.kind == Frag::Parallel) {
            for (size_t i = 0; i < c.children.size(); ++i) {
                parent.children.push_back(c.children[i]);
                parent.flip.push_back(flip ? !c.flip[i] : c.flip[i]);
            }
        } else {
            parent.children.push_back(child);
            parent.flip.push_back(flip);
        }
    }

    void add_edge(int s, int t, int frag) {
        auto key = std::minmax(s, t);
        auto it = by_pair.find({key.first, key.second});
        if (it != by_pair.end()) {
            int other = it->second;
            Frag p{Frag::Parallel, edges[other].s, edges[other].t, {}, {}};
            absorb(p, edges[other].frag, false);
            absorb(p, frag, edges[other].s != s);
            remove_edge(other);
            pool.push_back(std::move(p));
            add_edge(edges[other].s, edges[other].t, static_cast<int>(pool.size()) - 1);
            return;
        }
        int id = static_cast<int>(edges.size());
        edges.push_back({s, t, frag, true});
        by_pair[{key.first, key.second}] = id;
        inc[s].insert(id);
        inc[t].insert(id);
        deg2.push(s);
        deg2.push(t);
    }

    void remove_edge(int id) {
        auto& e = edges[id];
        e.alive = false;
        auto key = std::minmax(e.s, e.t);
        by_pair.erase({key.first, key.second});
        inc[e.s].erase(id);
        inc[e.t].erase(id);
        deg2.push(e.s);
        deg2.push(e.t);
    }

    // returns the root fragment id, or -1 when the graph is not
    // series-parallel reducible to one edge
    int run() {
        while (!deg2.empty()) {
            int v = deg2.front();
            deg2.pop();
            if (inc[v].size() != 2) continue;
            auto it = inc[v].begin();
            int e1 = *it++;
            int e2 = *it;
            int a = edges[e1].s == v ? edges[e1].t : edges[e1].s;
            int b = edges[e2].s == v ? edges[e2].t : edges[e2].s;
            Frag f{Frag::Series, a, b, {}, {}};
            absorb(f, edges[e1].frag, edges[e1].s != a);
            absorb(f, edges[e2].frag, edges[e2].s != v);
            remove_edge(e1);
            remove_edge(e2);
            pool.push_back(std::move(f));
            add_edge(a, b, static_cast<int>(pool.size()) - 1);
        }
        int root = -1;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i].alive) continue;
            if (root >= 0) return -1;
            root = edges[i].frag;
        }
        return root;
    }
};

struct SPBuilder {
    const std::vector<Frag>& pool;
    NestedEarDecomposition out;

    int vs(const Frag& f, bool flip) const { return flip ? f.t : f.s; }
    int vt(const Frag& f, bool flip) const { return flip ? f.s : f.t; }

    // appends the realization of fragment fi (oriented by flip) to path,
    // which must already end with the fragment's source vertex; cid is the
    // container the path belongs to (-1 base, else ear index)
    void realize(int fi, bool flip, int cid, std::vector<int>& path) {
        const Frag& f = pool[fi];
        if (f.kind == Frag::Leaf) {
            path.push_back(vt(f, flip));
            return;
        }
        if (f.kind == Frag::Series) {
            if (!flip)
                for (size_t i = 0; i < f.children.size(); ++i)
                    realize(f.children[i], f.flip[i], cid, path);
            else
                for (size_t i = f.children.size(); i-- > 0;)
                    realize(f.children[i], !f.flip[i], cid, path);
            return;
        }
        // parallel: one child continues the path, the rest become ears
        int sa = static_cast<int>(path.size()) - 1;
        int spine = -1;
        for (size_t i = 0; i < f.children.size(); ++i)
            if (pool[f.children[i]].kind == Frag::Leaf) {
                spine = static_cast<int>(i);
                break;
            }
        if (spine < 0) spine = 0;
        realize(f.children[spine], static_cast<bool>(f.flip[spine]) != flip, cid, path);
        int sb = static_cast<int>(path.size()) - 1;
        for (size_t i = 0; i < f.children.size(); ++i) {
            if (static_cast<int>(i) == spine) continue;
            int k = static_cast<int>(out.ears.size());
            out.ears.push_back({cid, sa, sb, {}});
            std::vector<int> ep = {path[sa]};
            realize(f.children[i], static_cast<bool>(f.flip[i]) != flip, k, ep);
            out.ears[k].inner.assign(ep.begin() + 1, ep.end() - 1);
        }
    }
};

} // namespace

std::vector<int> NestedEarDecomposition::host_seq(int host) const {
    if (host < 0) return base;
    return ear_path(host);
}

std::vector<int> NestedEarDecomposition::ear_path(int k) const {
    auto hs = host_seq(ears[k].host);
    std::vector<int> p = {hs[ears[k].sa]};
    p.insert(p.end(), ears[k].inner.begin(), ears[k].inner.end());
    p.push_back(hs[ears[k].sb]);
    return p;
}

std::vector<std::vector<int>> NestedEarDecomposition::all_ear_paths() const {
    std::vector<std::vector<int>> seqs(ears.size());
    for (size_t k = 0; k < ears.size(); ++k) {
        const auto& host = ears[k].host < 0 ? base : seqs[ears[k].host];
        seqs[k].push_back(host[ears[k].sa]);
        seqs[k].insert(seqs[k].end(), ears[k].inner.begin(), ears[k].inner.end());
        seqs[k].push_back(host[ears[k].sb]);
    }
    return seqs;
}

std::optional<NestedEarDecomposition> nested_ear_decomposition(const Graph& g) {
    if (g.n() < 2 || !g.connected()) return std::nullopt;
    if (g.n() == 2) {
        NestedEarDecomposition d;
        d.base = {0, 1};
        return d;
    }
    // the reduction would also swallow trees and graphs with cut vertices,
    // but the decomposition is only defined for 2-connected inputs
    if (!is_k_connected(g, 2)) return std::nullopt;
    SPReduce red(g);
    int root = red.run();
    if (root < 0) return std::nullopt;
    SPBuilder b{red.pool, {}};
    b.out.base.push_back(red.pool[root].s);
    b.realize(root, false, -1, b.out.base);
    if (!validate_nested_ears(g, b.out)) return std::nullopt;
    return b.out;
}

bool validate_nested_ears(const Graph& g, const NestedEarDecomposition& d) {
    if (d.base.size() < 2) return false;
    std::vector<char> seen(g.n(), 0);
    auto touch = [&](int v) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
        return true;
    };
    for (int v : d.base)
        if (!touch(v)) return false;
    for (const auto& e : d.ears) {
        if (e.inner.empty()) return false;
        for (int v : e.inner)
            if (!touch(v)) return false;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v]) return false;

    auto seqs = d.all_ear_paths();
    std::set<std::pair<int, int>> used;
    auto use = [&](int a, int b) {
        if (a == b || !g.has_edge(a, b)) return false;
        auto key = std::minmax(a, b);
        return used.insert({key.first, key.second}).second;
    };
    for (size_t i = 0; i + 1 < d.base.size(); ++i)
        if (!use(d.base[i], d.base[i + 1])) return false;
    for (size_t k = 0; k < d.ears.size(); ++k) {
        const auto& e = d.ears[k];
        if (e.host < -1 || e.host >= static_cast<int>(k)) return false;
        int hostlen = e.host < 0 ? static_cast<int>(d.base.size())
                                 : static_cast<int>(seqs[e.host].size());
        if (e.sa < 0 || e.sb <= e.sa || e.sb >= hostlen) return false;
        for (size_t i = 0; i + 1 < seqs[k].size(); ++i)
            if (!use(seqs[k][i], seqs[k][i + 1])) return false;
    }
    if (static_cast<int>(used.size()) != g.m()) return false;
    // spans on a common host must not cross
    for (size_t i = 0; i < d.ears.size(); ++i)
        for (size_t j = i + 1; j < d.ears.size(); ++j) {
            if (d.ears[i].host != d.ears[j].host) continue;
            int a1 = d.ears[i].sa, b1 = d.ears[i].sb;
            int a2 = d.ears[j].sa, b2 = d.ears[j].sb;
            bool cross = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
            if (cross) return false;
        }
    return true;
}

} // namespace lc
