#include "lc/minor_free.hpp"

#include "lc/connectivity_core.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

// 2-connected series-parallel graphs, certified through a nested ear
// decomposition. Ear 0 is a path between two terminals; every further ear is
// a path (or a single chord edge) whose two endpoints sit on one older ear,
// and ears sharing a host must span nested-or-disjoint position intervals.
// Eppstein's characterization: a 2-connected graph has such a decomposition
// exactly when it is series-parallel. Every internal node of an ear carries
// the ear's index, length, endpoint ids and its own position, plus where the
// ear attaches on its host and the innermost hosted interval over the gap on
// each side, so the nesting argument of the path-outerplanar sweep repeats
// per ear. Chord ears carry no certificate at all; both endpoints see the
// edge and fold it into their interval bookkeeping.

namespace lc {

namespace {

struct Iv {
    std::uint64_t a, b;
    bool operator==(const Iv& o) const { return a == o.a && b == o.b; }
};

bool contains_iv(const Iv& x, const Iv& y) { return x.a <= y.a && y.b <= x.b; }

struct SpCert {
    bool hosted = false;
    std::uint64_t ear = 0, len = 0, pos = 0, x = 0, y = 0;
    std::uint64_t host = 0, a = 0, b = 0;
    std::optional<Iv> gl, gr;
};

SpCert read_sp(const Certificate& c) {
    CertReader r(c);
    SpCert f;
    std::uint8_t flags = r.u8();
    if (flags & ~7u) throw cert_parse_error();
    f.hosted = flags & 1;
    f.ear = r.u64();
    f.len = r.u64();
    f.pos = r.u64();
    f.x = r.u64();
    f.y = r.u64();
    if (f.hosted) {
        f.host = r.u64();
        f.a = r.u64();
        f.b = r.u64();
    }
    if (flags & 2) f.gl = Iv{r.u64(), r.u64()};
    if (flags & 4) f.gr = Iv{r.u64(), r.u64()};
    r.expect_end();
    return f;
}

Certificate write_sp(const SpCert& f) {
    CertWriter w;
    w.u8(std::uint8_t((f.hosted ? 1 : 0) | (f.gl ? 2 : 0) | (f.gr ? 4 : 0)));
    w.u64(f.ear);
    w.u64(f.len);
    w.u64(f.pos);
    w.u64(f.x);
    w.u64(f.y);
    if (f.hosted) {
        w.u64(f.host);
        w.u64(f.a);
        w.u64(f.b);
    }
    if (f.gl) {
        w.u64(f.gl->a);
        w.u64(f.gl->b);
    }
    if (f.gr) {
        w.u64(f.gr->a);
        w.u64(f.gr->b);
    }
    return w.take();
}

// --- prover: reduce to a series-parallel tree, unwind into ears ---

struct SpTreeNode {
    int kind; // 0 edge, 1 series, 2 parallel
    NodeId u, w;
    int c1 = -1, c2 = -1;
};

struct SpTree {
    std::vector<SpTreeNode> nodes;
    int root = -1;
    NodeId s = 0, t = 0;
};

// series/parallel reduction of the multigraph; nullopt when it jams, which
// for a 2-connected input means a k4 minor
std::optional<SpTree> sp_reduce(const Graph& g) {
    SpTree tree;
    struct Edge {
        NodeId u, w;
        int node;
        bool alive = true;
    };
    std::vector<Edge> edges;
    std::map<NodeId, std::set<int>> inc;
    std::map<std::pair<NodeId, NodeId>, std::set<int>> by_key;
    auto link = [&](int ei) {
        inc[edges[ei].u].insert(ei);
        inc[edges[ei].w].insert(ei);
        by_key[edge_key(edges[ei].u, edges[ei].w)].insert(ei);
    };
    auto unlink = [&](int ei) {
        edges[ei].alive = false;
        inc[edges[ei].u].erase(ei);
        inc[edges[ei].w].erase(ei);
        auto k = edge_key(edges[ei].u, edges[ei].w);
        by_key[k].erase(ei);
        if (by_key[k].empty()) by_key.erase(k);
    };
    for (auto [u, w] : g.edge_ids()) {
        tree.nodes.push_back({0, u, w});
        edges.push_back({u, w, (int)tree.nodes.size() - 1});
        link((int)edges.size() - 1);
    }
    std::size_t alive = edges.size();
    while (alive > 1) {
        // parallel merges first
        bool did = false;
        for (auto& [key, set] : by_key) {
            if (set.size() < 2) continue;
            int e = *set.begin(), f = *std::next(set.begin());
            tree.nodes.push_back({2, edges[e].u, edges[e].w, edges[e].node, edges[f].node});
            unlink(f);
            edges[e].node = (int)tree.nodes.size() - 1;
            --alive;
            did = true;
            break;
        }
        if (did) continue;
        // then a series merge at any degree-2 node
        for (auto& [v, ies] : inc) {
            if (ies.size() != 2) continue;
            int e = *ies.begin(), f = *std::next(ies.begin());
            NodeId x = edges[e].u == v ? edges[e].w : edges[e].u;
            NodeId y = edges[f].u == v ? edges[f].w : edges[f].u;
            // x == y would be a parallel pair, handled above
            tree.nodes.push_back({1, x, y, edges[e].node, edges[f].node});
            unlink(e);
            unlink(f);
            tree.nodes.back().u = x;
            tree.nodes.back().w = y;
            edges.push_back({x, y, (int)tree.nodes.size() - 1});
            link((int)edges.size() - 1);
            --alive;
            did = true;
            break;
        }
        if (!did) return std::nullopt;
    }
    for (auto& e : edges)
        if (e.alive) {
            tree.root = e.node;
            tree.s = e.u;
            tree.t = e.w;
        }
    return tree;
}

struct Ear {
    int host; // -1 for ear 0
    std::uint64_t a = 0, b = 0;
    std::vector<NodeId> verts; // length len+1, endpoints included
};

struct EarPlan {
    std::vector<Ear> ears;
    std::vector<std::vector<Iv>> spans;            // hosted intervals per ear
    std::map<NodeId, std::pair<int, std::uint64_t>> owner; // ear, pos
};

// walk the leftmost path of t from `from`; parallel residue recorded for later
void sp_walk(const SpTree& tree, int t, NodeId from, std::vector<NodeId>& path,
             std::vector<std::tuple<int, NodeId, NodeId>>& residue) {
    const auto& nd = tree.nodes[t];
    if (nd.kind == 0) {
        path.push_back(from == nd.u ? nd.w : nd.u);
        return;
    }
    if (nd.kind == 1) {
        if (from == nd.u) {
            sp_walk(tree, nd.c1, from, path, residue);
            sp_walk(tree, nd.c2, path.back(), path, residue);
        } else {
            sp_walk(tree, nd.c2, from, path, residue);
            sp_walk(tree, nd.c1, path.back(), path, residue);
        }
        return;
    }
    // parallel: descend into a non-edge child, queue the other
    int walk_child = nd.c1, rest = nd.c2;
    if (tree.nodes[walk_child].kind == 0) std::swap(walk_child, rest);
    NodeId to = from == nd.u ? nd.w : nd.u;
    residue.push_back({rest, from, to});
    sp_walk(tree, walk_child, from, path, residue);
}

void sp_earify(const SpTree& tree, int t, int host, std::uint64_t a, std::uint64_t b,
               NodeId from, NodeId to, EarPlan& plan) {
    const auto& nd = tree.nodes[t];
    if (nd.kind == 0) {
        plan.spans[host].push_back(Iv{a, b}); // chord ear
        return;
    }
    if (nd.kind == 2) {
        sp_earify(tree, nd.c1, host, a, b, from, to, plan);
        sp_earify(tree, nd.c2, host, a, b, from, to, plan);
        return;
    }
    int e = (int)plan.ears.size();
    plan.ears.push_back({host, a, b, {}});
    plan.spans.emplace_back();
    if (host >= 0) plan.spans[host].push_back(Iv{a, b});
    std::vector<NodeId> path = {from};
    std::vector<std::tuple<int, NodeId, NodeId>> residue;
    sp_walk(tree, t, from, path, residue);
    plan.ears[e].verts = path;
    std::map<NodeId, std::uint64_t> lpos;
    for (std::size_t i = 0; i < path.size(); ++i) lpos[path[i]] = i;
    for (std::size_t i = 0; i < path.size(); ++i)
        if (host < 0 || (i > 0 && i + 1 < path.size()))
            plan.owner[path[i]] = {e, i};
    for (auto& [child, rf, rt] : residue)
        sp_earify(tree, child, e, lpos.at(rf), lpos.at(rt), rf, rt, plan);
}

// the root may be a stack of parallel nodes; each non-spine branch spans the
// whole of ear 0
std::optional<EarPlan> sp_plan(const SpTree& tree) {
    EarPlan plan;
    int t = tree.root;
    std::vector<int> pending;
    while (tree.nodes[t].kind == 2) {
        int walk_child = tree.nodes[t].c1, rest = tree.nodes[t].c2;
        if (tree.nodes[walk_child].kind == 0) std::swap(walk_child, rest);
        if (tree.nodes[walk_child].kind == 0) return std::nullopt; // double edge
        pending.push_back(rest);
        t = walk_child;
    }
    if (tree.nodes[t].kind != 1) return std::nullopt;
    sp_earify(tree, t, -1, 0, 0, tree.s, tree.t, plan);
    std::uint64_t len0 = plan.ears[0].verts.size() - 1;
    for (int rest : pending) sp_earify(tree, rest, 0, 0, len0, tree.s, tree.t, plan);
    return plan;
}

// innermost-cover sweep per ear, width-1 intervals allowed
bool sp_covers(std::uint64_t len, std::vector<Iv> spans, std::vector<std::optional<Iv>>& gap) {
    std::vector<std::vector<std::uint64_t>> starts(len + 1);
    std::vector<int> ends_at(len + 1, 0);
    for (const auto& iv : spans) {
        starts[iv.a].push_back(iv.b);
        ++ends_at[iv.b];
    }
    gap.assign(len, std::nullopt);
    std::vector<Iv> stk;
    for (std::uint64_t p = 0; p < len; ++p) {
        int popped = 0;
        while (!stk.empty() && stk.back().b == p) {
            stk.pop_back();
            ++popped;
        }
        if (popped != ends_at[p]) return false;
        std::sort(starts[p].rbegin(), starts[p].rend());
        for (std::uint64_t b : starts[p]) {
            if (!stk.empty() && stk.back().b < b) return false;
            stk.push_back(Iv{p, b});
        }
        gap[p] = stk.empty() ? std::nullopt : std::optional<Iv>(stk.back());
    }
    return true;
}

std::optional<Assignment> sp_prove(const Graph& g) {
    if (g.n() < 3 || !g.connected() || !cut_vertices(g).empty()) return std::nullopt;
    auto tree = sp_reduce(g);
    if (!tree) return std::nullopt;
    auto plan = sp_plan(*tree);
    if (!plan) return std::nullopt;
    std::vector<std::vector<std::optional<Iv>>> gaps(plan->ears.size());
    for (std::size_t e = 0; e < plan->ears.size(); ++e) {
        std::uint64_t len = plan->ears[e].verts.size() - 1;
        if (!sp_covers(len, plan->spans[e], gaps[e])) return std::nullopt;
    }
    Assignment out;
    for (auto& [id, op] : plan->owner) {
        auto [e, pos] = op;
        const Ear& ear = plan->ears[e];
        SpCert f;
        f.ear = e;
        f.len = ear.verts.size() - 1;
        f.pos = pos;
        f.x = ear.verts.front();
        f.y = ear.verts.back();
        if (ear.host >= 0) {
            f.hosted = true;
            f.host = ear.host;
            f.a = ear.a;
            f.b = ear.b;
        }
        if (pos > 0) f.gl = gaps[e][pos - 1];
        if (pos < f.len) f.gr = gaps[e][pos];
        out.node[id] = write_sp(f);
    }
    return out;
}

// --- verifier ---

bool sp_verify(const LocalView& v) {
    SpCert me = read_sp(*v.cert);
    if (me.len < 2 || me.x == me.y) return false;
    if (me.hosted == (me.ear == 0)) return false;
    if (me.hosted) {
        if (me.host >= me.ear) return false;
        if (me.a >= me.b) return false;
        if (me.pos < 1 || me.pos > me.len - 1) return false;
        if (v.id == me.x || v.id == me.y) return false;
    } else {
        if (me.pos > me.len) return false;
        if ((me.pos == 0) != (v.id == me.x)) return false;
        if ((me.pos == me.len) != (v.id == me.y)) return false;
    }
    if (me.gl) {
        if (me.pos == 0) return false;
        if (!(me.gl->a <= me.pos - 1 && me.gl->b >= me.pos && me.gl->b > me.gl->a &&
              me.gl->b <= me.len))
            return false;
    }
    if (me.gr) {
        if (me.pos >= me.len) return false;
        if (!(me.gr->a <= me.pos && me.gr->b >= me.pos + 1 && me.gr->b > me.gr->a &&
              me.gr->b <= me.len))
            return false;
    }

    const std::size_t deg = v.neighbors.size();
    std::vector<SpCert> nb(deg);
    for (std::size_t i = 0; i < deg; ++i) nb[i] = read_sp(*v.neighbors[i].cert);

    // no two neighbors may claim the same slot, and all claims about one ear
    // must agree on its frame
    std::map<std::uint64_t, std::size_t> frame_of;
    for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t j = i + 1; j < deg; ++j)
            if (nb[i].ear == nb[j].ear && nb[i].pos == nb[j].pos) return false;
        auto it = frame_of.find(nb[i].ear);
        if (it == frame_of.end()) {
            frame_of[nb[i].ear] = i;
        } else {
            const SpCert& o = nb[it->second];
            if (nb[i].len != o.len || nb[i].x != o.x || nb[i].y != o.y ||
                nb[i].hosted != o.hosted || nb[i].host != o.host || nb[i].a != o.a ||
                nb[i].b != o.b)
                return false;
        }
    }
    if (frame_of.count(me.ear)) {
        const SpCert& o = nb[frame_of[me.ear]];
        if (me.len != o.len || me.x != o.x || me.y != o.y || me.hosted != o.hosted ||
            me.host != o.host || me.a != o.a || me.b != o.b)
            return false;
    }

    // ears this node is an endpoint of: ear index -> (witness, x side?)
    std::map<std::uint64_t, std::pair<std::size_t, bool>> ends;
    for (std::size_t i = 0; i < deg; ++i) {
        const SpCert& w = nb[i];
        if (w.ear == me.ear) continue;
        bool xs = w.pos == 1 && w.x == v.id;
        bool ys = w.pos == w.len - 1 && w.y == v.id;
        if (!xs && !ys) continue;
        if (ends.count(w.ear)) return false;
        ends[w.ear] = {i, xs};
    }

    bool pred = false, succ = false, have_x = false, have_y = false;
    std::vector<Iv> own;                      // chords and attachments on my ear, at me
    std::map<std::uint64_t, std::vector<Iv>> sides; // spans anchored at my end of each ear in `ends`
    for (std::size_t i = 0; i < deg; ++i) {
        const SpCert& w = nb[i];
        const NodeId wid = v.neighbors[i].id;
        if (w.ear == me.ear) {
            if (w.pos == me.pos + 1) {
                if (succ) return false;
                succ = true;
                if (me.gr.has_value() != w.gl.has_value()) return false;
                if (me.gr && !(*me.gr == *w.gl)) return false;
            } else if (w.pos + 1 == me.pos) {
                if (pred) return false;
                pred = true;
                if (me.gl.has_value() != w.gr.has_value()) return false;
                if (me.gl && !(*me.gl == *w.gr)) return false;
            } else if (w.pos == me.pos) {
                return false;
            } else {
                own.push_back(Iv{std::min(me.pos, w.pos), std::max(me.pos, w.pos)});
            }
            continue;
        }
        if (me.hosted && me.pos == 1 && wid == me.x) {
            have_x = true;
            // my host attachment: either the host's internal at position a,
            // or the host's own endpoint (which that node validates itself)
            if (w.ear == me.host && w.pos != me.a) return false;
            continue;
        }
        if (me.hosted && me.pos == me.len - 1 && wid == me.y) {
            have_y = true;
            if (w.ear == me.host && w.pos != me.b) return false;
            continue;
        }
        if (wid == me.x) {
            own.push_back(Iv{0, me.pos}); // chord to my ear's near end
            continue;
        }
        if (wid == me.y) {
            own.push_back(Iv{me.pos, me.len});
            continue;
        }
        if (w.hosted && w.host == me.ear) {
            // an ear hangs off my position
            if (w.pos == 1 && w.x == v.id && w.a == me.pos) {
                own.push_back(Iv{w.a, w.b});
                continue;
            }
            if (w.pos == w.len - 1 && w.y == v.id && w.b == me.pos) {
                own.push_back(Iv{w.a, w.b});
                continue;
            }
            return false;
        }
        auto ite = ends.find(w.ear);
        if (ite != ends.end()) {
            auto [wi, xs] = ite->second;
            if (wi == i) continue; // the endpoint witness edge itself
            // a chord of that ear landing on its endpoint, i.e. me
            sides[w.ear].push_back(xs ? Iv{0, w.pos} : Iv{w.pos, nb[wi].len});
            continue;
        }
        if (w.hosted && ends.count(w.host)) {
            auto [wi, xs] = ends[w.host];
            // an ear anchored at the end of an ear I terminate
            if (xs && w.a == 0 && w.pos == 1 && w.x == v.id) {
                sides[w.host].push_back(Iv{0, w.b});
                continue;
            }
            if (!xs && w.b == nb[wi].len && w.pos == w.len - 1 && w.y == v.id) {
                sides[w.host].push_back(Iv{w.a, nb[wi].len});
                continue;
            }
            return false;
        }
        return false;
    }

    // every slot along the ear must be filled
    if (!me.hosted) {
        if (me.pos >= 1 && !pred) return false;
        if (me.pos <= me.len - 1 && !succ) return false;
    } else {
        if (me.pos >= 2 && !pred) return false;
        if (me.pos == 1 && !have_x) return false;
        if (me.pos <= me.len - 2 && !succ) return false;
        if (me.pos == me.len - 1 && !have_y) return false;
    }

    // interval discipline on my own ear, exactly the path-outerplanar rules
    for (const Iv& c : own) {
        if (c.a == me.pos) {
            if (!me.gr || !contains_iv(c, *me.gr)) return false;
        } else {
            if (!me.gl || !contains_iv(c, *me.gl)) return false;
        }
    }
    auto in_own = [&](const Iv& iv) {
        return std::find(own.begin(), own.end(), iv) != own.end();
    };
    if (me.gr && me.gr->a == me.pos && !in_own(*me.gr)) return false;
    if (me.gl && me.gl->b == me.pos && !in_own(*me.gl)) return false;
    bool same = me.gl.has_value() == me.gr.has_value() && (!me.gl || *me.gl == *me.gr);
    if (!same) {
        bool push = me.gr && me.gr->a == me.pos;
        bool pop = me.gl && me.gl->b == me.pos;
        if (!push && !pop) return false;
        if (push && !pop && me.gl && !contains_iv(*me.gl, *me.gr)) return false;
        if (pop && !push && me.gr && !contains_iv(*me.gr, *me.gl)) return false;
    }

    // cover bookkeeping at the ends of every ear I terminate
    for (auto& [j, sw] : ends) {
        auto [wi, xs] = sw;
        const SpCert& m = nb[wi];
        const auto& anchored = sides.count(j) ? sides[j] : std::vector<Iv>{};
        const std::optional<Iv>& cover = xs ? m.gl : m.gr;
        if (anchored.empty() != !cover.has_value()) return false;
        if (cover) {
            if (xs && cover->a != 0) return false;
            if (!xs && cover->b != m.len) return false;
            if (std::find(anchored.begin(), anchored.end(), *cover) == anchored.end())
                return false;
            for (const Iv& s : anchored)
                if (!contains_iv(s, *cover)) return false;
        }
    }
    return true;
}

} // namespace

Scheme scheme_series_parallel_2conn() {
    Scheme s;
    s.name = "series-parallel-2conn";
    s.prover = sp_prove;
    s.verifier = sp_verify;
    s.size_tag = "O(log n)";
    s.size_bits = [](long long n) { return 128 + 32LL * ceil_log2(n); };
    return s;
}

} // namespace lc
