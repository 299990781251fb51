#include "lc/combinators.hpp"

#include "lc/building_blocks.hpp"
#include "lc/connectivity_core.hpp"
#include "lc/connectivity_schemes.hpp"
#include "lc/minor.hpp"
#include "lc/transforms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace lc {

namespace {

const Certificate kEmptyCert{};

// varint cost in bits for a value below 2^ceil_log2(n)
long long vbits(long long n) { return 8 * ((ceil_log2(n) + 6) / 7); }

std::string lifted_tag(const std::string& t) {
    return (t.empty() || t == "O(1)") ? "O(log n)" : t;
}

bool try_accepts(const Graph& g, const Scheme& s) {
    try {
        return certify(g, s).accepted;
    } catch (const std::invalid_argument&) {
        return false;
    } catch (const search_budget_exceeded&) {
        return false;
    }
}

void require_node_only(const Scheme& s, const char* op) {
    if (s.uses_edge_certs)
        throw std::invalid_argument(std::string(op) + ": input scheme must label nodes only");
}

// BFS from start inside the vertices with allow[i] != 0. dist/parent are g
// indices, -1 where unreached.
void bfs_restricted(const Graph& g, const std::vector<char>& allow, int start,
                    std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.n(), -1);
    parent.assign(g.n(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (!allow[y] || dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            parent[y] = x;
            q.push(y);
        }
    }
}

LocalView sim_view(NodeId id, const Certificate* own) {
    LocalView v;
    v.id = id;
    v.cert = own;
    return v;
}

void sim_add(LocalView& v, NodeId id, const Certificate* c,
             const Certificate* ec = &kEmptyCert) {
    v.neighbors.push_back(NeighborView{id, c, ec});
}

// ---------------------------------------------------------------- pointed

struct PointedCert {
    bool selected = false;
    NodeId sel = 0, parent = 0;
    std::uint64_t dist = 0;
    Certificate own;
    bool has_copy = false;
    Certificate copy;
};

PointedCert read_pointed(const Certificate& c) {
    CertReader r(c);
    PointedCert p;
    std::uint8_t f = r.u8();
    if (f > 1) throw cert_parse_error();
    p.selected = f == 1;
    if (!p.selected) {
        p.sel = r.u64();
        p.parent = r.u64();
        p.dist = r.u64();
        p.own = r.cert();
        std::uint8_t hc = r.u8();
        if (hc > 1) throw cert_parse_error();
        p.has_copy = hc == 1;
        if (p.has_copy) p.copy = r.cert();
    }
    r.expect_end();
    return p;
}

} // namespace

Scheme pointed(const Scheme& s, std::function<NodeId(const Graph&)> chooser) {
    require_node_only(s, "pointed");
    Scheme out;
    out.name = "pointed(" + s.name + ")";
    out.uses_edge_certs = false;
    out.size_tag = lifted_tag(s.size_tag);
    if (s.size_bits)
        out.size_bits = [f = s.size_bits](long long n) {
            return 2 * f(n) + 3 * vbits(n) + 80;
        };
    out.prover = [s, chooser](const Graph& g) -> std::optional<Assignment> {
        NodeId sel = chooser ? chooser(g) : g.id_of(0);
        auto si = g.index_of(sel);
        if (!si) throw coverage_error("pointed: chooser returned a non-node");
        Assignment a;
        if (g.n() == 1) {
            if (!try_accepts(g, s)) return std::nullopt;
            CertWriter w;
            w.u8(1);
            a.node[sel] = w.take();
            return a;
        }
        auto sa = s.prover(g);
        if (!sa) return std::nullopt;
        auto dist = bfs_distances(g, *si);
        for (int i = 0; i < g.n(); ++i) {
            NodeId id = g.id_of(i);
            CertWriter w;
            if (i == *si) {
                w.u8(1);
            } else {
                int par = -1;
                for (int j : g.neighbors(i))
                    if (dist[j] == dist[i] - 1) {
                        par = j;
                        break;
                    }
                w.u8(0);
                w.u64(sel);
                w.u64(g.id_of(par));
                w.u64(static_cast<std::uint64_t>(dist[i]));
                auto it = sa->node.find(id);
                w.cert(it == sa->node.end() ? kEmptyCert : it->second);
                bool adj = g.has_edge(i, *si);
                w.u8(adj ? 1 : 0);
                if (adj) {
                    auto is = sa->node.find(sel);
                    w.cert(is == sa->node.end() ? kEmptyCert : is->second);
                }
            }
            a.node[id] = w.take();
        }
        return a;
    };
    out.verifier = [s](const LocalView& v) -> bool {
        PointedCert me = read_pointed(*v.cert);
        std::vector<PointedCert> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) nb.push_back(read_pointed(*w.cert));
        if (me.selected) {
            if (v.neighbors.empty()) return try_accepts(Graph({v.id}, {}), s);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (nb[i].selected) return false;
                if (nb[i].sel != v.id) return false;
                if (!nb[i].has_copy) return false;
                if (!(nb[i].copy == nb[0].copy)) return false;
            }
            LocalView sim = sim_view(v.id, &nb[0].copy);
            for (std::size_t i = 0; i < nb.size(); ++i)
                sim_add(sim, v.neighbors[i].id, &nb[i].own);
            return s.verifier(sim);
        }
        if (me.dist == 0) return false;
        const PointedCert* selnb = nullptr;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i].selected) {
                if (v.neighbors[i].id != me.sel) return false;
                selnb = &nb[i];
            } else {
                if (nb[i].sel != me.sel) return false;
                // a neighbor carrying the distinguished id must be flagged
                if (v.neighbors[i].id == me.sel) return false;
            }
        }
        if (me.has_copy != (selnb != nullptr)) return false;
        if (me.dist == 1) {
            if (me.parent != me.sel || !selnb) return false;
        } else {
            bool ok = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (v.neighbors[i].id == me.parent && !nb[i].selected &&
                    nb[i].dist == me.dist - 1)
                    ok = true;
            if (!ok) return false;
        }
        LocalView sim = sim_view(v.id, &me.own);
        for (std::size_t i = 0; i < nb.size(); ++i)
            sim_add(sim, v.neighbors[i].id, nb[i].selected ? &me.copy : &nb[i].own);
        return s.verifier(sim);
    };
    return out;
}

// -------------------------------------------------------------- k_pointed

namespace {

constexpr std::uint64_t kCountCap = 1ull << 32;

struct KPointedCert {
    bool selected = false;
    NodeId root = 0, parent = 0;
    std::uint64_t dist = 0, cnt = 0;
    Certificate own;
    std::vector<std::pair<NodeId, Certificate>> copies; // ascending ids
};

KPointedCert read_k_pointed(const Certificate& c) {
    CertReader r(c);
    KPointedCert p;
    std::uint8_t f = r.u8();
    if (f > 1) throw cert_parse_error();
    p.selected = f == 1;
    p.root = r.u64();
    p.parent = r.u64();
    p.dist = r.u64();
    p.cnt = r.u64();
    if (p.cnt > kCountCap) throw cert_parse_error();
    if (!p.selected) {
        p.own = r.cert();
        std::uint64_t k = r.u64();
        for (std::uint64_t i = 0; i < k; ++i) {
            NodeId id = r.u64();
            if (!p.copies.empty() && id <= p.copies.back().first) throw cert_parse_error();
            p.copies.emplace_back(id, r.cert());
        }
    }
    r.expect_end();
    return p;
}

} // namespace

Scheme k_pointed(const Scheme& s, int k,
                 std::function<std::vector<NodeId>(const Graph&)> chooser) {
    require_node_only(s, "k_pointed");
    if (k < 1) throw std::invalid_argument("k_pointed: k must be positive");
    Scheme out;
    out.name = std::to_string(k) + "-pointed(" + s.name + ")";
    out.uses_edge_certs = false;
    out.size_tag = lifted_tag(s.size_tag);
    if (s.size_bits)
        out.size_bits = [f = s.size_bits, k](long long n) {
            return (k + 1) * f(n) + (k + 7) * vbits(n) + 128;
        };
    out.prover = [s, k, chooser](const Graph& g) -> std::optional<Assignment> {
        std::vector<NodeId> marks;
        if (chooser) {
            marks = chooser(g);
        } else {
            for (int i = 0; i < g.n() && static_cast<int>(marks.size()) < k; ++i) {
                bool ok = true;
                for (NodeId m : marks)
                    if (g.has_edge_ids(m, g.id_of(i))) ok = false;
                if (ok) marks.push_back(g.id_of(i));
            }
        }
        if (static_cast<int>(marks.size()) > k) return std::nullopt;
        std::set<NodeId> mset(marks.begin(), marks.end());
        if (mset.size() != marks.size()) return std::nullopt;
        for (NodeId m : marks)
            if (!g.index_of(m)) throw coverage_error("k_pointed: chooser returned a non-node");
        for (NodeId x : marks)
            for (NodeId y : marks)
                if (x != y && g.has_edge_ids(x, y)) return std::nullopt;
        auto sa = s.prover(g);
        if (!sa) return std::nullopt;
        NodeId root = g.id_of(0);
        auto dist = bfs_distances(g, 0);
        // subtree mark counts, leaves inward
        std::vector<int> order(g.n());
        for (int i = 0; i < g.n(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return dist[a] > dist[b]; });
        std::vector<int> par(g.n(), -1);
        for (int i = 0; i < g.n(); ++i)
            if (i != 0)
                for (int j : g.neighbors(i))
                    if (dist[j] == dist[i] - 1) {
                        par[i] = j;
                        break;
                    }
        std::vector<std::uint64_t> cnt(g.n(), 0);
        for (int i : order) {
            if (mset.count(g.id_of(i))) cnt[i] += 1;
            if (par[i] >= 0) cnt[par[i]] += cnt[i];
        }
        Assignment a;
        for (int i = 0; i < g.n(); ++i) {
            NodeId id = g.id_of(i);
            bool selected = mset.count(id) > 0;
            CertWriter w;
            w.u8(selected ? 1 : 0);
            w.u64(root);
            w.u64(par[i] >= 0 ? g.id_of(par[i]) : root);
            w.u64(static_cast<std::uint64_t>(dist[i]));
            w.u64(cnt[i]);
            if (!selected) {
                auto it = sa->node.find(id);
                w.cert(it == sa->node.end() ? kEmptyCert : it->second);
                std::vector<NodeId> selnb;
                for (int j : g.neighbors(i))
                    if (mset.count(g.id_of(j))) selnb.push_back(g.id_of(j));
                std::sort(selnb.begin(), selnb.end());
                w.u64(selnb.size());
                for (NodeId m : selnb) {
                    w.u64(m);
                    auto im = sa->node.find(m);
                    w.cert(im == sa->node.end() ? kEmptyCert : im->second);
                }
            }
            a.node[id] = w.take();
        }
        return a;
    };
    out.verifier = [s, k](const LocalView& v) -> bool {
        KPointedCert me = read_k_pointed(*v.cert);
        std::vector<KPointedCert> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) nb.push_back(read_k_pointed(*w.cert));
        for (const auto& w : nb)
            if (w.root != me.root) return false;
        if (me.dist == 0) {
            if (v.id != me.root) return false;
            if (me.cnt > static_cast<std::uint64_t>(k)) return false;
        } else {
            bool ok = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (v.neighbors[i].id == me.parent && nb[i].dist == me.dist - 1) ok = true;
            if (!ok) return false;
        }
        std::uint64_t sum = me.selected ? 1 : 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (nb[i].parent == v.id && nb[i].dist == me.dist + 1) sum += nb[i].cnt;
        if (sum != me.cnt) return false;
        if (me.selected) {
            if (v.neighbors.empty()) return try_accepts(Graph({v.id}, {}), s);
            const Certificate* common = nullptr;
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (nb[i].selected) return false;
                const Certificate* mine = nullptr;
                for (const auto& [id, c] : nb[i].copies)
                    if (id == v.id) mine = &c;
                if (!mine) return false;
                if (common && !(*common == *mine)) return false;
                if (!common) common = mine;
            }
            LocalView sim = sim_view(v.id, common);
            for (std::size_t i = 0; i < nb.size(); ++i)
                sim_add(sim, v.neighbors[i].id, &nb[i].own);
            return s.verifier(sim);
        }
        // copies must list exactly the flagged neighbors
        std::vector<NodeId> flagged;
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (nb[i].selected) flagged.push_back(v.neighbors[i].id);
        if (flagged.size() != me.copies.size()) return false;
        for (std::size_t i = 0; i < flagged.size(); ++i)
            if (me.copies[i].first != flagged[i]) return false;
        LocalView sim = sim_view(v.id, &me.own);
        std::size_t ci = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i].selected)
                sim_add(sim, v.neighbors[i].id, &me.copies[ci++].second);
            else
                sim_add(sim, v.neighbors[i].id, &nb[i].own);
        }
        return s.verifier(sim);
    };
    return out;
}

// ------------------------------------------------------- subgraph_closure

namespace {

struct ClosureCert {
    bool marked = false;
    NodeId root = 0, parent = 0;
    std::uint64_t dist = 0;
    Certificate own;
};

ClosureCert read_closure(const Certificate& c) {
    CertReader r(c);
    ClosureCert p;
    std::uint8_t f = r.u8();
    if (f > 1) throw cert_parse_error();
    p.marked = f == 1;
    p.root = r.u64();
    p.parent = r.u64();
    p.dist = r.u64();
    if (p.marked) p.own = r.cert();
    r.expect_end();
    return p;
}

// marked edge payload; empty certificate means unmarked
struct ClosureEdge {
    bool marked = false;
    Certificate inner;
};

ClosureEdge read_closure_edge(const Certificate& c, bool with_inner) {
    ClosureEdge e;
    if (c.empty()) return e;
    CertReader r(c);
    if (r.u8() != 1) throw cert_parse_error();
    e.marked = true;
    if (with_inner) e.inner = r.cert();
    r.expect_end();
    return e;
}

std::optional<SubgraphWitness> default_witness(const Scheme& s, const Graph& g) {
    if (try_accepts(g, s)) return SubgraphWitness{g.ids(), g.edge_ids()};
    if (g.n() > 10) return std::nullopt;
    int n = g.n();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) keep.push_back(i);
        Graph sub = g.induced(keep);
        if (!sub.connected()) continue;
        if (try_accepts(sub, s)) return SubgraphWitness{sub.ids(), sub.edge_ids()};
    }
    return std::nullopt;
}

// shared by the general and induced variants; general marks edges
Scheme closure_base(const Scheme& s, bool general, WitnessFinder finder) {
    Scheme out;
    out.name = (general ? "closure(" : "closure-induced(") + s.name + ")";
    out.uses_edge_certs = general || s.uses_edge_certs;
    out.size_tag = lifted_tag(s.size_tag);
    if (s.size_bits)
        out.size_bits = [f = s.size_bits](long long n) { return f(n) + 3 * vbits(n) + 32; };
    bool inner_edges = s.uses_edge_certs;
    out.prover = [s, general, finder, inner_edges](const Graph& g)
        -> std::optional<Assignment> {
        auto W = finder ? finder(g) : default_witness(s, g);
        if (!W) return std::nullopt;
        for (NodeId id : W->nodes)
            if (!g.index_of(id)) throw coverage_error("subgraph_closure: witness node not in graph");
        for (auto [u, w] : W->edges)
            if (!g.has_edge_ids(u, w))
                throw coverage_error("subgraph_closure: witness edge not in graph");
        Graph Wg = general ? Graph(W->nodes, W->edges) : [&] {
            std::vector<int> keep;
            for (NodeId id : W->nodes) keep.push_back(*g.index_of(id));
            std::sort(keep.begin(), keep.end());
            return g.induced(keep);
        }();
        auto sa = s.prover(Wg);
        if (!sa) return std::nullopt;
        NodeId root = Wg.id_of(0);
        auto dist = bfs_distances(g, *g.index_of(root));
        Assignment a;
        for (int i = 0; i < g.n(); ++i) {
            NodeId id = g.id_of(i);
            bool marked = Wg.index_of(id).has_value();
            int par = -1;
            for (int j : g.neighbors(i))
                if (dist[j] == dist[i] - 1) {
                    par = j;
                    break;
                }
            CertWriter w;
            w.u8(marked ? 1 : 0);
            w.u64(root);
            w.u64(par >= 0 ? g.id_of(par) : root);
            w.u64(static_cast<std::uint64_t>(dist[i]));
            if (marked) {
                auto it = sa->node.find(id);
                w.cert(it == sa->node.end() ? kEmptyCert : it->second);
            }
            a.node[id] = w.take();
        }
        if (general) {
            for (auto [u, w2] : Wg.edge_ids()) {
                CertWriter w;
                w.u8(1);
                if (inner_edges) {
                    auto it = sa->edge.find(edge_key(u, w2));
                    w.cert(it == sa->edge.end() ? kEmptyCert : it->second);
                }
                a.edge[edge_key(u, w2)] = w.take();
            }
        } else if (inner_edges) {
            for (auto& [key, c] : sa->edge) a.edge[key] = c;
        }
        return a;
    };
    out.verifier = [s, general, inner_edges](const LocalView& v) -> bool {
        ClosureCert me = read_closure(*v.cert);
        std::vector<ClosureCert> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) nb.push_back(read_closure(*w.cert));
        for (const auto& w : nb)
            if (w.root != me.root) return false;
        if (me.dist == 0) {
            if (v.id != me.root || !me.marked) return false;
        } else {
            bool ok = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (v.neighbors[i].id == me.parent && nb[i].dist == me.dist - 1) ok = true;
            if (!ok) return false;
        }
        if (general) {
            std::vector<ClosureEdge> ec(v.neighbors.size());
            for (std::size_t i = 0; i < v.neighbors.size(); ++i) {
                ec[i] = read_closure_edge(*v.neighbors[i].edge_cert, inner_edges);
                if (ec[i].marked && (!me.marked || !nb[i].marked)) return false;
            }
            if (!me.marked) return true;
            LocalView sim = sim_view(v.id, &me.own);
            for (std::size_t i = 0; i < v.neighbors.size(); ++i)
                if (ec[i].marked)
                    sim_add(sim, v.neighbors[i].id, &nb[i].own,
                            inner_edges ? &ec[i].inner : &kEmptyCert);
            return s.verifier(sim);
        }
        if (!me.marked) return true;
        LocalView sim = sim_view(v.id, &me.own);
        for (std::size_t i = 0; i < v.neighbors.size(); ++i)
            if (nb[i].marked)
                sim_add(sim, v.neighbors[i].id, &nb[i].own, v.neighbors[i].edge_cert);
        return s.verifier(sim);
    };
    return out;
}

} // namespace

Scheme subgraph_closure(const Scheme& s, ClosureVariant variant, WitnessFinder finder) {
    switch (variant.kind) {
    case ClosureVariant::Kind::General:
        return closure_base(s, true, std::move(finder));
    case ClosureVariant::Kind::Induced:
        return closure_base(s, false, std::move(finder));
    case ClosureVariant::Kind::Degenerate: {
        if (variant.fold_degeneracy < 1)
            throw std::invalid_argument("subgraph_closure: fold degeneracy must be positive");
        Scheme general = closure_base(s, true, std::move(finder));
        Scheme out = edge_to_node(general, variant.fold_degeneracy);
        out.name = "closure-folded(" + s.name + ")";
        out.size_tag = general.size_tag;
        if (s.size_bits)
            out.size_bits = [f = s.size_bits, d = variant.fold_degeneracy](long long n) {
                return f(n) + 3 * vbits(n) + 32 + d * (2 * vbits(n) + 48);
            };
        return out;
    }
    }
    throw std::invalid_argument("subgraph_closure: unknown variant");
}

// --------------------------------------------------------- node_expansion

namespace {

struct BagSlot {
    NodeId leader = 0;
    Certificate c1;
    bool contact = false;
    NodeId ct_parent = 0;
    std::uint64_t ct_dist = 0;
};

struct ExpandCert {
    NodeId leader = 0;
    Certificate c1own;
    NodeId lt_parent = 0;
    std::uint64_t lt_dist = 0;
    Certificate s2own;
    std::vector<BagSlot> slots; // ascending leader ids
};

ExpandCert read_expand(const Certificate& c, int delta) {
    CertReader r(c);
    ExpandCert p;
    p.leader = r.u64();
    p.c1own = r.cert();
    p.lt_parent = r.u64();
    p.lt_dist = r.u64();
    p.s2own = r.cert();
    std::uint64_t k = r.u64();
    if (k > static_cast<std::uint64_t>(delta)) throw cert_parse_error();
    for (std::uint64_t i = 0; i < k; ++i) {
        BagSlot slot;
        slot.leader = r.u64();
        if (slot.leader == p.leader) throw cert_parse_error();
        if (!p.slots.empty() && slot.leader <= p.slots.back().leader)
            throw cert_parse_error();
        slot.c1 = r.cert();
        std::uint8_t ct = r.u8();
        if (ct > 1) throw cert_parse_error();
        slot.contact = ct == 1;
        if (!slot.contact) {
            slot.ct_parent = r.u64();
            slot.ct_dist = r.u64();
        }
        p.slots.push_back(std::move(slot));
    }
    r.expect_end();
    return p;
}

const BagSlot* find_slot(const ExpandCert& c, NodeId leader) {
    for (const auto& s : c.slots)
        if (s.leader == leader) return &s;
    return nullptr;
}

} // namespace

Scheme node_expansion(const Scheme& s1, const Scheme& s2, int delta,
                      BagDecomposer decomposer) {
    require_node_only(s1, "node_expansion");
    require_node_only(s2, "node_expansion");
    if (delta < 1) throw std::invalid_argument("node_expansion: delta must be positive");
    Scheme out;
    out.name = "expand(" + s1.name + ";" + s2.name + ")";
    out.uses_edge_certs = false;
    out.size_tag = "O(log n)";
    if (s1.size_bits && s2.size_bits)
        out.size_bits = [f1 = s1.size_bits, f2 = s2.size_bits, delta](long long n) {
            return (delta + 1) * (f1(n) + 32) + f2(n) + (4 * delta + 5) * vbits(n) +
                   8 * delta + 64;
        };
    out.prover = [s1, s2, delta, decomposer](const Graph& g) -> std::optional<Assignment> {
        std::vector<std::vector<NodeId>> bags;
        if (decomposer) {
            auto d = decomposer(g);
            if (!d) return std::nullopt;
            bags = std::move(*d);
        } else {
            for (NodeId id : g.ids()) bags.push_back({id});
        }
        // must partition the node set
        std::vector<NodeId> all;
        for (auto& b : bags) {
            if (b.empty()) return std::nullopt;
            for (NodeId id : b) all.push_back(id);
        }
        std::sort(all.begin(), all.end());
        if (all != g.ids()) throw coverage_error("node_expansion: bags do not partition the nodes");
        int nb = static_cast<int>(bags.size());
        std::map<NodeId, int> bag_of;
        for (int b = 0; b < nb; ++b)
            for (NodeId id : bags[b]) bag_of[id] = b;
        std::vector<NodeId> leader(nb);
        for (int b = 0; b < nb; ++b)
            leader[b] = *std::min_element(bags[b].begin(), bags[b].end());
        // quotient adjacency
        std::vector<std::set<int>> qadj(nb);
        for (auto [u, w] : g.edge_ids()) {
            int bu = bag_of[u], bw = bag_of[w];
            if (bu != bw) {
                qadj[bu].insert(bw);
                qadj[bw].insert(bu);
            }
        }
        for (int b = 0; b < nb; ++b)
            if (static_cast<int>(qadj[b].size()) > delta) return std::nullopt;
        std::vector<std::pair<NodeId, NodeId>> qedges;
        for (int b = 0; b < nb; ++b)
            for (int b2 : qadj[b])
                if (b < b2) qedges.emplace_back(leader[b], leader[b2]);
        Graph q(leader, qedges);
        auto qa = s1.prover(q);
        if (!qa) return std::nullopt;
        Assignment a;
        std::vector<char> inbag(g.n(), 0);
        std::vector<int> ldist, lpar;
        for (int b = 0; b < nb; ++b) {
            std::vector<int> members;
            for (NodeId id : bags[b]) members.push_back(*g.index_of(id));
            std::sort(members.begin(), members.end());
            Graph Bg = g.induced(members);
            if (!Bg.connected()) return std::nullopt;
            auto ba = s2.prover(Bg);
            if (!ba) return std::nullopt;
            std::fill(inbag.begin(), inbag.end(), 0);
            for (int i : members) inbag[i] = 1;
            bfs_restricted(g, inbag, *g.index_of(leader[b]), ldist, lpar);
            // per adjacent bag: contact tree toward the smallest node with a
            // cross edge
            std::vector<int> nbags(qadj[b].begin(), qadj[b].end());
            std::sort(nbags.begin(), nbags.end(),
                      [&](int x, int y) { return leader[x] < leader[y]; });
            std::vector<std::vector<int>> cdist(nbags.size()), cpar(nbags.size());
            std::vector<NodeId> contact(nbags.size());
            for (std::size_t j = 0; j < nbags.size(); ++j) {
                NodeId best = 0;
                bool found = false;
                for (int i : members)
                    for (int t : g.neighbors(i))
                        if (bag_of.at(g.id_of(t)) == nbags[j])
                            if (!found || g.id_of(i) < best) {
                                best = g.id_of(i);
                                found = true;
                            }
                contact[j] = best;
                bfs_restricted(g, inbag, *g.index_of(best), cdist[j], cpar[j]);
            }
            auto qc = qa->node.find(leader[b]);
            const Certificate& c1own = qc == qa->node.end() ? kEmptyCert : qc->second;
            for (int i : members) {
                NodeId id = g.id_of(i);
                CertWriter w;
                w.u64(leader[b]);
                w.cert(c1own);
                w.u64(lpar[i] >= 0 ? g.id_of(lpar[i]) : leader[b]);
                w.u64(static_cast<std::uint64_t>(ldist[i]));
                auto bc = ba->node.find(id);
                w.cert(bc == ba->node.end() ? kEmptyCert : bc->second);
                w.u64(nbags.size());
                for (std::size_t j = 0; j < nbags.size(); ++j) {
                    w.u64(leader[nbags[j]]);
                    auto jc = qa->node.find(leader[nbags[j]]);
                    w.cert(jc == qa->node.end() ? kEmptyCert : jc->second);
                    if (id == contact[j]) {
                        w.u8(1);
                    } else {
                        w.u8(0);
                        w.u64(cpar[j][i] >= 0 ? g.id_of(cpar[j][i]) : contact[j]);
                        w.u64(static_cast<std::uint64_t>(cdist[j][i]));
                    }
                }
                a.node[id] = w.take();
            }
        }
        return a;
    };
    out.verifier = [s1, s2, delta](const LocalView& v) -> bool {
        ExpandCert me = read_expand(*v.cert, delta);
        std::vector<ExpandCert> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) nb.push_back(read_expand(*w.cert, delta));
        // classify and cross-check
        std::vector<int> cls(nb.size()); // 0 same bag, 1 cross
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const ExpandCert& w = nb[i];
            if (w.leader == me.leader) {
                cls[i] = 0;
                if (!(w.c1own == me.c1own)) return false;
                if (w.slots.size() != me.slots.size()) return false;
                for (std::size_t j = 0; j < me.slots.size(); ++j)
                    if (w.slots[j].leader != me.slots[j].leader ||
                        !(w.slots[j].c1 == me.slots[j].c1))
                        return false;
            } else {
                cls[i] = 1;
                const BagSlot* slot = find_slot(me, w.leader);
                if (!slot) return false;
                if (!(w.c1own == slot->c1)) return false;
                const BagSlot* back = find_slot(w, me.leader);
                if (!back || !(back->c1 == me.c1own)) return false;
            }
        }
        // leader-rooted tree inside the bag
        if (me.lt_dist == 0) {
            if (v.id != me.leader) return false;
        } else {
            if (v.id == me.leader) return false;
            bool ok = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (cls[i] == 0 && v.neighbors[i].id == me.lt_parent &&
                    nb[i].lt_dist == me.lt_dist - 1)
                    ok = true;
            if (!ok) return false;
        }
        // per-slot contact or tree step toward it
        for (const auto& slot : me.slots) {
            if (slot.contact) {
                bool has = false;
                for (std::size_t i = 0; i < nb.size(); ++i)
                    if (cls[i] == 1 && nb[i].leader == slot.leader) has = true;
                if (!has) return false;
            } else {
                if (slot.ct_dist == 0) return false;
                bool ok = false;
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    if (cls[i] != 0 || v.neighbors[i].id != slot.ct_parent) continue;
                    const BagSlot* ps = find_slot(nb[i], slot.leader);
                    if (!ps) continue;
                    if (ps->contact ? slot.ct_dist == 1 : ps->ct_dist == slot.ct_dist - 1)
                        ok = true;
                }
                if (!ok) return false;
            }
        }
        // bag structure satisfies s2
        LocalView sim2 = sim_view(v.id, &me.s2own);
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (cls[i] == 0) sim_add(sim2, v.neighbors[i].id, &nb[i].s2own);
        if (!s2.verifier(sim2)) return false;
        // base graph satisfies s1, simulated at the bag's leader
        LocalView sim1 = sim_view(me.leader, &me.c1own);
        for (const auto& slot : me.slots) sim_add(sim1, slot.leader, &slot.c1);
        return s1.verifier(sim1);
    };
    return out;
}

// --------------------------------------------------------- edge_expansion

namespace {

constexpr std::uint64_t kCopyCap = 8;

struct GroupKey {
    NodeId p = 0, q = 0;
    std::uint64_t mu = 0;
    bool operator==(const GroupKey&) const = default;
    bool operator<(const GroupKey& o) const {
        return std::tie(p, q, mu) < std::tie(o.p, o.q, o.mu);
    }
};

struct EdgeExpCert {
    GroupKey key;
    Certificate c1p, c1q; // base certificates of the two originals
    Certificate c1e;      // base edge certificate (when s1 labels edges)
    Certificate s2e;      // replacement edge certificate (when s2 labels edges)
    // per endpoint, lower id first
    Certificate s2lo, s2hi;
    std::uint64_t dp_lo = 0, dq_lo = 0, dp_hi = 0, dq_hi = 0;
};

EdgeExpCert read_edge_exp(const Certificate& c, bool e1, bool e2, bool multi) {
    CertReader r(c);
    EdgeExpCert x;
    x.key.p = r.u64();
    x.key.q = r.u64();
    x.key.mu = r.u64();
    if (x.key.p >= x.key.q) throw cert_parse_error();
    if (x.key.mu >= kCopyCap || (!multi && x.key.mu != 0)) throw cert_parse_error();
    x.c1p = r.cert();
    x.c1q = r.cert();
    if (e1) x.c1e = r.cert();
    if (e2) x.s2e = r.cert();
    x.s2lo = r.cert();
    x.dp_lo = r.u64();
    x.dq_lo = r.u64();
    x.s2hi = r.cert();
    x.dp_hi = r.u64();
    x.dq_hi = r.u64();
    r.expect_end();
    return x;
}

} // namespace

Scheme edge_expansion(const Scheme& s1, const Scheme& s2, bool multigraph_base,
                      EdgePlanner planner) {
    Scheme out;
    out.name = "expand-edges(" + s1.name + ";" + s2.name + ")";
    out.uses_edge_certs = true;
    out.size_tag = "O(log n)";
    out.size_bits = [](long long) { return 0; }; // all payload lives on edges
    bool e1 = s1.uses_edge_certs, e2 = s2.uses_edge_certs;
    out.prover = [s1, s2, multigraph_base, planner, e1, e2](const Graph& g)
        -> std::optional<Assignment> {
        if (g.n() == 1) {
            LocalView lonely = sim_view(g.id_of(0), &kEmptyCert);
            if (!s1.verifier(lonely)) return std::nullopt;
            Assignment a;
            a.node[g.id_of(0)] = Certificate{};
            return a;
        }
        EdgeExpansionPlan plan;
        if (planner) {
            auto p = planner(g);
            if (!p) return std::nullopt;
            plan = std::move(*p);
        } else {
            plan.originals = g.ids();
            for (auto [u, w] : g.edge_ids())
                plan.group_of_edge[edge_key(u, w)] = {std::min(u, w), std::max(u, w), 0};
        }
        std::set<NodeId> orig(plan.originals.begin(), plan.originals.end());
        for (NodeId id : orig)
            if (!g.index_of(id)) throw coverage_error("edge_expansion: original not in graph");
        // collect groups and validate the role of every node
        std::map<GroupKey, std::vector<EdgeKey>> groups;
        for (auto [u, w] : g.edge_ids()) {
            auto it = plan.group_of_edge.find(edge_key(u, w));
            if (it == plan.group_of_edge.end())
                throw coverage_error("edge_expansion: plan misses an edge");
            auto [p, q, mu] = it->second;
            if (p > q) std::swap(p, q);
            if (p == q || !orig.count(p) || !orig.count(q)) return std::nullopt;
            if (mu != 0 && !multigraph_base) return std::nullopt;
            if (mu >= kCopyCap) return std::nullopt;
            groups[GroupKey{p, q, mu}].push_back(edge_key(u, w));
        }
        std::map<NodeId, GroupKey> interior_group;
        for (auto& [key, edges] : groups)
            for (auto [u, w] : edges)
                for (NodeId x : {u, w}) {
                    if (orig.count(x)) {
                        if (x != key.p && x != key.q) return std::nullopt;
                    } else {
                        auto it = interior_group.find(x);
                        if (it == interior_group.end())
                            interior_group[x] = key;
                        else if (!(it->second == key))
                            return std::nullopt; // replacements overlap
                    }
                }
        // base graph: simple collapse of the groups
        std::set<std::pair<NodeId, NodeId>> base_edges;
        for (auto& [key, edges] : groups) base_edges.insert({key.p, key.q});
        Graph base(plan.originals,
                   std::vector<std::pair<NodeId, NodeId>>(base_edges.begin(), base_edges.end()));
        auto qa = s1.prover(base);
        if (!qa) return std::nullopt;
        Assignment a;
        for (NodeId id : g.ids()) a.node[id] = Certificate{};
        for (auto& [key, edges] : groups) {
            std::set<NodeId> vs;
            for (auto [u, w] : edges) {
                vs.insert(u);
                vs.insert(w);
            }
            if (!vs.count(key.p) || !vs.count(key.q)) return std::nullopt;
            Graph H(std::vector<NodeId>(vs.begin(), vs.end()),
                    std::vector<std::pair<NodeId, NodeId>>(edges.begin(), edges.end()));
            if (!H.connected()) return std::nullopt;
            auto ha = s2.prover(H);
            if (!ha) return std::nullopt;
            auto dp = bfs_distances(H, *H.index_of(key.p));
            auto dq = bfs_distances(H, *H.index_of(key.q));
            const Certificate& c1p = [&]() -> const Certificate& {
                auto it = qa->node.find(key.p);
                return it == qa->node.end() ? kEmptyCert : it->second;
            }();
            const Certificate& c1q = [&]() -> const Certificate& {
                auto it = qa->node.find(key.q);
                return it == qa->node.end() ? kEmptyCert : it->second;
            }();
            for (auto [u, w2] : edges) {
                CertWriter w;
                w.u64(key.p);
                w.u64(key.q);
                w.u64(key.mu);
                w.cert(c1p);
                w.cert(c1q);
                if (e1) {
                    auto it = qa->edge.find(edge_key(key.p, key.q));
                    w.cert(it == qa->edge.end() ? kEmptyCert : it->second);
                }
                if (e2) {
                    auto it = ha->edge.find(edge_key(u, w2));
                    w.cert(it == ha->edge.end() ? kEmptyCert : it->second);
                }
                for (NodeId x : {std::min(u, w2), std::max(u, w2)}) {
                    auto hc = ha->node.find(x);
                    w.cert(hc == ha->node.end() ? kEmptyCert : hc->second);
                    w.u64(static_cast<std::uint64_t>(dp[*H.index_of(x)]));
                    w.u64(static_cast<std::uint64_t>(dq[*H.index_of(x)]));
                }
                a.edge[edge_key(u, w2)] = w.take();
            }
        }
        return a;
    };
    out.verifier = [s1, s2, multigraph_base, e1, e2](const LocalView& v) -> bool {
        if (!v.cert->empty()) return false; // nodes carry nothing
        if (v.neighbors.empty()) {
            LocalView lonely = sim_view(v.id, &kEmptyCert);
            return s1.verifier(lonely);
        }
        std::size_t deg = v.neighbors.size();
        std::vector<EdgeExpCert> ec;
        ec.reserve(deg);
        for (const auto& w : v.neighbors)
            ec.push_back(read_edge_exp(*w.edge_cert, e1, e2, multigraph_base));
        // my side of each incident edge
        std::vector<const Certificate*> my_s2(deg);
        std::vector<const Certificate*> their_s2(deg);
        std::vector<std::uint64_t> my_dp(deg), my_dq(deg), their_dp(deg), their_dq(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            bool lo = v.id < v.neighbors[i].id;
            my_s2[i] = lo ? &ec[i].s2lo : &ec[i].s2hi;
            their_s2[i] = lo ? &ec[i].s2hi : &ec[i].s2lo;
            my_dp[i] = lo ? ec[i].dp_lo : ec[i].dp_hi;
            my_dq[i] = lo ? ec[i].dq_lo : ec[i].dq_hi;
            their_dp[i] = lo ? ec[i].dp_hi : ec[i].dp_lo;
            their_dq[i] = lo ? ec[i].dq_hi : ec[i].dq_lo;
        }
        bool original = false;
        for (const auto& x : ec)
            if (x.key.p == v.id || x.key.q == v.id) original = true;
        // groups of incident edges, preserving neighbor order inside each
        std::map<GroupKey, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < deg; ++i) {
            if (original && ec[i].key.p != v.id && ec[i].key.q != v.id) return false;
            groups[ec[i].key].push_back(i);
        }
        if (!original && groups.size() != 1) return false;
        for (auto& [key, idx] : groups) {
            std::size_t f = idx[0];
            for (std::size_t i : idx) {
                if (!(ec[i].c1p == ec[f].c1p) || !(ec[i].c1q == ec[f].c1q) ||
                    !(ec[i].c1e == ec[f].c1e))
                    return false;
                if (!(*my_s2[i] == *my_s2[f]) || my_dp[i] != my_dp[f] ||
                    my_dq[i] != my_dq[f])
                    return false;
            }
            // distances pin the two endpoints inside the replacement
            bool am_p = key.p == v.id, am_q = key.q == v.id;
            if ((my_dp[f] == 0) != am_p) return false;
            if ((my_dq[f] == 0) != am_q) return false;
            if (!am_p) {
                bool ok = false;
                for (std::size_t i : idx)
                    if (their_dp[i] == my_dp[f] - 1) ok = true;
                if (!ok) return false;
            }
            if (!am_q) {
                bool ok = false;
                for (std::size_t i : idx)
                    if (their_dq[i] == my_dq[f] - 1) ok = true;
                if (!ok) return false;
            }
            // replacement component satisfies s2
            LocalView sim2 = sim_view(v.id, my_s2[f]);
            for (std::size_t i : idx)
                sim_add(sim2, v.neighbors[i].id, their_s2[i],
                        e2 ? &ec[i].s2e : &kEmptyCert);
            if (!s2.verifier(sim2)) return false;
        }
        if (!original) return true;
        // base view at an original node: one entry per incident group
        const Certificate* c1me = nullptr;
        for (auto& [key, idx] : groups) {
            const Certificate& mine = key.p == v.id ? ec[idx[0]].c1p : ec[idx[0]].c1q;
            if (c1me && !(*c1me == mine)) return false;
            if (!c1me) c1me = &mine;
        }
        if (!multigraph_base) {
            std::set<std::pair<NodeId, NodeId>> pairs;
            for (auto& [key, idx] : groups)
                if (!pairs.insert({key.p, key.q}).second) return false;
        }
        LocalView sim1 = sim_view(v.id, c1me);
        for (auto& [key, idx] : groups) {
            NodeId other = key.p == v.id ? key.q : key.p;
            const Certificate& oc = key.p == v.id ? ec[idx[0]].c1q : ec[idx[0]].c1p;
            sim_add(sim1, other, &oc, e1 ? &ec[idx[0]].c1e : &kEmptyCert);
        }
        std::sort(sim1.neighbors.begin(), sim1.neighbors.end(),
                  [](const NeighborView& a, const NeighborView& b) { return a.id < b.id; });
        return s1.verifier(sim1);
    };
    return out;
}

// -------------------------------------------------------------- has_minor

namespace {

// Shrink g to a witness of the h-minor that re-finding a model cannot shrink
// further: node set = the branch sets, edge set = one spanning tree per
// branch set plus one edge per h edge. Iterating to a fixed point makes the
// derivation reproducible from the witness alone, which the expansion prover
// relies on.
struct MinorWitness {
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::vector<NodeId>> bags;
};

std::optional<MinorWitness> minor_witness_reduce(const Graph& g, const Graph& h) {
    Graph cur = g;
    for (int rounds = 0; rounds < g.n() + g.m() + 2; ++rounds) {
        auto model = contains_minor(cur, h);
        if (!model) return std::nullopt;
        MinorWitness w;
        std::set<std::pair<NodeId, NodeId>> eset;
        for (const auto& part : model->parts) {
            std::vector<NodeId> bag;
            std::vector<int> sorted_part = part;
            std::sort(sorted_part.begin(), sorted_part.end());
            for (int i : sorted_part) bag.push_back(cur.id_of(i));
            std::sort(bag.begin(), bag.end());
            w.bags.push_back(bag);
            for (NodeId id : bag) w.nodes.push_back(id);
            Graph t = cur.induced(sorted_part);
            auto dist = bfs_distances(t, 0);
            for (int i = 1; i < t.n(); ++i)
                for (int j : t.neighbors(i))
                    if (dist[j] == dist[i] - 1) {
                        eset.insert(edge_key(t.id_of(i), t.id_of(j)));
                        break;
                    }
        }
        std::vector<int> part_of(cur.n(), -1);
        for (std::size_t b = 0; b < model->parts.size(); ++b)
            for (int i : model->parts[b]) part_of[i] = static_cast<int>(b);
        for (auto [x, y] : h.edges()) {
            bool found = false;
            EdgeKey best{};
            for (int i : model->parts[x]) {
                for (int j : cur.neighbors(i)) {
                    if (part_of[j] != y) continue;
                    EdgeKey k = edge_key(cur.id_of(i), cur.id_of(j));
                    if (!found || k < best) {
                        best = k;
                        found = true;
                    }
                }
            }
            if (!found) return std::nullopt; // model invalid; cannot happen
            eset.insert(best);
        }
        std::sort(w.nodes.begin(), w.nodes.end());
        w.edges.assign(eset.begin(), eset.end());
        if (w.nodes == cur.ids() && w.edges == cur.edge_ids()) return w;
        cur = Graph(w.nodes, w.edges);
    }
    return std::nullopt; // not reachable: the witness shrinks every round
}

} // namespace

Scheme has_minor(const Graph& h) {
    if (h.n() < 1 || h.n() > 6)
        throw std::invalid_argument("has_minor: pattern must have 1..6 nodes");
    if (!h.connected()) throw std::invalid_argument("has_minor: pattern must be connected");
    Graph hh = h;
    int delta = std::max(1, h.n() - 1);
    Scheme map_scheme = scheme_universal("minor-map", [hh](const Graph& q) {
        if (q.n() > 14) return false;
        return contains_minor(q, hh).has_value();
    });
    BagDecomposer decomposer = [hh](const Graph& w)
        -> std::optional<std::vector<std::vector<NodeId>>> {
        auto mw = minor_witness_reduce(w, hh);
        if (!mw) return std::nullopt;
        // only usable when the witness is already fully reduced
        std::vector<NodeId> nodes = mw->nodes;
        if (nodes != w.ids() || mw->edges != w.edge_ids()) return std::nullopt;
        return mw->bags;
    };
    Scheme expansion = node_expansion(map_scheme, scheme_acyclicity(), delta, decomposer);
    WitnessFinder finder = [hh](const Graph& g) -> std::optional<SubgraphWitness> {
        auto mw = minor_witness_reduce(g, hh);
        if (!mw) return std::nullopt;
        return SubgraphWitness{mw->nodes, mw->edges};
    };
    Scheme out = subgraph_closure(expansion, closure_degenerate(std::max(2, h.n())),
                                  std::move(finder));
    out.name = "has-minor(" + std::to_string(h.n()) + "v" + std::to_string(h.m()) + "e)";
    out.size_tag = "O(log n)";
    long long hn = h.n();
    long long f1 = 72 + 16 * hn + hn * hn + 64; // base certificate: the map itself
    out.size_bits = [hn, f1](long long n) {
        long long vb = vbits(n);
        long long expansion_bits = (hn + 1) * (f1 + 48) + (16 + 2 * ceil_log2(n)) +
                                   (6 * hn + 8) * vb + 96;
        return expansion_bits + 3 * vb + 32 + (hn + 2) * (2 * vb + 48);
    };
    return out;
}

// --------------------------------------------------------- block_cut_lift

namespace {

struct LiftCert {
    bool has_conn = false, has_copy = false;
    NodeId leader = 0;
    std::uint64_t bdepth = 0;
    NodeId lt_parent = 0;
    std::uint64_t lt_dist = 0;
    NodeId conn = 0, pt_parent = 0;
    std::uint64_t pt_dist = 0;
    Certificate ta, tb; // 2-connected-or-K2 part, lifted-scheme part
    Certificate ca, cb; // copies of the cut node's parts for my block
};

LiftCert read_lift(const Certificate& c) {
    CertReader r(c);
    LiftCert p;
    std::uint8_t f = r.u8();
    if (f > 3) throw cert_parse_error();
    p.has_conn = f & 1;
    p.has_copy = f & 2;
    if (p.has_copy && !p.has_conn) throw cert_parse_error();
    p.leader = r.u64();
    p.bdepth = r.u64();
    p.lt_parent = r.u64();
    p.lt_dist = r.u64();
    if (p.has_conn) {
        p.conn = r.u64();
        p.pt_parent = r.u64();
        p.pt_dist = r.u64();
    }
    p.ta = r.cert();
    p.tb = r.cert();
    if (p.has_copy) {
        p.ca = r.cert();
        p.cb = r.cert();
    }
    r.expect_end();
    return p;
}

} // namespace

Scheme block_cut_lift(const Scheme& s) {
    require_node_only(s, "block_cut_lift");
    Scheme ork2 = scheme_2_connected_or_k2();
    Scheme out;
    out.name = "blockwise(" + s.name + ")";
    out.uses_edge_certs = false;
    out.size_tag = lifted_tag(s.size_tag);
    if (s.size_bits && ork2.size_bits)
        out.size_bits = [f = s.size_bits, f0 = ork2.size_bits](long long n) {
            return 2 * (f(n) + f0(n)) + 7 * vbits(n) + 128;
        };
    out.prover = [s, ork2](const Graph& g) -> std::optional<Assignment> {
        Assignment a;
        if (g.n() == 1) {
            a.node[g.id_of(0)] = Certificate{};
            return a;
        }
        auto bd = block_decomposition(g);
        int nblocks = static_cast<int>(bd.blocks.size());
        int root_b = bd.blocks_of_vertex[0][0];
        std::vector<int> depth(nblocks, -1), conn_of(nblocks, -1);
        std::queue<int> bfs;
        depth[root_b] = 0;
        bfs.push(root_b);
        while (!bfs.empty()) {
            int b = bfs.front();
            bfs.pop();
            for (int x : bd.blocks[b]) {
                if (!bd.is_cut[x]) continue;
                for (int b2 : bd.blocks_of_vertex[x])
                    if (depth[b2] < 0) {
                        depth[b2] = depth[b] + 1;
                        conn_of[b2] = x;
                        bfs.push(b2);
                    }
            }
        }
        struct Fields {
            int block = -1;
            NodeId leader = 0;
            std::uint64_t bdepth = 0;
            bool has_conn = false;
            NodeId conn = 0;
            NodeId lt_parent = 0;
            std::uint64_t lt_dist = 0;
            NodeId pt_parent = 0;
            std::uint64_t pt_dist = 0;
            Certificate ta, tb, ca, cb;
            bool has_copy = false;
        };
        std::vector<Fields> fld(g.n());
        std::vector<char> allow(g.n(), 0);
        std::vector<int> dist, par;
        for (int b = 0; b < nblocks; ++b) {
            const auto& members = bd.blocks[b];
            int conn = conn_of[b];
            std::vector<int> interior;
            for (int x : members)
                if (x != conn) interior.push_back(x);
            if (interior.empty()) return std::nullopt; // lone cut vertex block: impossible
            int leader_i = interior[0];
            for (int x : interior)
                if (g.id_of(x) < g.id_of(leader_i)) leader_i = x;
            Graph Bg = g.induced(members);
            auto pa = ork2.prover(Bg);
            if (!pa) return std::nullopt;
            auto sa = s.prover(Bg);
            if (!sa) return std::nullopt;
            // leader tree spans the interior only
            std::fill(allow.begin(), allow.end(), 0);
            for (int x : interior) allow[x] = 1;
            bfs_restricted(g, allow, leader_i, dist, par);
            std::vector<int> pdist, ppar;
            if (conn >= 0) {
                for (int x : members) allow[x] = 1;
                bfs_restricted(g, allow, conn, pdist, ppar);
            }
            for (int x : interior) {
                Fields& f = fld[x];
                f.block = b;
                f.leader = g.id_of(leader_i);
                f.bdepth = static_cast<std::uint64_t>(depth[b]);
                f.has_conn = conn >= 0;
                f.lt_parent = par[x] >= 0 ? g.id_of(par[x]) : f.leader;
                f.lt_dist = static_cast<std::uint64_t>(dist[x]);
                auto ita = pa->node.find(g.id_of(x));
                f.ta = ita == pa->node.end() ? kEmptyCert : ita->second;
                auto itb = sa->node.find(g.id_of(x));
                f.tb = itb == sa->node.end() ? kEmptyCert : itb->second;
                if (conn >= 0) {
                    f.conn = g.id_of(conn);
                    f.pt_parent = ppar[x] >= 0 ? g.id_of(ppar[x]) : f.conn;
                    f.pt_dist = static_cast<std::uint64_t>(pdist[x]);
                    if (g.has_edge(x, conn)) {
                        f.has_copy = true;
                        auto ca = pa->node.find(g.id_of(conn));
                        f.ca = ca == pa->node.end() ? kEmptyCert : ca->second;
                        auto cb = sa->node.find(g.id_of(conn));
                        f.cb = cb == sa->node.end() ? kEmptyCert : cb->second;
                    }
                }
            }
        }
        for (int i = 0; i < g.n(); ++i) {
            const Fields& f = fld[i];
            if (f.block < 0) return std::nullopt; // every node has a home block
            CertWriter w;
            w.u8(static_cast<std::uint8_t>((f.has_conn ? 1 : 0) | (f.has_copy ? 2 : 0)));
            w.u64(f.leader);
            w.u64(f.bdepth);
            w.u64(f.lt_parent);
            w.u64(f.lt_dist);
            if (f.has_conn) {
                w.u64(f.conn);
                w.u64(f.pt_parent);
                w.u64(f.pt_dist);
            }
            w.cert(f.ta);
            w.cert(f.tb);
            if (f.has_copy) {
                w.cert(f.ca);
                w.cert(f.cb);
            }
            a.node[g.id_of(i)] = w.take();
        }
        return a;
    };
    out.verifier = [s, ork2](const LocalView& v) -> bool {
        if (v.neighbors.empty()) return true; // single node: no 2-connected block
        LiftCert me = read_lift(*v.cert);
        if (!me.has_conn && me.bdepth != 0) return false;
        if (me.has_conn && (me.bdepth == 0 || me.conn == v.id || me.conn == me.leader))
            return false;
        std::vector<LiftCert> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) nb.push_back(read_lift(*w.cert));
        // 0 same block, 1 my block's cut node, 2 member of a block I cut off
        std::vector<int> cls(nb.size(), -1);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const LiftCert& w = nb[i];
            NodeId wid = v.neighbors[i].id;
            if (me.has_conn && wid == me.conn) {
                if (w.leader == me.leader) return false;
                if (w.bdepth != me.bdepth - 1) return false;
                cls[i] = 1;
            } else if (w.leader == me.leader) {
                if (w.bdepth != me.bdepth || w.has_conn != me.has_conn) return false;
                if (me.has_conn && w.conn != me.conn) return false;
                cls[i] = 0;
            } else if (w.has_conn && w.conn == v.id) {
                if (w.bdepth != me.bdepth + 1) return false;
                cls[i] = 2;
            } else {
                return false;
            }
        }
        // leader-rooted tree over my block's interior
        if (me.lt_dist == 0) {
            if (v.id != me.leader) return false;
        } else {
            if (v.id == me.leader) return false;
            bool ok = false;
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (cls[i] == 0 && v.neighbors[i].id == me.lt_parent &&
                    nb[i].lt_dist == me.lt_dist - 1)
                    ok = true;
            if (!ok) return false;
        }
        bool conn_adjacent = false;
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (cls[i] == 1) conn_adjacent = true;
        if (me.has_conn) {
            if (me.has_copy != conn_adjacent) return false;
            if (me.pt_dist == 0) return false;
            if (me.pt_dist == 1) {
                if (me.pt_parent != me.conn || !conn_adjacent) return false;
            } else {
                bool ok = false;
                for (std::size_t i = 0; i < nb.size(); ++i)
                    if (cls[i] == 0 && v.neighbors[i].id == me.pt_parent &&
                        nb[i].pt_dist == me.pt_dist - 1)
                        ok = true;
                if (!ok) return false;
            }
        }
        // my own block, with the cut node's certificates adopted from my copy
        {
            LocalView va = sim_view(v.id, &me.ta);
            LocalView vb = sim_view(v.id, &me.tb);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (cls[i] == 0) {
                    sim_add(va, v.neighbors[i].id, &nb[i].ta);
                    sim_add(vb, v.neighbors[i].id, &nb[i].tb);
                } else if (cls[i] == 1) {
                    sim_add(va, v.neighbors[i].id, &me.ca);
                    sim_add(vb, v.neighbors[i].id, &me.cb);
                }
            }
            if (!ork2.verifier(va) || !s.verifier(vb)) return false;
        }
        // each block hanging off me: check the copies agree and simulate my
        // erased membership in it
        std::map<NodeId, std::vector<std::size_t>> children;
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (cls[i] == 2) children[nb[i].leader].push_back(i);
        for (auto& [leader, idx] : children) {
            for (std::size_t i : idx) {
                if (!nb[i].has_copy) return false;
                if (!(nb[i].ca == nb[idx[0]].ca) || !(nb[i].cb == nb[idx[0]].cb))
                    return false;
            }
            LocalView va = sim_view(v.id, &nb[idx[0]].ca);
            LocalView vb = sim_view(v.id, &nb[idx[0]].cb);
            for (std::size_t i : idx) {
                sim_add(va, v.neighbors[i].id, &nb[i].ta);
                sim_add(vb, v.neighbors[i].id, &nb[i].tb);
            }
            if (!ork2.verifier(va) || !s.verifier(vb)) return false;
        }
        return true;
    };
    return out;
}

// ------------------------------------------------------------ scheme_union

namespace {

// tag prefix split; the remainder keeps the branch certificate's exact bits
std::pair<std::uint8_t, Certificate> strip_tag(const Certificate& c) {
    if (c.bits < 8 || c.bytes.size() != (c.bits + 7) / 8) throw cert_parse_error();
    Certificate rest;
    rest.bits = c.bits - 8;
    rest.bytes.assign(c.bytes.begin() + 1, c.bytes.end());
    return {c.bytes[0], rest};
}

Certificate prepend_tag(std::uint8_t tag, const Certificate& c) {
    Certificate out;
    out.bits = c.bits + 8;
    out.bytes.reserve(c.bytes.size() + 1);
    out.bytes.push_back(tag);
    out.bytes.insert(out.bytes.end(), c.bytes.begin(), c.bytes.end());
    return out;
}

int size_tag_rank(const std::string& t) {
    if (t.empty() || t == "O(1)") return 0;
    if (t == "O(log n)") return 1;
    if (t == "O(n)") return 2;
    return 3;
}

} // namespace

Scheme scheme_union(const std::vector<Scheme>& branches, const std::string& name) {
    if (branches.empty() || branches.size() > 255)
        throw std::invalid_argument("scheme_union: need 1..255 branches");
    Scheme out;
    if (name.empty()) {
        out.name = "any-of(";
        for (std::size_t i = 0; i < branches.size(); ++i)
            out.name += (i ? "|" : "") + branches[i].name;
        out.name += ")";
    } else {
        out.name = name;
    }
    for (const auto& b : branches) out.uses_edge_certs |= b.uses_edge_certs;
    out.size_tag = "O(1)";
    for (const auto& b : branches)
        if (size_tag_rank(b.size_tag) > size_tag_rank(out.size_tag)) out.size_tag = b.size_tag;
    bool all_sized = true;
    for (const auto& b : branches) all_sized = all_sized && bool(b.size_bits);
    if (all_sized) {
        auto sizes = branches;
        out.size_bits = [sizes](long long n) {
            long long best = 0;
            for (const auto& b : sizes) best = std::max(best, b.size_bits(n));
            return best + 8;
        };
    }
    out.prover = [branches](const Graph& g) -> std::optional<Assignment> {
        for (std::size_t t = 0; t < branches.size(); ++t) {
            std::optional<Assignment> a;
            try {
                a = branches[t].prover(g);
            } catch (const std::invalid_argument&) {
                continue;
            } catch (const search_budget_exceeded&) {
                continue;
            }
            if (!a) continue;
            Assignment tagged;
            tagged.edge = a->edge;
            for (NodeId id : g.ids()) {
                auto it = a->node.find(id);
                tagged.node[id] = prepend_tag(static_cast<std::uint8_t>(t),
                                              it == a->node.end() ? kEmptyCert : it->second);
            }
            return tagged;
        }
        return std::nullopt;
    };
    out.verifier = [branches](const LocalView& v) -> bool {
        auto [tag, mine] = strip_tag(*v.cert);
        if (tag >= branches.size()) return false;
        std::vector<Certificate> nb;
        nb.reserve(v.neighbors.size());
        for (const auto& w : v.neighbors) {
            auto [t2, c2] = strip_tag(*w.cert);
            if (t2 != tag) return false;
            nb.push_back(std::move(c2));
        }
        LocalView sim = sim_view(v.id, &mine);
        for (std::size_t i = 0; i < v.neighbors.size(); ++i)
            sim_add(sim, v.neighbors[i].id, &nb[i], v.neighbors[i].edge_cert);
        return branches[tag].verifier(sim);
    };
    return out;
}

} // namespace lc
