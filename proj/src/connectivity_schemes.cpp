#include "lc/connectivity_schemes.hpp"

#include "lc/connectivity_core.hpp"
#include "lc/ears.hpp"
#include "lc/graph.hpp"

#include <stdexcept>
#include <string>

namespace lc {

namespace {

enum class EarMode { Open, OpenOrK2, Closed, NonSeparating };

bool three(EarMode m) { return m == EarMode::NonSeparating; }

// Shared certificate: anchor pair, then the node's ear record. Anchors write
// zeros for the ear fields, nobody reads them. The non-separating variant
// appends the reserved-edge endpoint and the last ear index.
struct EarCert {
    std::uint64_t x0 = 0, y0 = 0;
    std::uint64_t i = 0, endA = 0, endB = 0, len = 0, posA = 0;
    std::uint64_t u = 0, last = 0;
};

EarCert read_ear(const Certificate& c, EarMode m) {
    CertReader r(c);
    EarCert f;
    f.x0 = r.u64();
    f.y0 = r.u64();
    f.i = r.u64();
    f.endA = r.u64();
    f.endB = r.u64();
    f.len = r.u64();
    f.posA = r.u64();
    if (three(m)) {
        f.u = r.u64();
        f.last = r.u64();
    }
    r.expect_end();
    return f;
}

Certificate write_ear(const EarCert& f, EarMode m) {
    CertWriter w;
    w.u64(f.x0);
    w.u64(f.y0);
    w.u64(f.i);
    w.u64(f.endA);
    w.u64(f.endB);
    w.u64(f.len);
    w.u64(f.posA);
    if (three(m)) {
        w.u64(f.u);
        w.u64(f.last);
    }
    return w.take();
}

// assignment from a list of ears given as full vertex sequences; ear k gets
// index k + shift
void assign_ears(const Graph& g, Assignment& a, const std::vector<std::vector<int>>& ears,
                 std::uint64_t shift, const EarCert& common, EarMode m) {
    for (std::size_t k = 0; k < ears.size(); ++k) {
        const auto& seq = ears[k];
        EarCert f = common;
        f.i = k + shift;
        f.endA = g.id_of(seq.front());
        f.endB = g.id_of(seq.back());
        f.len = seq.size() - 2;
        for (std::size_t p = 1; p + 1 < seq.size(); ++p) {
            f.posA = p;
            a.node[g.id_of(seq[p])] = write_ear(f, m);
        }
    }
}

bool verify_ear_cert(const LocalView& v, EarMode m) {
    EarCert f = read_ear(*v.cert, m);
    if (f.x0 == f.y0) return false;
    const bool anchor = v.id == f.x0 || v.id == f.y0;
    auto is_anchor_id = [&](NodeId id) { return id == f.x0 || id == f.y0; };

    for (const auto& nb : v.neighbors) {
        EarCert nf = read_ear(*nb.cert, m);
        if (nf.x0 != f.x0 || nf.y0 != f.y0) return false;
        if (three(m) && (nf.u != f.u || nf.last != f.last)) return false;
    }

    if (v.id == f.x0) {
        if (!v.has_neighbor(f.y0)) return false;
        // K2 alone is not 2-connected; the anchor must touch the rest
        if (m != EarMode::OpenOrK2 && v.neighbors.size() < 2) return false;
    }
    if (v.id == f.y0) {
        if (!v.has_neighbor(f.x0)) return false;
        if (m == EarMode::Closed) {
            // the base cycle must really pass through this anchor, otherwise
            // a cycle hung onto the other anchor could smuggle in a bridge
            bool witness = false;
            for (const auto& nb : v.neighbors) {
                if (is_anchor_id(nb.id)) continue;
                EarCert nf = read_ear(*nb.cert, m);
                if (nf.i != 0) continue;
                if ((nf.posA == 1 && nf.endA == f.y0) ||
                    (nf.posA == nf.len && nf.endB == f.y0))
                    witness = true;
            }
            if (!witness) return false;
        }
    }

    if (!anchor) {
        const std::uint64_t L = f.len, pA = f.posA, i = f.i;
        if (L == 0 || pA == 0 || pA > L) return false;
        if (f.endA == f.endB) {
            // closed ears exist only in the 2-edge world and need two inner
            // vertices, else the attachment edge doubles as the return edge
            if (m != EarMode::Closed || L < 2) return false;
        }
        if (i == 0 && !((f.endA == f.x0 && f.endB == f.y0) ||
                        (f.endA == f.y0 && f.endB == f.x0)))
            return false;

        auto same_ear_at = [&](std::uint64_t pos) {
            for (const auto& nb : v.neighbors) {
                if (is_anchor_id(nb.id)) continue;
                EarCert nf = read_ear(*nb.cert, m);
                if (nf.i == i && nf.endA == f.endA && nf.endB == f.endB &&
                    nf.len == L && nf.posA == pos)
                    return true;
            }
            return false;
        };
        auto attaches_to = [&](NodeId end) {
            const NeighborView* e = v.find(end);
            if (!e) return false;
            if (is_anchor_id(end)) return true;
            return read_ear(*e->cert, m).i < i; // strict descent grounds the ears
        };
        if (pA == 1) {
            if (!attaches_to(f.endA)) return false;
        } else if (!same_ear_at(pA - 1)) {
            return false;
        }
        if (pA == L) {
            if (!attaches_to(f.endB)) return false;
        } else if (!same_ear_at(pA + 1)) {
            return false;
        }

        if (three(m)) {
            if (i > f.last) return false;
            if (v.id != f.u) {
                // non-separation: someone later must depend on this vertex
                bool later = false;
                for (const auto& nb : v.neighbors) {
                    if (is_anchor_id(nb.id)) continue;
                    if (read_ear(*nb.cert, m).i > i) later = true;
                }
                if (!later) return false;
            }
        }
    }

    if (three(m)) {
        if (v.id == f.u) {
            if (anchor) return false;
            if (f.i != f.last || f.len != 1) return false;
            // the reserved edge must stay outside every ear
            if (f.endA == f.x0 || f.endB == f.x0) return false;
        }
        // reserved-edge marker: exactly the edge (x0, u) carries one
        int marked = 0;
        NodeId marked_to = 0;
        for (const auto& nb : v.neighbors) {
            if (nb.edge_cert->empty()) continue;
            CertReader r(*nb.edge_cert);
            if (r.u8() != 1) return false;
            r.expect_end();
            ++marked;
            marked_to = nb.id;
        }
        if (v.id == f.x0) {
            if (marked != 1 || marked_to != f.u) return false;
        } else if (v.id == f.u) {
            if (marked != 1 || marked_to != f.x0) return false;
        } else if (marked != 0) {
            return false;
        }
    }
    return true;
}

Scheme make_open_scheme(EarMode m, const std::string& name) {
    Scheme s;
    s.name = name;
    s.prover = [m](const Graph& g) -> std::optional<Assignment> {
        if (m == EarMode::OpenOrK2 && g.n() == 2 && g.m() == 1) {
            Assignment a;
            EarCert f;
            f.x0 = g.id_of(0);
            f.y0 = g.id_of(1);
            a.node[f.x0] = write_ear(f, m);
            a.node[f.y0] = write_ear(f, m);
            return a;
        }
        auto d = open_ear_decomposition(g);
        if (!d) return std::nullopt;
        EarCert common;
        common.x0 = g.id_of(d->x0);
        common.y0 = g.id_of(d->y0);
        Assignment a;
        a.node[common.x0] = write_ear(common, m);
        a.node[common.y0] = write_ear(common, m);
        assign_ears(g, a, d->ears, 0, common, m);
        return a;
    };
    s.verifier = [m](const LocalView& v) { return verify_ear_cert(v, m); };
    s.size_tag = "O(log n)";
    s.size_bits = [](long long n) { return 56 + 10LL * ceil_log2(n); };
    return s;
}

} // namespace

Scheme scheme_2_connected() { return make_open_scheme(EarMode::Open, "2-connected"); }

Scheme scheme_2_connected_or_k2() {
    return make_open_scheme(EarMode::OpenOrK2, "2-connected-or-k2");
}

Scheme scheme_2_edge_connected() {
    Scheme s;
    s.name = "2-edge-connected";
    s.prover = [](const Graph& g) -> std::optional<Assignment> {
        auto d = closed_ear_decomposition(g);
        if (!d) return std::nullopt;
        EarCert common;
        common.x0 = g.id_of(d->base_cycle[0]);
        common.y0 = g.id_of(d->base_cycle[1]);
        Assignment a;
        a.node[common.x0] = write_ear(common, EarMode::Closed);
        a.node[common.y0] = write_ear(common, EarMode::Closed);
        // the base cycle minus its first edge becomes ear 0
        std::vector<int> ear0(d->base_cycle.begin() + 1, d->base_cycle.end());
        ear0.push_back(d->base_cycle[0]);
        std::vector<std::vector<int>> ears = {ear0};
        ears.insert(ears.end(), d->ears.begin(), d->ears.end());
        assign_ears(g, a, ears, 0, common, EarMode::Closed);
        return a;
    };
    s.verifier = [](const LocalView& v) { return verify_ear_cert(v, EarMode::Closed); };
    s.size_tag = "O(log n)";
    s.size_bits = [](long long n) { return 56 + 10LL * ceil_log2(n); };
    return s;
}

Scheme scheme_3_connected() {
    Scheme s;
    s.name = "3-connected";
    s.uses_edge_certs = true;
    s.prover = [](const Graph& g) -> std::optional<Assignment> {
        if (g.n() > 12)
            throw std::invalid_argument("3-connectivity prover is exhaustive, refusing n=" +
                                        std::to_string(g.n()) + " > 12");
        if (!is_k_connected(g, 3)) return std::nullopt;
        auto d = nonseparating_ear_sequence(g);
        if (!d) return std::nullopt;
        EarCert common;
        common.x0 = g.id_of(d->x0);
        common.y0 = g.id_of(d->y0);
        common.u = g.id_of(d->u);
        common.last = d->ears.size() - 1;
        Assignment a;
        a.node[common.x0] = write_ear(common, EarMode::NonSeparating);
        a.node[common.y0] = write_ear(common, EarMode::NonSeparating);
        assign_ears(g, a, d->ears, 0, common, EarMode::NonSeparating);
        CertWriter w;
        w.u8(1);
        a.edge[edge_key(g.id_of(d->r), g.id_of(d->u))] = w.take();
        return a;
    };
    s.verifier = [](const LocalView& v) { return verify_ear_cert(v, EarMode::NonSeparating); };
    s.size_tag = "O(log n)";
    s.size_bits = [](long long n) { return 72 + 12LL * ceil_log2(n); };
    return s;
}

} // namespace lc
