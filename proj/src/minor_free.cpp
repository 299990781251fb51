#include "lc/minor_free.hpp"

#include "lc/building_blocks.hpp"
#include "lc/combinators.hpp"
#include "lc/connectivity_core.hpp"
#include "lc/enumerate.hpp"
#include "lc/minor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lc {

namespace {

// exact tiny-block acceptors used as union branches
Scheme just_k2() {
    return scheme_universal("just-k2", [](const Graph& g) { return g.n() == 2; });
}
Scheme just_k3() {
    return scheme_universal("just-k3", [](const Graph& g) { return g.n() == 3 && g.m() == 3; });
}
Scheme just_k4() {
    return scheme_universal("just-k4", [](const Graph& g) { return g.n() == 4 && g.m() == 6; });
}
Scheme small_graph(int b) {
    return scheme_universal("small-" + std::to_string(b),
                            [b](const Graph& g) { return g.n() <= b; });
}

// K_{2,p} plus an optional edge between the hubs, any p >= 0. Every node
// carries the same (hub a, hub b, hub edge) triple; legs check their
// neighborhood is exactly {a, b}, hubs check the hub edge claim. Legs pin
// both hubs into existence, legs never touch each other, so an accepting
// graph is exactly this shape.
Scheme scheme_k2p() {
    Scheme s;
    s.name = "k2p";
    s.prover = [](const Graph& g) -> std::optional<Assignment> {
        const int n = g.n();
        if (n < 2) return std::nullopt;
        auto fits = [&](int ia, int ib) -> std::optional<Assignment> {
            bool he = g.has_edge(ia, ib);
            int p = 0;
            for (int v = 0; v < n; ++v) {
                if (v == ia || v == ib) continue;
                ++p;
                if (g.degree(v) != 2 || !g.has_edge(v, ia) || !g.has_edge(v, ib))
                    return std::nullopt;
            }
            if (g.m() != 2 * p + (he ? 1 : 0)) return std::nullopt;
            CertWriter w;
            w.u64(std::min(g.id_of(ia), g.id_of(ib)));
            w.u64(std::max(g.id_of(ia), g.id_of(ib)));
            w.u8(he ? 1 : 0);
            Certificate c = w.take();
            Assignment out;
            for (NodeId id : g.ids()) out.node[id] = c;
            return out;
        };
        if (n <= 6) {
            // degrees can tie on tiny instances; just try the pairs
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (auto a = fits(i, j)) return a;
            return std::nullopt;
        }
        // with p >= 5 the hubs are the only nodes of degree above two
        int h1 = -1, h2 = -1;
        for (int v = 0; v < n; ++v) {
            if (h1 < 0 || g.degree(v) > g.degree(h1)) {
                h2 = h1;
                h1 = v;
            } else if (h2 < 0 || g.degree(v) > g.degree(h2)) {
                h2 = v;
            }
        }
        return fits(h1, h2);
    };
    s.verifier = [](const LocalView& v) -> bool {
        auto parse = [](const Certificate& c) {
            CertReader r(c);
            NodeId a = r.u64(), b = r.u64();
            std::uint8_t he = r.u8();
            r.expect_end();
            if (a >= b || he > 1) throw cert_parse_error();
            return std::make_tuple(a, b, he == 1);
        };
        auto [a, b, he] = parse(*v.cert);
        for (const auto& nb : v.neighbors)
            if (parse(*nb.cert) != std::make_tuple(a, b, he)) return false;
        if (v.id != a && v.id != b) {
            return v.neighbors.size() == 2 && v.neighbors[0].id == a &&
                   v.neighbors[1].id == b;
        }
        NodeId other = v.id == a ? b : a;
        bool saw_other = false;
        for (const auto& nb : v.neighbors)
            if (nb.id == other) saw_other = true;
        return saw_other == he;
    };
    s.size_tag = "O(log n)";
    s.size_bits = [](long long n) { return 40 + 4LL * ceil_log2(n); };
    return s;
}

Scheme renamed(Scheme s, const std::string& name) {
    s.name = name;
    return s;
}

// Patterns whose avoiders cannot grow: when every connected graph on b+1
// nodes has an h minor, the h-free connected graphs all have at most b nodes
// (contracting a spanning tree edge keeps a graph connected and never gains
// minors, so the property is monotone in n). Returns that b.
std::optional<int> bounded_free_size(const Graph& h) {
    for (int n = 1; n <= 5; ++n) {
        bool all = true;
        for (const auto& g : connected_graphs_up_to(n)) {
            if (g.n() != n) continue;
            if (!contains_minor(g, h)) {
                all = false;
                break;
            }
        }
        if (all) return n - 1;
    }
    return std::nullopt;
}

Scheme bounded_scheme(const Graph& h, const std::string& name, int b) {
    Graph hc = h;
    Scheme s = scheme_universal(
        name, [hc, b](const Graph& g) { return g.n() <= b && !contains_minor(g, hc); });
    s.name = name;
    s.size_tag = "O(1)";
    long long cap = 72 + 16LL * b + 1LL * b * b;
    s.size_bits = [cap](long long) { return cap; };
    return s;
}

// catalog label by isomorphism against the named small graphs
std::optional<std::string> pattern_label(const Graph& h) {
    if (h.n() > kDenseMax) return std::nullopt;
    for (const auto& name : named_graph_names())
        if (is_isomorphic(h, named_graph(name))) return name;
    return std::nullopt;
}

} // namespace

Scheme scheme_minor_free(const Graph& h) {
    if (h.n() == 0) throw std::invalid_argument("minor pattern not covered: empty pattern");
    auto label = pattern_label(h);
    std::string l = label.value_or("");
    if (l == "p2") l = "k2";
    if (l == "c3") l = "k3";
    std::string nm = "minor-free(" + (label ? l : "?") + ")";

    // a connected graph has a k3 minor iff it has any cycle
    if (l == "k3") return renamed(scheme_acyclicity(), nm);
    // no claw minor: no node of three independent directions, so path or cycle
    if (l == "claw") return renamed(scheme_union({scheme_path(), scheme_cycle()}, nm), nm);
    // no p4 minor: radius-1 graphs, i.e. stars, plus the triangle
    if (l == "p4") return renamed(scheme_union({scheme_star(), just_k3()}, nm), nm);
    // a cycle plus any extra node yields a triangle-with-pendant (and a
    // fortiori a triangle plus isolated node), so only trees and cycles avoid
    // these two patterns
    if (l == "paw" || l == "k3+k1")
        return renamed(scheme_union({scheme_acyclicity(), scheme_cycle()}, nm), nm);
    // any 2-connected block on four or more nodes has a c4 minor
    if (l == "c4")
        return renamed(block_cut_lift(scheme_union({just_k2(), just_k3()})), nm);
    // diamond-free blocks are single cycles (or bridges)
    if (l == "diamond")
        return renamed(block_cut_lift(scheme_union({just_k2(), scheme_cycle()})), nm);
    // a block with a cycle through five or more nodes has a c5 minor, and
    // the 2-connected graphs whose cycles all stay short are the two-hub
    // books k_{2,p} (hub edge optional) besides the tiny ones
    if (l == "c5")
        return renamed(block_cut_lift(scheme_union({small_graph(4), scheme_k2p()})), nm);
    // a chord on a long cycle contracts onto the house, so a block is either
    // a chordless cycle or already c5-free
    if (l == "house")
        return renamed(
            block_cut_lift(scheme_union({small_graph(4), scheme_k2p(), scheme_cycle()})), nm);
    // blocks are outerplanar or k4
    if (l == "k23")
        return renamed(
            block_cut_lift(scheme_union({just_k2(), scheme_outerplanar_2conn(), just_k4()})),
            nm);

    if (auto b = bounded_free_size(h)) return bounded_scheme(h, nm, *b);
    throw std::invalid_argument(
        "minor pattern not covered: " +
        (label ? l : std::to_string(h.n()) + " nodes, " + std::to_string(h.m()) + " edges"));
}

Scheme scheme_C4_free() { return scheme_minor_free(named_graph("c4")); }
Scheme scheme_C5_free() { return scheme_minor_free(named_graph("c5")); }
Scheme scheme_diamond_free() { return scheme_minor_free(named_graph("diamond")); }
Scheme scheme_house_free() { return scheme_minor_free(named_graph("house")); }
Scheme scheme_K23_free() { return scheme_minor_free(named_graph("k23")); }

Scheme scheme_outerplanar() {
    return renamed(block_cut_lift(scheme_union({just_k2(), scheme_outerplanar_2conn()})),
                   "outerplanar");
}

} // namespace lc
