#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lc/cert.hpp"
#include "lc/connectivity_core.hpp"
#include "lc/ears.hpp"
#include "lc/enumerate.hpp"
#include "lc/graph.hpp"
#include "lc/minor.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace lc;

namespace {

Graph minus_edge(const Graph& g, int a, int b) {
    std::vector<std::pair<NodeId, NodeId>> es;
    for (auto [u, v] : g.edges())
        if (!((u == a && v == b) || (u == b && v == a)))
            es.push_back({g.id_of(u), g.id_of(v)});
    return Graph(g.ids(), es);
}

int components_without_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> alive(g.n(), 1);
    for (int v : drop) alive[v] = 0;
    return component_count(g, alive);
}

// independent connectivity test straight from the definition
bool brute_k_connected(const Graph& g, int k) {
    if (g.n() < k + 1) return false;
    if (!g.connected()) return false;
    if (k <= 1) return true;
    std::vector<int> pick;
    // all (k-1)-subsets
    std::function<bool(int)> rec = [&](int from) -> bool {
        if ((int)pick.size() == k - 1) return components_without_vertices(g, pick) <= 1;
        for (int v = from; v < g.n(); ++v) {
            pick.push_back(v);
            if (!rec(v + 1)) return false;
            pick.pop_back();
        }
        return true;
    };
    return rec(0);
}

// girth via the edge-deletion distance trick: any shortest cycle through
// edge (u,v) shows up as dist(u,v) in g-e plus one
int brute_girth(const Graph& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        Graph h = minus_edge(g, u, v);
        auto dist = bfs_distances(h, u);
        if (dist[v] < 0) continue;
        int len = dist[v] + 1;
        if (best < 0 || len < best) best = len;
    }
    return best;
}

int min_degree_of_subset(const Graph& g, unsigned mask) {
    int best = g.n();
    for (int v = 0; v < g.n(); ++v) {
        if (!((mask >> v) & 1)) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if ((mask >> w) & 1) ++d;
        best = std::min(best, d);
    }
    return best;
}

int brute_degeneracy(const Graph& g) {
    int best = 0;
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask)
        best = std::max(best, min_degree_of_subset(g, mask));
    return best;
}

bool simple_cycle_in(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::set<int> seen(cyc.begin(), cyc.end());
    if (seen.size() != cyc.size()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

} // namespace

TEST_CASE("graph construction and lookups") {
    Graph g = make_graph({5, 1, 9}, {{1, 5}, {5, 9}});
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.id_of(0) == 1);
    CHECK(g.id_of(2) == 9);
    CHECK(g.index_of(5) == 1);
    CHECK(!g.index_of(7).has_value());
    CHECK(g.has_edge_ids(9, 5));
    CHECK(!g.has_edge_ids(1, 9));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.connected());

    CHECK_THROWS_AS(make_graph({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph({1, 2}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph({1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph({1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("graph text round trip") {
    Graph g = make_graph({0, 1, 2, 3, 7}, {{0, 1}, {1, 2}, {2, 3}});
    std::string txt = format_graph_text(g);
    Graph h = parse_graph_text(txt);
    CHECK(h.ids() == g.ids());
    CHECK(h.edge_ids() == g.edge_ids());

    // header-driven padding: 4 nodes, one edge on ids 2 and 5
    Graph p = parse_graph_text("4 1\n2 5\n");
    CHECK(p.ids() == std::vector<NodeId>{0, 1, 2, 5});

    // explicit isolated nodes and comments
    Graph q = parse_graph_text("# c\n3 1\nv 10\n0 1\n");
    CHECK(q.ids() == std::vector<NodeId>{0, 1, 10});
    CHECK(q.m() == 1);

    CHECK_THROWS_AS(parse_graph_text("2 2\n0 1\n1 0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_text("2 1\n0 0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_text("x\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_text("2 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_text("1 1\n0 1\n"), std::runtime_error);
}

TEST_CASE("graph helpers") {
    Graph g = make_graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(!g.connected());
    std::vector<char> alive(5, 1);
    CHECK(component_count(g, alive) == 2);
    CHECK(component_of(g, 0, alive) == std::vector<int>{0, 1, 2});
    alive[1] = 0;
    CHECK(component_count(g, alive) == 3);

    auto dist = bfs_distances(g, 0);
    CHECK(dist[2] == 2);
    CHECK(dist[4] == -1);

    Graph ind = g.induced({0, 1, 3});
    CHECK(ind.n() == 3);
    CHECK(ind.m() == 1);
    CHECK(ind.has_edge_ids(0, 1));

    Graph rel = g.relabeled({10, 11, 12, 13, 14});
    CHECK(rel.has_edge_ids(10, 11));
    CHECK(rel.m() == g.m());
}

TEST_CASE("census counts and canonical order") {
    auto all7 = connected_graphs_up_to(7);
    int want[] = {0, 1, 1, 2, 6, 21, 112, 853};
    std::vector<int> got(8, 0);
    for (const auto& g : all7) got[g.n()]++;
    for (int n = 1; n <= 7; ++n) CHECK(got[n] == want[n]);
    CHECK((int)all7.size() == 996);

    // ids are 0..n-1 and the listing is stable
    for (const auto& g : all7) {
        for (int i = 0; i < g.n(); ++i) REQUIRE(g.id_of(i) == (NodeId)i);
    }
    for (std::size_t i = 0; i < all7.size(); i += 97) {
        CHECK(canonical_index(all7[i], 7) == (int)i);
    }
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(named_graph("c4"), make_graph({7, 3, 9, 1}, {{7, 3}, {3, 9}, {9, 1}, {1, 7}})));
    CHECK(!is_isomorphic(named_graph("c4"), named_graph("diamond")));
    CHECK(!is_isomorphic(named_graph("c5"), named_graph("house")));
    CHECK(is_isomorphic(named_graph("bull"),
                        make_graph({0, 1, 2, 3, 4}, {{2, 3}, {3, 4}, {2, 4}, {0, 2}, {1, 3}})));
    // same degree sequence, different graphs
    Graph a = named_graph("c6");
    Graph b = make_graph({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(!is_isomorphic(a, b));
}

TEST_CASE("named graphs") {
    struct Row {
        const char* name;
        int n, m;
    };
    for (Row r : {Row{"k4", 4, 6}, Row{"c5", 5, 5}, Row{"p4", 4, 3}, Row{"claw", 4, 3},
                  Row{"paw", 4, 4}, Row{"diamond", 4, 5}, Row{"house", 5, 6}, Row{"bull", 5, 5},
                  Row{"gem", 5, 7}, Row{"k23", 5, 6}, Row{"k24", 6, 8}, Row{"k2+k1", 3, 1},
                  Row{"3k1", 3, 0}, Row{"p3+k1", 4, 2}, Row{"k3+k1", 4, 3}}) {
        Graph g = named_graph(r.name);
        CHECK(g.n() == r.n);
        CHECK(g.m() == r.m);
    }
    CHECK(!is_isomorphic(named_graph("claw"), named_graph("p4")));
    CHECK_THROWS_AS(named_graph("nope"), std::invalid_argument);
    for (const auto& name : named_graph_names()) CHECK(named_graph(name).n() >= 1);
}

TEST_CASE("cut vertices, bridges, blocks against removal tests") {
    for (const auto& g : connected_graphs_up_to(6)) {
        auto cuts = cut_vertices(g);
        std::vector<int> brute;
        for (int v = 0; v < g.n(); ++v)
            if (components_without_vertices(g, {v}) > 1) brute.push_back(v);
        REQUIRE(cuts == brute);

        auto brs = bridges(g);
        std::vector<std::pair<int, int>> brute_b;
        for (auto [u, v] : g.edges())
            if (!minus_edge(g, u, v).connected()) brute_b.push_back({u, v});
        REQUIRE(brs == brute_b);

        auto bd = block_decomposition(g);
        std::set<int> covered;
        for (const auto& blk : bd.blocks) covered.insert(blk.begin(), blk.end());
        REQUIRE((int)covered.size() == g.n());
        // every edge lives in exactly one block
        for (auto [u, v] : g.edges()) {
            int hits = 0;
            for (const auto& blk : bd.blocks)
                if (std::binary_search(blk.begin(), blk.end(), u) &&
                    std::binary_search(blk.begin(), blk.end(), v))
                    ++hits;
            REQUIRE(hits == 1);
        }
        // is_cut matches, blocks pairwise share at most a cut vertex
        for (int v = 0; v < g.n(); ++v) {
            bool c = std::binary_search(cuts.begin(), cuts.end(), v);
            REQUIRE((bool)bd.is_cut[v] == c);
            REQUIRE(bd.blocks_of_vertex[v].size() == (c ? bd.blocks_of_vertex[v].size() : 1));
            if (c) REQUIRE(bd.blocks_of_vertex[v].size() >= 2);
        }
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(),
                                      bd.blocks[j].begin(), bd.blocks[j].end(),
                                      std::back_inserter(common));
                REQUIRE(common.size() <= 1);
                if (common.size() == 1) REQUIRE((bool)bd.is_cut[common[0]]);
            }
    }
}

TEST_CASE("k-connectivity conventions and brute force") {
    CHECK(is_k_connected(named_graph("k2"), 1));
    CHECK(!is_k_connected(named_graph("k2"), 2));
    CHECK(is_k_connected(named_graph("k3"), 2));
    CHECK(!is_k_connected(named_graph("k3"), 3));
    CHECK(is_k_connected(named_graph("k4"), 3));
    CHECK(!is_k_connected(named_graph("k23"), 3));

    for (const auto& g : connected_graphs_up_to(6))
        for (int k = 1; k <= 3; ++k) REQUIRE(is_k_connected(g, k) == brute_k_connected(g, k));

    for (const auto& g : connected_graphs_up_to(6))
        REQUIRE(is_2_edge_connected(g) == (g.n() >= 3 && bridges(g).empty()));
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(named_graph("p5")) == 1);
    CHECK(degeneracy(named_graph("c6")) == 2);
    CHECK(degeneracy(named_graph("k4")) == 3);
    CHECK(degeneracy(named_graph("k24")) == 2);
    for (const auto& g : connected_graphs_up_to(6)) {
        int d = degeneracy(g);
        REQUIRE(d == brute_degeneracy(g));
        auto order = degeneracy_order(g);
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
        for (int v = 0; v < g.n(); ++v) {
            int fwd = 0;
            for (int w : g.neighbors(v))
                if (pos[w] > pos[v]) ++fwd;
            REQUIRE(fwd <= d);
        }
    }
}

TEST_CASE("girth and shortest cycle") {
    CHECK(shortest_cycle_length(named_graph("p5")) == -1);
    CHECK(!shortest_cycle(named_graph("p5")).has_value());
    CHECK(shortest_cycle_length(named_graph("house")) == 3);
    CHECK(shortest_cycle_length(named_graph("k24")) == 4);

    for (const auto& g : connected_graphs_up_to(6)) {
        int want = brute_girth(g);
        REQUIRE(shortest_cycle_length(g) == want);
        auto cyc = shortest_cycle(g);
        if (want < 0) {
            REQUIRE(!cyc.has_value());
        } else {
            REQUIRE(cyc.has_value());
            REQUIRE((int)cyc->size() == want);
            REQUIRE(simple_cycle_in(g, *cyc));
        }
    }
}

TEST_CASE("minor oracle agrees with the naive check") {
    std::vector<std::string> pats = {"k3", "p4", "claw", "c4", "paw",
                                     "diamond", "k4", "c5", "k23", "k5"};
    for (const auto& g : connected_graphs_up_to(5)) {
        for (const auto& p : pats) {
            Graph h = named_graph(p);
            auto got = contains_minor(g, h);
            REQUIRE(got.has_value() == contains_minor_naive(g, h));
            if (got) REQUIRE(validate_minor_model(g, h, *got));
        }
    }
    // a few 6-vertex hosts
    for (const char* name : {"k24", "c6", "p6"}) {
        Graph g = named_graph(name);
        for (const auto& p : pats) {
            Graph h = named_graph(p);
            auto got = contains_minor(g, h);
            REQUIRE(got.has_value() == contains_minor_naive(g, h));
        }
    }
}

TEST_CASE("minor oracle guards and budget") {
    // 2-connected pattern lifts the host size guard
    std::vector<NodeId> path_ids;
    std::vector<std::pair<NodeId, NodeId>> path_edges;
    for (NodeId i = 0; i < 20; ++i) {
        path_ids.push_back(i);
        if (i) path_edges.push_back({i - 1, i});
    }
    Graph p20(path_ids, path_edges);
    CHECK(!contains_minor(p20, named_graph("k3")).has_value());

    auto cyc_edges = path_edges;
    cyc_edges.push_back({19, 0});
    Graph c20(path_ids, cyc_edges);
    auto m = contains_minor(c20, named_graph("k3"));
    REQUIRE(m.has_value());
    CHECK(validate_minor_model(c20, named_graph("k3"), *m));

    // non-2-connected pattern on a large host is out of range
    CHECK_THROWS_AS(contains_minor(p20, named_graph("p4")), std::invalid_argument);
    // oversized pattern is out of range
    CHECK_THROWS_AS(contains_minor(named_graph("k4"), named_graph("c7")), std::invalid_argument);

    CHECK_THROWS_AS(find_minor_model(named_graph("k6"), named_graph("k4"), 1),
                    search_budget_exceeded);
    CHECK(contains_minor_budgeted(named_graph("k6"), named_graph("k4"), 1'000'000));
}

TEST_CASE("subdivision") {
    Graph k4 = named_graph("k4");
    Graph s = subdivide_edges(k4, k4.edge_ids(), 2);
    CHECK(s.n() == 4 + 2 * 6);
    CHECK(s.m() == 3 * 6);
    CHECK(contains_minor(s, named_graph("k4")).has_value());
    CHECK(!contains_minor(s, named_graph("k5")).has_value());
    CHECK_THROWS_AS(subdivide_edges(k4, {{0, 99}}, 1), std::invalid_argument);
}

TEST_CASE("open and closed ear decompositions match connectivity") {
    for (const auto& g : connected_graphs_up_to(6)) {
        auto open = open_ear_decomposition(g);
        REQUIRE(open.has_value() == is_k_connected(g, 2));
        if (open) REQUIRE(validate_open_ears(g, *open));

        auto closed = closed_ear_decomposition(g);
        REQUIRE(closed.has_value() == is_2_edge_connected(g));
        if (closed) REQUIRE(validate_closed_ears(g, *closed));
    }
}

TEST_CASE("nonseparating ear sequences match 3-connectivity") {
    for (const auto& g : connected_graphs_up_to(6)) {
        auto seq = nonseparating_ear_sequence(g);
        REQUIRE(seq.has_value() == is_k_connected(g, 3));
        if (seq) REQUIRE(validate_ear_sequence_3c(g, *seq));
    }
    auto pinned = nonseparating_ear_sequence(named_graph("k4"), 0, 1);
    REQUIRE(pinned.has_value());
    CHECK(pinned->r == 0);
    CHECK(pinned->u == 1);
    CHECK(validate_ear_sequence_3c(named_graph("k4"), *pinned));
    CHECK_THROWS_AS(nonseparating_ear_sequence(named_graph("c4"), 0, 2), std::invalid_argument);
}

TEST_CASE("nested ear decompositions recognize series-parallel blocks") {
    for (const auto& g : connected_graphs_up_to(6)) {
        auto nd = nested_ear_decomposition(g);
        bool want = g.n() == 2 ||
                    (is_k_connected(g, 2) && !contains_minor(g, named_graph("k4")).has_value());
        REQUIRE(nd.has_value() == want);
        if (nd) REQUIRE(validate_nested_ears(g, *nd));
    }
}

TEST_CASE("certificate writer and reader") {
    CertWriter w;
    w.u64(0);
    w.u64(127);
    w.u64(128);
    w.u64(300);
    w.u64(0x8000000000000000ull);
    w.u8(42);
    Certificate inner;
    inner.bytes = {0xab};
    inner.bits = 8;
    w.cert(inner);
    Certificate c = w.take();

    CertReader r(c);
    CHECK(r.u64() == 0);
    CHECK(r.u64() == 127);
    CHECK(r.u64() == 128);
    CHECK(r.u64() == 300);
    CHECK(r.u64() == 0x8000000000000000ull);
    CHECK(r.u8() == 42);
    Certificate got = r.cert();
    CHECK(got == inner);
    CHECK(r.at_end());
    CHECK_NOTHROW(r.expect_end());

    CertReader r2(c);
    r2.u64();
    CHECK_THROWS_AS(r2.expect_end(), cert_parse_error);

    Certificate trunc;
    trunc.bytes = {0x80};
    trunc.bits = 8;
    CertReader r3(trunc);
    CHECK_THROWS_AS(r3.u64(), cert_parse_error);

    Certificate runaway;
    runaway.bytes.assign(11, 0xff);
    runaway.bits = 88;
    CertReader r4(runaway);
    CHECK_THROWS_AS(r4.u64(), cert_parse_error);
}

TEST_CASE("assignment text round trip") {
    Assignment a;
    CertWriter w;
    w.u64(7);
    a.node[3] = w.take();
    a.node[10] = {};
    w.u8(0xff);
    a.edge[edge_key(10, 3)] = w.take();
    std::string txt = format_assignment(a);
    Assignment b = parse_assignment_text(txt);
    CHECK(a.node == b.node);
    CHECK(a.edge == b.edge);
    CHECK(max_node_cert_bits(a) == a.node[3].bits);

    CHECK_THROWS_AS(parse_assignment_text("N 1 8 zz\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_assignment_text("Q 1 8 ff\n"), std::runtime_error);
}

TEST_CASE("scheme plumbing") {
    Graph g = named_graph("p3");

    Scheme parity;
    parity.name = "even-degree";
    parity.prover = [](const Graph& gr) -> std::optional<Assignment> {
        Assignment a;
        for (NodeId id : gr.ids()) {
            CertWriter w;
            w.u8(1);
            a.node[id] = w.take();
        }
        return a;
    };
    parity.verifier = [](const LocalView& v) {
        CertReader r(*v.cert);
        (void)r.u8();
        r.expect_end();
        return v.neighbors.size() % 2 == 0 || !v.neighbors.empty();
    };

    auto res = certify(g, parity);
    CHECK(res.produced);
    CHECK(res.accepted);

    // verifier sees sorted neighbors with non-null edge certs
    auto prep = prepare_instance(g, res.assignment);
    REQUIRE(prep.views.size() == (std::size_t)g.n());
    for (int v = 0; v < g.n(); ++v) {
        CHECK(prep.views[v].id == g.id_of(v));
        REQUIRE(prep.views[v].neighbors.size() == (std::size_t)g.degree(v));
        for (std::size_t i = 0; i + 1 < prep.views[v].neighbors.size(); ++i)
            CHECK(prep.views[v].neighbors[i].id < prep.views[v].neighbors[i + 1].id);
        for (const auto& nb : prep.views[v].neighbors) {
            CHECK(nb.cert != nullptr);
            CHECK(nb.edge_cert != nullptr);
        }
    }

    // malformed certificate reads as a rejection
    Assignment bad = res.assignment;
    bad.node[g.id_of(0)] = {};
    auto rep = run_verifier_report(g, parity, bad);
    CHECK(!rep.accepted);
    REQUIRE(rep.rejecting.size() >= 1);
    CHECK(rep.rejecting[0] == g.id_of(0));
    CHECK(!run_verifier(g, parity, bad));

    // in-place mutation through prepared views
    Assignment mut = res.assignment;
    auto prep2 = prepare_instance(g, mut);
    const Certificate* before = prep2.views[0].cert;
    prep2.assignment.node[g.id_of(0)].bytes[0] = 9;
    CHECK(prep2.views[0].cert == before);
    CHECK(prep2.views[0].cert->bytes[0] == 9);

    // prover talking about unknown nodes is a coverage error
    Scheme rogue = parity;
    rogue.prover = [](const Graph&) -> std::optional<Assignment> {
        Assignment a;
        a.node[999] = {};
        return a;
    };
    CHECK_THROWS_AS(certify(g, rogue), coverage_error);
}
