#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lc/building_blocks.hpp"
#include "lc/combinators.hpp"
#include "lc/connectivity_core.hpp"
#include "lc/enumerate.hpp"
#include "lc/fuzz.hpp"
#include "lc/minor.hpp"
#include "lc/minor_free.hpp"

#include <stdexcept>

using namespace lc;

namespace {

FuzzBudget quick_budget() {
    FuzzBudget b;
    b.random_assignments = 300;
    b.structured_cap = 1'500;
    b.exhaustive_max_total = 2'048;
    return b;
}

// the scheme must accept exactly the census graphs without an h minor;
// no-instances also get a soundness fuzz (every fuzz_every-th one)
void census_matches_oracle(const Scheme& s, const Graph& h, int n_max, int fuzz_every = 1) {
    int noes = 0;
    for (const auto& g : connected_graphs_up_to(n_max)) {
        bool yes = !contains_minor(g, h);
        auto res = certify(g, s);
        REQUIRE(res.produced == yes);
        if (yes) {
            REQUIRE(res.accepted);
        } else if (noes++ % fuzz_every == 0) {
            auto rep = fuzz_soundness(s, g, quick_budget());
            REQUIRE(!rep.input_was_yes);
            REQUIRE(rep.sound());
        }
    }
}

} // namespace

TEST_CASE("union scheme: first accepting branch wins, tags must be uniform") {
    Scheme u = scheme_union({scheme_path(), scheme_cycle()});
    Graph p4 = named_graph("p4");
    Graph c4 = named_graph("c4");
    Graph claw = named_graph("claw");

    auto rp = certify(p4, u);
    REQUIRE(rp.accepted);
    for (auto& [id, c] : rp.assignment.node) REQUIRE(c.bytes.at(0) == 0);
    auto rc = certify(c4, u);
    REQUIRE(rc.accepted);
    for (auto& [id, c] : rc.assignment.node) REQUIRE(c.bytes.at(0) == 1);
    REQUIRE(!certify(claw, u).produced);

    // flipping one node's tag must break acceptance even though both
    // branches' verifiers would be happy with an all-empty remainder on c4
    Assignment mixed = rc.assignment;
    mixed.node[0].bytes[0] = 0;
    CHECK(!run_verifier(c4, u, mixed));

    auto rep = fuzz_soundness(u, claw, quick_budget());
    CHECK(!rep.input_was_yes);
    CHECK(rep.sound());
}

TEST_CASE("dispatch: catalog hits, aliases, and refusals") {
    CHECK(scheme_minor_free(named_graph("k3")).name == "minor-free(k3)");
    CHECK(scheme_minor_free(named_graph("c3")).name == "minor-free(k3)");
    CHECK(scheme_minor_free(named_graph("p2")).name == "minor-free(k2)");
    CHECK(scheme_C4_free().name == "minor-free(c4)");
    CHECK(scheme_C5_free().name == "minor-free(c5)");
    CHECK(scheme_house_free().name == "minor-free(house)");
    CHECK(scheme_K23_free().name == "minor-free(k23)");
    CHECK(scheme_outerplanar().name == "outerplanar");
    CHECK_THROWS_AS(scheme_minor_free(named_graph("bull")), std::invalid_argument);
    CHECK_THROWS_AS(scheme_minor_free(named_graph("gem")), std::invalid_argument);
    CHECK_THROWS_AS(scheme_minor_free(named_graph("k5")), std::invalid_argument);
}

TEST_CASE("k3-free is exactly acyclic") {
    census_matches_oracle(scheme_minor_free(named_graph("k3")), named_graph("k3"), 6);
}

TEST_CASE("claw-free minors: paths and cycles") {
    census_matches_oracle(scheme_minor_free(named_graph("claw")), named_graph("claw"), 6);
}

TEST_CASE("p4-free: stars plus the triangle") {
    Scheme s = scheme_minor_free(named_graph("p4"));
    // the triangle is p4-minor-free but no star; it must not be forgotten
    CHECK(certify(named_graph("k3"), s).accepted);
    CHECK(certify(named_graph("claw"), s).accepted);
    CHECK(!certify(named_graph("p4"), s).produced);
    census_matches_oracle(s, named_graph("p4"), 6);
}

TEST_CASE("paw-free and k3+k1-free: trees and cycles") {
    census_matches_oracle(scheme_minor_free(named_graph("paw")), named_graph("paw"), 6);
    census_matches_oracle(scheme_minor_free(named_graph("k3+k1")), named_graph("k3+k1"), 6);
}

TEST_CASE("c4-free: blocks are edges and triangles") {
    census_matches_oracle(scheme_C4_free(), named_graph("c4"), 6);
}

TEST_CASE("diamond-free: blocks are edges and cycles") {
    census_matches_oracle(scheme_diamond_free(), named_graph("diamond"), 6);
}

TEST_CASE("bounded patterns collapse to universal schemes on tiny graphs") {
    for (const char* name : {"k1", "k2", "p3", "2k1", "3k1", "4k1", "k2+k1", "k2+2k1", "p3+k1"}) {
        Graph h = named_graph(name);
        Scheme s = scheme_minor_free(h);
        CHECK(s.size_tag == "O(1)");
        census_matches_oracle(s, h, 5);
    }
}

TEST_CASE("pinned-endpoint spine proofs and the anchor test") {
    Scheme po = scheme_path_outerplanar();
    Graph c4 = named_graph("c4");

    // a Hamiltonian path of a 4-cycle always ends on an edge's two endpoints
    auto adj = prove_path_outerplanar_between(c4, 0, 1);
    REQUIRE(adj.has_value());
    CHECK(run_verifier(c4, po, *adj));
    auto pi = prepare_instance(c4, *adj);
    CHECK(path_outerplanar_anchor(pi.views[0], true, false));
    CHECK(path_outerplanar_anchor(pi.views[1], false, true));
    CHECK(path_outerplanar_anchor(pi.views[2], false, false));
    CHECK(path_outerplanar_anchor(pi.views[3], false, false));
    CHECK(!path_outerplanar_anchor(pi.views[0], false, false));
    CHECK(!path_outerplanar_anchor(pi.views[1], true, true));

    CHECK(!prove_path_outerplanar_between(c4, 0, 2).has_value());
    CHECK(!prove_path_outerplanar_between(c4, 1, 1).has_value());
    CHECK(!prove_path_outerplanar_between(c4, 0, 9).has_value());

    Graph p4 = named_graph("p4");
    CHECK(prove_path_outerplanar_between(p4, 0, 3).has_value());
    CHECK(prove_path_outerplanar_between(p4, 3, 0).has_value());
    // interior nodes are cut vertices, never path endpoints
    CHECK(!prove_path_outerplanar_between(p4, 0, 1).has_value());
    CHECK(!prove_path_outerplanar_between(p4, 1, 3).has_value());
}

namespace {

Graph fan(int k) {
    std::vector<NodeId> ids = {0};
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 1; i <= k; ++i) {
        ids.push_back(i);
        es.push_back({0, (NodeId)i});
        if (i > 1) es.push_back({(NodeId)(i - 1), (NodeId)i});
    }
    return Graph(ids, es);
}

Graph book(int p, bool hub_edge) {
    std::vector<NodeId> ids = {0, 1};
    std::vector<std::pair<NodeId, NodeId>> es;
    if (hub_edge) es.push_back({0, 1});
    for (int i = 0; i < p; ++i) {
        ids.push_back(2 + i);
        es.push_back({0, (NodeId)(2 + i)});
        es.push_back({1, (NodeId)(2 + i)});
    }
    return Graph(ids, es);
}

} // namespace

TEST_CASE("2-connected outerplanar scheme") {
    Scheme s = scheme_outerplanar_2conn();
    for (int k = 2; k <= 6; ++k) CHECK(certify(fan(k), s).accepted);
    CHECK(certify(named_graph("c5"), s).accepted);
    CHECK(certify(named_graph("diamond"), s).accepted);
    CHECK(certify(named_graph("house"), s).accepted);
    CHECK(!certify(named_graph("k4"), s).produced);
    CHECK(!certify(named_graph("k23"), s).produced);
    CHECK(!certify(named_graph("p4"), s).produced);
    CHECK(!certify(named_graph("k2"), s).produced);
    for (const char* nm : {"k4", "k23"}) {
        auto rep = fuzz_soundness(s, named_graph(nm), quick_budget());
        CHECK(!rep.input_was_yes);
        CHECK(rep.sound());
    }
    // exactly the 2-connected graphs free of both outerplanarity obstructions
    Graph k4 = named_graph("k4"), k23 = named_graph("k23");
    for (const auto& g : connected_graphs_up_to(6)) {
        bool yes = g.n() >= 3 && is_k_connected(g, 2) && !contains_minor(g, k4) &&
                   !contains_minor(g, k23);
        auto res = certify(g, s);
        REQUIRE(res.produced == yes);
        if (yes) REQUIRE(res.accepted);
    }
}

TEST_CASE("c5-free: tiny blocks and two-hub books") {
    Scheme s = scheme_C5_free();
    CHECK(certify(book(9, false), s).accepted);
    CHECK(certify(book(9, true), s).accepted);
    CHECK(!certify(named_graph("c5"), s).produced);
    CHECK(!certify(named_graph("c6"), s).produced);
    census_matches_oracle(s, named_graph("c5"), 6, 3);
}

TEST_CASE("house-free: chordless long cycles join the c5-free blocks") {
    Scheme s = scheme_house_free();
    CHECK(certify(named_graph("c6"), s).accepted);
    CHECK(certify(book(4, true), s).accepted);
    CHECK(!certify(named_graph("house"), s).produced);
    census_matches_oracle(s, named_graph("house"), 6, 3);
}

TEST_CASE("k23-free: outerplanar or k4 blocks") {
    Scheme s = scheme_K23_free();
    CHECK(certify(named_graph("k4"), s).accepted);
    CHECK(certify(fan(5), s).accepted);
    CHECK(!certify(named_graph("k23"), s).produced);
    // the wheel on five nodes keeps k23: opposite rim pair as hubs
    Graph w4({0, 1, 2, 3, 4},
             {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(!certify(w4, s).produced);
    census_matches_oracle(s, named_graph("k23"), 6, 3);
}

TEST_CASE("outerplanar census") {
    Scheme s = scheme_outerplanar();
    Graph k4 = named_graph("k4"), k23 = named_graph("k23");
    int noes = 0;
    for (const auto& g : connected_graphs_up_to(6)) {
        bool yes = !contains_minor(g, k4) && !contains_minor(g, k23);
        auto res = certify(g, s);
        REQUIRE(res.produced == yes);
        if (yes) {
            REQUIRE(res.accepted);
        } else if (noes++ % 3 == 0) {
            auto rep = fuzz_soundness(s, g, quick_budget());
            REQUIRE(rep.sound());
        }
    }
}
