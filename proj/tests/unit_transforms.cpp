#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lc/building_blocks.hpp"
#include "lc/enumerate.hpp"
#include "lc/fuzz.hpp"
#include "lc/graph.hpp"
#include "lc/transforms.hpp"

#include <stdexcept>

using namespace lc;

namespace {

Graph path_graph(int n) {
    std::vector<NodeId> ids;
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int i = 0; i < n; ++i) {
        ids.push_back(i);
        if (i) es.push_back({(NodeId)(i - 1), (NodeId)i});
    }
    return Graph(ids, es);
}

// toy scheme that lives entirely on edges: every edge carries the value 1
Scheme edge_ones() {
    Scheme s;
    s.name = "edge-ones";
    s.uses_edge_certs = true;
    s.prover = [](const Graph& g) -> std::optional<Assignment> {
        if (!g.connected()) return std::nullopt;
        Assignment a;
        for (NodeId id : g.ids()) a.node[id] = {};
        for (auto [u, v] : g.edge_ids()) {
            CertWriter w;
            w.u64(1);
            a.edge[edge_key(u, v)] = w.take();
        }
        return a;
    };
    s.verifier = [](const LocalView& v) {
        for (const auto& nb : v.neighbors) {
            CertReader r(*nb.edge_cert);
            if (r.u64() != 1) return false;
            r.expect_end();
        }
        return true;
    };
    return s;
}

} // namespace

TEST_CASE("node_to_edge keeps verdicts and cross-checks the copies") {
    Scheme s = node_to_edge(scheme_spanning_tree());
    REQUIRE(s.uses_edge_certs);
    Graph g = named_graph("diamond");
    auto res = certify(g, s);
    REQUIRE(res.accepted);

    // tampering with any edge copy must be caught
    int rejected = 0;
    for (auto [u, v] : g.edge_ids()) {
        Assignment bad = res.assignment;
        bad.edge[edge_key(u, v)].bytes.back() ^= 1;
        if (!run_verifier(g, s, bad)) ++rejected;
    }
    CHECK(rejected == (int)g.edges().size());
}

TEST_CASE("node_to_edge wraps original edge certificates when present") {
    Scheme base = edge_ones();
    Scheme s = node_to_edge(base);
    Graph g = named_graph("c4");
    auto res = certify(g, s);
    REQUIRE(res.accepted);

    // flipping the wrapped original edge value must break the inner verifier
    Assignment bad = res.assignment;
    auto key = edge_key(0, 1);
    // rebuild the wrap with the inner value 0 instead of 1
    {
        CertReader r(bad.edge.at(key));
        Certificate low = r.cert();
        Certificate high = r.cert();
        r.cert();
        r.expect_end();
        CertWriter w;
        w.cert(low);
        w.cert(high);
        CertWriter inner;
        inner.u64(0);
        w.cert(inner.take());
        bad.edge[key] = w.take();
    }
    CHECK(!run_verifier(g, s, bad));
}

TEST_CASE("edge_to_node of node_to_edge preserves verdicts across the census") {
    for (const Scheme& base : {scheme_acyclicity(), scheme_star()}) {
        Scheme folded = edge_to_node(node_to_edge(base), 6);
        REQUIRE(!folded.uses_edge_certs);
        for (const auto& g : connected_graphs_up_to(5)) {
            auto direct = certify(g, base);
            CertifyResult via;
            via = certify(g, folded);
            CHECK(direct.produced == via.produced);
            CHECK(direct.accepted == via.accepted);
        }
    }
}

TEST_CASE("edge_to_node rejects conflicting records for one edge") {
    Scheme s = edge_to_node(node_to_edge(scheme_cycle()), 2);
    Graph g = named_graph("c5");
    auto res = certify(g, s);
    REQUIRE(res.accepted);

    // make node 1 claim edge (0,1) too, with a different value than the
    // record the keeper holds
    Assignment bad = res.assignment;
    {
        CertReader r(bad.node.at(1));
        Certificate orig = r.cert();
        std::uint64_t k = r.u64();
        std::vector<std::pair<EdgeKey, Certificate>> recs;
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t a = r.u64(), b = r.u64();
            recs.push_back({{a, b}, r.cert()});
        }
        r.expect_end();
        CertWriter fake;
        fake.u64(77);
        recs.push_back({edge_key(0, 1), fake.take()});
        CertWriter w;
        w.cert(orig);
        w.u64(recs.size());
        for (const auto& [key, c] : recs) {
            w.u64(key.first);
            w.u64(key.second);
            w.cert(c);
        }
        bad.node[1] = w.take();
    }
    CHECK(!run_verifier(g, s, bad));
}

TEST_CASE("edge_to_node refuses subgraphs denser than the declared degeneracy") {
    Scheme s = edge_to_node(node_to_edge(scheme_spanning_tree()), 1);
    Graph g = named_graph("k5");
    CHECK_THROWS_AS(certify(g, s), std::invalid_argument);
    // d = 4 is enough for K5
    Scheme ok = edge_to_node(node_to_edge(scheme_spanning_tree()), 4);
    CHECK(certify(g, ok).accepted);
}

TEST_CASE("transforms survive fuzzing on no-instances") {
    FuzzBudget b;
    b.random_assignments = 400;
    b.structured_cap = 2'000;
    b.exhaustive_max_total = 4'096;
    Scheme folded = edge_to_node(node_to_edge(scheme_path()), 2);
    for (const Graph& g : {named_graph("c4"), named_graph("claw"), named_graph("k4")}) {
        auto rep = fuzz_soundness(folded, g, b);
        CHECK(!rep.input_was_yes);
        CHECK(rep.sound());
    }
    Graph p = path_graph(6);
    CHECK(certify(p, folded).accepted);
}
