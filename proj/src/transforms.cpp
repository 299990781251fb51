#include "lc/transforms.hpp"

#include "lc/connectivity_core.hpp"
#include "lc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lc {

namespace {

const Certificate kEmptyCert{};

const Certificate& cert_or_empty(const std::map<NodeId, Certificate>& m, NodeId id) {
    auto it = m.find(id);
    return it == m.end() ? kEmptyCert : it->second;
}

const Certificate& cert_or_empty(const std::map<EdgeKey, Certificate>& m, const EdgeKey& k) {
    auto it = m.find(k);
    return it == m.end() ? kEmptyCert : it->second;
}

} // namespace

Scheme node_to_edge(const Scheme& s) {
    Scheme out;
    out.name = s.name + ":node-to-edge";
    out.uses_edge_certs = true;
    out.size_tag = s.size_tag;
    out.size_bits = s.size_bits;
    const bool inner_edges = s.uses_edge_certs;
    out.prover = [s, inner_edges](const Graph& g) -> std::optional<Assignment> {
        auto a = s.prover(g);
        if (!a) return std::nullopt;
        Assignment wrapped;
        wrapped.node = a->node;
        for (auto [u, v] : g.edge_ids()) {
            auto key = edge_key(u, v);
            CertWriter w;
            w.cert(cert_or_empty(a->node, key.first));
            w.cert(cert_or_empty(a->node, key.second));
            if (inner_edges) w.cert(cert_or_empty(a->edge, key));
            wrapped.edge[key] = w.take();
        }
        return wrapped;
    };
    out.verifier = [s, inner_edges](const LocalView& v) {
        std::vector<Certificate> orig_edge(v.neighbors.size());
        for (std::size_t i = 0; i < v.neighbors.size(); ++i) {
            const auto& nb = v.neighbors[i];
            CertReader r(*nb.edge_cert);
            Certificate low = r.cert();
            Certificate high = r.cert();
            if (inner_edges) orig_edge[i] = r.cert();
            r.expect_end();
            auto key = edge_key(v.id, nb.id);
            const Certificate& mine = key.first == v.id ? low : high;
            const Certificate& theirs = key.first == v.id ? high : low;
            if (mine != *v.cert || theirs != *nb.cert) return false;
        }
        LocalView synth;
        synth.id = v.id;
        synth.cert = v.cert;
        synth.neighbors.reserve(v.neighbors.size());
        for (std::size_t i = 0; i < v.neighbors.size(); ++i) {
            NeighborView nv;
            nv.id = v.neighbors[i].id;
            nv.cert = v.neighbors[i].cert;
            nv.edge_cert = &orig_edge[i];
            synth.neighbors.push_back(nv);
        }
        return s.verifier(synth);
    };
    return out;
}

namespace {

constexpr std::uint64_t kRecordCap = 4096;

struct FoldedCert {
    Certificate orig;
    std::vector<std::pair<EdgeKey, Certificate>> records;
};

FoldedCert read_folded(const Certificate& c) {
    CertReader r(c);
    FoldedCert f;
    f.orig = r.cert();
    std::uint64_t k = r.u64();
    if (k > kRecordCap) throw cert_parse_error();
    f.records.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t u = r.u64();
        std::uint64_t v = r.u64();
        if (u >= v) throw cert_parse_error(); // keys are normalized, u < v
        f.records.push_back({{u, v}, r.cert()});
    }
    r.expect_end();
    return f;
}

// candidates for one edge from one node's records
void collect(const FoldedCert& f, const EdgeKey& key, std::vector<const Certificate*>& out) {
    for (const auto& [k, c] : f.records)
        if (k == key) out.push_back(&c);
}

} // namespace

Scheme edge_to_node(const Scheme& s, int d) {
    Scheme out;
    out.name = s.name + ":edge-to-node";
    out.uses_edge_certs = false;
    out.size_tag = s.size_tag;
    out.prover = [s, d](const Graph& g) -> std::optional<Assignment> {
        auto a = s.prover(g);
        if (!a) return std::nullopt;
        // subgraph of edges that actually carry something
        std::vector<std::pair<NodeId, NodeId>> carried;
        for (auto [u, v] : g.edge_ids()) {
            auto it = a->edge.find(edge_key(u, v));
            if (it != a->edge.end() && !it->second.empty()) carried.push_back({u, v});
        }
        Graph h(g.ids(), carried);
        if (degeneracy(h) > d)
            throw std::invalid_argument("edge certificates need degeneracy " +
                                        std::to_string(degeneracy(h)) + ", scheme claims " +
                                        std::to_string(d));
        auto order = degeneracy_order(h);
        std::vector<int> pos(h.n());
        for (int i = 0; i < h.n(); ++i) pos[order[i]] = i;
        std::vector<std::vector<std::pair<EdgeKey, const Certificate*>>> records(g.n());
        for (auto [u, v] : carried) {
            auto key = edge_key(u, v);
            int ui = *h.index_of(u), vi = *h.index_of(v);
            int keeper = pos[ui] < pos[vi] ? ui : vi;
            records[*g.index_of(h.id_of(keeper))].push_back(
                {key, &a->edge.at(key)});
        }
        Assignment folded;
        for (int i = 0; i < g.n(); ++i) {
            std::sort(records[i].begin(), records[i].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            CertWriter w;
            w.cert(cert_or_empty(a->node, g.id_of(i)));
            w.u64(records[i].size());
            for (const auto& [key, cp] : records[i]) {
                w.u64(key.first);
                w.u64(key.second);
                w.cert(*cp);
            }
            folded.node[g.id_of(i)] = w.take();
        }
        return folded;
    };
    out.verifier = [s](const LocalView& v) {
        FoldedCert own = read_folded(*v.cert);
        std::vector<FoldedCert> nb_certs;
        nb_certs.reserve(v.neighbors.size());
        for (const auto& nb : v.neighbors) nb_certs.push_back(read_folded(*nb.cert));
        // rebuild the view the original verifier expects
        std::vector<Certificate> edge_certs(v.neighbors.size());
        for (std::size_t i = 0; i < v.neighbors.size(); ++i) {
            auto key = edge_key(v.id, v.neighbors[i].id);
            std::vector<const Certificate*> cand;
            collect(own, key, cand);
            collect(nb_certs[i], key, cand);
            for (std::size_t j = 1; j < cand.size(); ++j)
                if (!(*cand[j] == *cand[0])) return false; // conflicting claims
            if (!cand.empty()) edge_certs[i] = *cand[0];
        }
        LocalView synth;
        synth.id = v.id;
        synth.cert = &own.orig;
        synth.neighbors.reserve(v.neighbors.size());
        for (std::size_t i = 0; i < v.neighbors.size(); ++i) {
            NeighborView nv;
            nv.id = v.neighbors[i].id;
            nv.cert = &nb_certs[i].orig;
            nv.edge_cert = &edge_certs[i];
            synth.neighbors.push_back(nv);
        }
        return s.verifier(synth);
    };
    return out;
}

} // namespace lc
