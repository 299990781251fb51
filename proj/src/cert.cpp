#include "lc/cert.hpp"

#include <algorithm>
#include <sstream>

namespace lc {

namespace {
const Certificate kEmpty{};
} // namespace

const NeighborView* LocalView::find(NodeId nid) const {
    // linear on purpose: verdicts must not depend on neighbor order
    for (const auto& nv : neighbors)
        if (nv.id == nid) return &nv;
    return nullptr;
}

int ceil_log2(long long n) {
    int b = 1;
    while ((1LL << b) < n) ++b;
    return b;
}

bool eval_verifier(const Scheme& s, const LocalView& v) {
    try {
        return s.verifier(v);
    } catch (const cert_parse_error&) {
        return false;
    }
}

namespace {

LocalView view_of(const Graph& g, const Assignment& a, int idx) {
    LocalView v;
    v.id = g.id_of(idx);
    auto it = a.node.find(v.id);
    v.cert = it == a.node.end() ? &kEmpty : &it->second;
    v.neighbors.reserve(g.degree(idx));
    for (int w : g.neighbors(idx)) {
        NeighborView nv;
        nv.id = g.id_of(w);
        auto nit = a.node.find(nv.id);
        nv.cert = nit == a.node.end() ? &kEmpty : &nit->second;
        auto eit = a.edge.find(edge_key(v.id, nv.id));
        nv.edge_cert = eit == a.edge.end() ? &kEmpty : &eit->second;
        v.neighbors.push_back(nv);
    }
    // neighbors(idx) is sorted by index; ids are sorted the same way
    return v;
}

} // namespace

bool run_verifier(const Graph& g, const Scheme& s, const Assignment& a) {
    for (int i = 0; i < g.n(); ++i)
        if (!eval_verifier(s, view_of(g, a, i))) return false;
    return true;
}

VerdictReport run_verifier_report(const Graph& g, const Scheme& s, const Assignment& a) {
    for (const auto& [id, c] : a.node)
        if (!g.index_of(id)) throw coverage_error("assignment labels unknown node");
    for (const auto& [key, c] : a.edge)
        if (!g.has_edge_ids(key.first, key.second))
            throw coverage_error("assignment labels unknown edge");
    VerdictReport r;
    for (int i = 0; i < g.n(); ++i)
        if (!eval_verifier(s, view_of(g, a, i))) {
            r.accepted = false;
            r.rejecting.push_back(g.id_of(i));
        }
    return r;
}

CertifyResult certify(const Graph& g, const Scheme& s) {
    CertifyResult res;
    auto a = s.prover(g);
    if (!a) return res;
    for (const auto& [id, c] : a->node)
        if (!g.index_of(id)) throw coverage_error("prover labeled unknown node");
    for (const auto& [key, c] : a->edge)
        if (!g.has_edge_ids(key.first, key.second))
            throw coverage_error("prover labeled unknown edge");
    res.produced = true;
    res.assignment = std::move(*a);
    res.accepted = run_verifier(g, s, res.assignment);
    return res;
}

PreparedInstance prepare_instance(const Graph& g, const Assignment& a) {
    // keys outside the graph are a harness bug, not a rejection
    for (const auto& [id, c] : a.node)
        if (!g.index_of(id)) throw coverage_error("assignment labels unknown node");
    for (const auto& [key, c] : a.edge)
        if (!g.has_edge_ids(key.first, key.second))
            throw coverage_error("assignment labels unknown edge");
    PreparedInstance p;
    for (NodeId id : g.ids()) {
        auto it = a.node.find(id);
        p.assignment.node[id] = it == a.node.end() ? Certificate{} : it->second;
    }
    for (auto [u, v] : g.edge_ids()) {
        auto key = edge_key(u, v);
        auto it = a.edge.find(key);
        p.assignment.edge[key] = it == a.edge.end() ? Certificate{} : it->second;
    }
    p.views.reserve(g.n());
    for (int i = 0; i < g.n(); ++i) {
        LocalView v;
        v.id = g.id_of(i);
        v.cert = &p.assignment.node.at(v.id);
        v.neighbors.reserve(g.degree(i));
        for (int w : g.neighbors(i)) {
            NeighborView nv;
            nv.id = g.id_of(w);
            nv.cert = &p.assignment.node.at(nv.id);
            nv.edge_cert = &p.assignment.edge.at(edge_key(v.id, nv.id));
            v.neighbors.push_back(nv);
        }
        p.views.push_back(std::move(v));
    }
    return p;
}

std::size_t max_node_cert_bits(const Assignment& a) {
    std::size_t best = 0;
    for (const auto& [id, c] : a.node) best = std::max(best, c.bits);
    return best;
}

namespace {

std::string hex_of(const Certificate& c) {
    if (c.bytes.empty()) return "-";
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(c.bytes.size() * 2);
    for (std::uint8_t b : c.bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Certificate cert_from(const std::string& bits_s, const std::string& hex) {
    Certificate c;
    c.bits = std::stoull(bits_s);
    if (hex != "-") {
        if (hex.size() % 2) throw std::runtime_error("odd hex payload");
        for (size_t i = 0; i < hex.size(); i += 2) {
            auto nib = [&](char ch) -> int {
                if (ch >= '0' && ch <= '9') return ch - '0';
                if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
                throw std::runtime_error("bad hex digit");
            };
            c.bytes.push_back(static_cast<std::uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
        }
    }
    if (c.bytes.size() != (c.bits + 7) / 8) throw std::runtime_error("bit length mismatch");
    return c;
}

} // namespace

std::string format_assignment(const Assignment& a) {
    std::ostringstream out;
    for (const auto& [id, c] : a.node)
        out << "N " << id << ' ' << c.bits << ' ' << hex_of(c) << '\n';
    for (const auto& [key, c] : a.edge)
        out << "E " << key.first << ' ' << key.second << ' ' << c.bits << ' ' << hex_of(c)
            << '\n';
    return out.str();
}

Assignment parse_assignment_text(const std::string& text) {
    Assignment a;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "N") {
            NodeId id;
            std::string bits, hex;
            if (!(ls >> id >> bits >> hex)) throw std::runtime_error("bad N line");
            a.node[id] = cert_from(bits, hex);
        } else if (tag == "E") {
            NodeId u, v;
            std::string bits, hex;
            if (!(ls >> u >> v >> bits >> hex)) throw std::runtime_error("bad E line");
            a.edge[edge_key(u, v)] = cert_from(bits, hex);
        } else {
            throw std::runtime_error("unknown assignment line: " + tag);
        }
    }
    return a;
}

} // namespace lc
