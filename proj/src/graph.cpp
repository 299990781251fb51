#include "lc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lc {

namespace {

std::uint64_t pack_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

} // namespace

Graph::Graph(std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("duplicate node id");
    ids_ = std::move(nodes);
    adj_.assign(ids_.size(), {});

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        auto iu = index_of(u), iv = index_of(v);
        if (!iu || !iv) throw std::invalid_argument("edge on unknown node id");
        auto key = pack_edge(*iu, *iv);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        adj_[*iu].push_back(*iv);
        adj_[*iv].push_back(*iu);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    m_ = static_cast<int>(edges.size());
}

std::optional<int> Graph::index_of(NodeId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - ids_.begin());
}

bool Graph::has_edge(int a, int b) const {
    const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    int t = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(na.begin(), na.end(), t);
}

bool Graph::has_edge_ids(NodeId a, NodeId b) const {
    auto ia = index_of(a), ib = index_of(b);
    if (!ia || !ib) return false;
    return has_edge(*ia, *ib);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int a = 0; a < n(); ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_ids() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(m_);
    for (auto [a, b] : edges()) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

bool Graph::connected() const {
    if (n() == 0) return true;
    std::vector<char> alive(n(), 1);
    return static_cast<int>(component_of(*this, 0, alive).size()) == n();
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<char> in(n(), 0);
    for (int i : keep) in[i] = 1;
    std::vector<NodeId> nodes;
    nodes.reserve(keep.size());
    for (int i : keep) nodes.push_back(ids_[i]);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (int a = 0; a < n(); ++a) {
        if (!in[a]) continue;
        for (int b : adj_[a])
            if (a < b && in[b]) es.emplace_back(ids_[a], ids_[b]);
    }
    return Graph(std::move(nodes), es);
}

Graph Graph::relabeled(const std::vector<NodeId>& new_ids) const {
    if (static_cast<int>(new_ids.size()) != n())
        throw std::invalid_argument("relabel size mismatch");
    std::vector<std::pair<NodeId, NodeId>> es;
    es.reserve(m_);
    for (auto [a, b] : edges()) es.emplace_back(new_ids[a], new_ids[b]);
    return Graph(new_ids, es);
}

// ---------------- text format ----------------

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> explicit_nodes;

    auto fail = [](const std::string& why) -> void {
        throw std::runtime_error("graph parse: " + why);
    };

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        if (n < 0) {
            try {
                n = std::stoll(first);
            } catch (...) {
                fail("bad header");
            }
            if (!(ls >> m)) fail("bad header");
            if (n < 0 || m < 0) fail("negative header");
            std::string extra;
            if (ls >> extra) fail("trailing header tokens");
            continue;
        }
        if (first == "v") {
            NodeId id;
            if (!(ls >> id)) fail("bad node line");
            explicit_nodes.push_back(id);
            continue;
        }
        NodeId u, v;
        try {
            size_t pos = 0;
            u = std::stoull(first, &pos);
            if (pos != first.size()) fail("bad edge endpoint");
        } catch (...) {
            fail("bad edge endpoint");
        }
        if (!(ls >> v)) fail("bad edge line");
        std::string extra;
        if (ls >> extra) fail("trailing edge tokens");
        edges.emplace_back(u, v);
    }
    if (n < 0) fail("missing header");
    if (static_cast<long long>(edges.size()) != m) fail("edge count mismatch");

    std::vector<NodeId> nodes = explicit_nodes;
    for (auto [u, v] : edges) {
        nodes.push_back(u);
        nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (static_cast<long long>(nodes.size()) > n) fail("more ids than declared nodes");
    // pad with the smallest unused ids so isolated nodes exist
    NodeId next = 0;
    while (static_cast<long long>(nodes.size()) < n) {
        while (std::binary_search(nodes.begin(), nodes.end(), next)) ++next;
        nodes.insert(std::lower_bound(nodes.begin(), nodes.end(), next), next);
        ++next;
    }
    try {
        return Graph(std::move(nodes), edges);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return {}; // unreachable
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    auto es = g.edge_ids();
    std::unordered_set<NodeId> touched;
    for (auto [u, v] : es) {
        touched.insert(u);
        touched.insert(v);
    }
    for (NodeId id : g.ids())
        if (!touched.count(id)) out << "v " << id << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

// ---------------- helpers ----------------

std::vector<int> component_of(const Graph& g, int start, const std::vector<char>& alive) {
    std::vector<int> out;
    if (!alive[start]) return out;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        out.push_back(v);
        for (int w : g.neighbors(v))
            if (alive[w] && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int component_count(const Graph& g, const std::vector<char>& alive) {
    std::vector<char> seen(g.n(), 0);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (!alive[s] || seen[s]) continue;
        ++c;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return c;
}

std::vector<int> bfs_distances(const Graph& g, int start) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

Graph make_graph(std::initializer_list<NodeId> nodes,
                 std::initializer_list<std::pair<NodeId, NodeId>> edges) {
    return Graph(std::vector<NodeId>(nodes), std::vector<std::pair<NodeId, NodeId>>(edges));
}

} // namespace lc
