#pragma once

#include "lc/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lc {

// A certificate is a bit string handed to one node (or one edge). Verifiers
// parse them with CertReader; any malformed certificate must read as a
// rejection, never as undefined behavior, so the reader throws
// cert_parse_error and the evaluation wrappers below turn that into "false".
struct Certificate {
    std::vector<std::uint8_t> bytes;
    std::size_t bits = 0;

    bool empty() const { return bits == 0; }
    bool operator==(const Certificate&) const = default;
};

struct cert_parse_error : std::runtime_error {
    cert_parse_error() : std::runtime_error("malformed certificate") {}
};

// Thrown when a prover hands back an assignment that talks about nodes or
// edges the graph does not have.
struct coverage_error : std::logic_error {
    using std::logic_error::logic_error;
};

class CertWriter {
public:
    void u64(std::uint64_t v) {
        while (v >= 0x80) {
            buf_.push_back(static_cast<std::uint8_t>(v) | 0x80);
            v >>= 7;
        }
        buf_.push_back(static_cast<std::uint8_t>(v));
    }
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void raw(const std::vector<std::uint8_t>& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void cert(const Certificate& c) {
        u64(c.bits);
        raw(c.bytes);
    }
    Certificate take() {
        Certificate c;
        c.bits = 8 * buf_.size();
        c.bytes = std::move(buf_);
        buf_.clear();
        return c;
    }

private:
    std::vector<std::uint8_t> buf_;
};

class CertReader {
public:
    explicit CertReader(const Certificate& c) : c_(c) {}

    std::uint64_t u64() {
        std::uint64_t v = 0;
        int shift = 0;
        while (true) {
            if (pos_ >= c_.bytes.size() || shift > 63) throw cert_parse_error();
            std::uint8_t b = c_.bytes[pos_++];
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) return v;
            shift += 7;
        }
    }
    std::uint8_t u8() {
        if (pos_ >= c_.bytes.size()) throw cert_parse_error();
        return c_.bytes[pos_++];
    }
    Certificate cert() {
        Certificate out;
        out.bits = u64();
        std::size_t nbytes = (out.bits + 7) / 8;
        if (pos_ + nbytes > c_.bytes.size()) throw cert_parse_error();
        out.bytes.assign(c_.bytes.begin() + pos_, c_.bytes.begin() + pos_ + nbytes);
        pos_ += nbytes;
        return out;
    }
    bool at_end() const { return pos_ == c_.bytes.size(); }
    void expect_end() const {
        if (!at_end()) throw cert_parse_error();
    }

private:
    const Certificate& c_;
    std::size_t pos_ = 0;
};

using EdgeKey = std::pair<NodeId, NodeId>;
inline EdgeKey edge_key(NodeId a, NodeId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

struct Assignment {
    std::map<NodeId, Certificate> node;
    std::map<EdgeKey, Certificate> edge;
};

// What a verifier is allowed to see: its own id and certificate, the ids and
// certificates of its neighbors and the certificates on incident edges.
// Nothing else; verifiers must be pure functions of this struct.
struct NeighborView {
    NodeId id;
    const Certificate* cert;
    const Certificate* edge_cert;
};

struct LocalView {
    NodeId id;
    const Certificate* cert;
    std::vector<NeighborView> neighbors; // sorted by id

    const NeighborView* find(NodeId nid) const;
    bool has_neighbor(NodeId nid) const { return find(nid) != nullptr; }
};

struct Scheme {
    std::string name;
    std::function<std::optional<Assignment>(const Graph&)> prover;
    std::function<bool(const LocalView&)> verifier;
    bool uses_edge_certs = false;
    // Declared certificate growth, e.g. "O(1)", "O(log n)", "O(n^2)". Informational.
    std::string size_tag;
    // Concrete per-node bit budget as a function of n. When set, completeness
    // checks enforce it on prover output.
    std::function<long long(long long)> size_bits;
};

// max(1, ceil(log2(n))) for n >= 1; used for certificate size budgets.
int ceil_log2(long long n);

// Runs a verifier, turning cert_parse_error into a rejection.
bool eval_verifier(const Scheme& s, const LocalView& v);

// Full-assignment checks. Missing certificates are treated as empty.
bool run_verifier(const Graph& g, const Scheme& s, const Assignment& a); // short-circuits

struct VerdictReport {
    bool accepted = true;
    std::vector<NodeId> rejecting;
};
VerdictReport run_verifier_report(const Graph& g, const Scheme& s, const Assignment& a);

struct CertifyResult {
    bool produced = false; // prover had an assignment at all
    bool accepted = false;
    Assignment assignment;
};
CertifyResult certify(const Graph& g, const Scheme& s); // throws coverage_error on bad keys

// Assignment with every node and edge key materialized (empty certificates
// included) and views pointing into it. Mutating certificate bytes in place
// keeps the views valid, which is what the fuzzer relies on.
struct PreparedInstance {
    Assignment assignment;
    std::vector<LocalView> views; // aligned with graph vertex indices
};
PreparedInstance prepare_instance(const Graph& g, const Assignment& a);

std::size_t max_node_cert_bits(const Assignment& a);

// One line per certificate: "N <id> <bits> <hex>" and "E <u> <v> <bits>
// <hex>", '-' for empty payloads.
std::string format_assignment(const Assignment& a);
Assignment parse_assignment_text(const std::string& text); // throws std::runtime_error

} // namespace lc
