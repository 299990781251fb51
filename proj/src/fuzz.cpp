#include "lc/fuzz.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lc {

std::string FuzzReport::label() const {
    if (proved) return "proved(<=" + std::to_string(proved_bits) + " bits)";
    return "evidence";
}

namespace {

// LEB128 helpers for field-level mutations
bool lead_varint(const std::vector<std::uint8_t>& bytes, std::uint64_t& value, int& len) {
    value = 0;
    len = 0;
    int shift = 0;
    while (true) {
        if (len >= (int)bytes.size() || shift > 63) return false;
        std::uint8_t b = bytes[len++];
        value |= (std::uint64_t)(b & 0x7f) << shift;
        if (!(b & 0x80)) return true;
        shift += 7;
    }
}

std::vector<std::uint8_t> enc_varint(std::uint64_t v) {
    std::vector<std::uint8_t> out;
    while (v >= 0x80) {
        out.push_back((std::uint8_t)v | 0x80);
        v >>= 7;
    }
    out.push_back((std::uint8_t)v);
    return out;
}

struct Fuzzer {
    const Scheme& s;
    const Graph& g;
    const FuzzBudget& opt;
    FuzzReport rep;
    PreparedInstance prep;
    std::vector<Certificate*> slots;     // nodes first, then edges for edge schemes
    int node_slots = 0;
    long long structured_evals = 0;

    Fuzzer(const Scheme& s_, const Graph& g_, const FuzzBudget& o)
        : s(s_), g(g_), opt(o), prep(prepare_instance(g_, Assignment{})) {
        for (NodeId id : g.ids()) slots.push_back(&prep.assignment.node.at(id));
        node_slots = (int)slots.size();
        if (s.uses_edge_certs)
            for (auto [u, v] : g.edge_ids())
                slots.push_back(&prep.assignment.edge.at(edge_key(u, v)));
    }

    bool eval(const char* attack) {
        ++rep.tried;
        for (const auto& view : prep.views)
            if (!eval_verifier(s, view)) return false;
        rep.accepting_found = true;
        rep.attack = attack;
        rep.counterexample = prep.assignment;
        return true;
    }

    void load(const Assignment& a) {
        for (auto& [id, c] : prep.assignment.node) {
            auto it = a.node.find(id);
            c = it == a.node.end() ? Certificate{} : it->second;
        }
        for (auto& [key, c] : prep.assignment.edge) {
            auto it = a.edge.find(key);
            c = it == a.edge.end() ? Certificate{} : it->second;
        }
    }

    // ---- exhaustive sweep ----

    // codes enumerate bit strings of length 0..b: code+1 in binary, with the
    // leading 1 dropped, is the string
    static void set_code(Certificate& c, std::uint64_t code) {
        std::uint64_t x = code + 1;
        int len = 63 - __builtin_clzll(x);
        std::uint64_t val = x - (1ull << len);
        c.bits = len;
        c.bytes.assign((len + 7) / 8, 0);
        for (std::size_t i = 0; i < c.bytes.size(); ++i)
            c.bytes[i] = (std::uint8_t)(val >> (8 * i));
    }

    bool exhaustive() {
        int ns = (int)slots.size();
        auto feasible = [&](int b) {
            if ((long long)ns * b > opt.exhaustive_bit_budget) return false;
            long long per = (1ll << (b + 1)) - 1;
            long long total = 1;
            for (int i = 0; i < ns; ++i) {
                if (total > opt.exhaustive_max_total / per + 1) return false;
                total *= per;
                if (total > opt.exhaustive_max_total) return false;
            }
            return true;
        };
        int b = 0;
        while (b < 24 && feasible(b + 1)) ++b;
        std::uint64_t per = (1ull << (b + 1)) - 1;
        std::vector<std::uint64_t> code(ns, 0);
        for (auto* sl : slots) set_code(*sl, 0);
        while (true) {
            if (eval("exhaustive")) return true;
            int i = 0;
            while (i < ns) {
                if (++code[i] < per) {
                    set_code(*slots[i], code[i]);
                    break;
                }
                code[i] = 0;
                set_code(*slots[i], 0);
                ++i;
            }
            if (i == ns) break;
        }
        rep.proved = true;
        rep.proved_bits = b;
        return false;
    }

    // ---- structured adversaries ----

    bool budget_left() const { return structured_evals < opt.structured_cap; }

    bool ev(const char* attack) {
        ++structured_evals;
        return eval(attack);
    }

    bool mutate_loaded() {
        // snapshot the loaded base so each mutation starts clean
        std::vector<Certificate> snap;
        snap.reserve(slots.size());
        for (auto* sl : slots) snap.push_back(*sl);

        auto restore = [&](int i) { *slots[i] = snap[i]; };

        for (int i = 0; i < (int)slots.size() && budget_left(); ++i) {
            Certificate& c = *slots[i];
            // bit flips
            for (std::size_t by = 0; by < snap[i].bytes.size() && budget_left(); ++by) {
                for (int bit = 0; bit < 8 && budget_left(); ++bit) {
                    c.bytes[by] ^= (std::uint8_t)(1u << bit);
                    if (ev("bitflip")) return true;
                    c.bytes[by] = snap[i].bytes[by];
                }
                c.bytes[by] = (std::uint8_t)(snap[i].bytes[by] + 1);
                if (ev("byte+1")) return true;
                c.bytes[by] = (std::uint8_t)(snap[i].bytes[by] - 1);
                if (ev("byte-1")) return true;
                c.bytes[by] = snap[i].bytes[by];
            }
            if (!budget_left()) break;
            // shifted leading field (distance forgeries and friends)
            std::uint64_t val;
            int len;
            if (lead_varint(snap[i].bytes, val, len)) {
                for (std::uint64_t nv : {val + 1, val == 0 ? (std::uint64_t)2 : val - 1}) {
                    auto head = enc_varint(nv);
                    c.bytes = head;
                    c.bytes.insert(c.bytes.end(), snap[i].bytes.begin() + len,
                                   snap[i].bytes.end());
                    c.bits = snap[i].bits + 8 * ((long long)head.size() - len);
                    if (ev("field-shift")) return true;
                    restore(i);
                    if (!budget_left()) break;
                }
            }
            if (!budget_left()) break;
            // size games
            if (!snap[i].bytes.empty()) {
                c.bytes.pop_back();
                c.bits = 8 * c.bytes.size();
                if (ev("truncate")) return true;
                restore(i);
            }
            if (!budget_left()) break;
            for (std::uint8_t tail : {(std::uint8_t)0x00, (std::uint8_t)0xff}) {
                c.bytes.push_back(tail);
                c.bits += 8;
                if (ev("extend")) return true;
                restore(i);
                if (!budget_left()) break;
            }
            if (!budget_left()) break;
            c = Certificate{};
            if (ev("erase")) return true;
            restore(i);
            c.bits = 0; // junk bytes behind an empty claim
            if (ev("bits0")) return true;
            restore(i);
        }

        // whole-assignment games on node certificates
        int n = node_slots;
        for (int shift = 1; shift < n && budget_left(); ++shift) {
            for (int i = 0; i < n; ++i) *slots[i] = snap[(i + shift) % n];
            if (ev("rotate")) return true;
        }
        for (int from = 0; from < n && budget_left(); ++from) {
            for (int i = 0; i < n; ++i) *slots[i] = snap[from];
            if (ev("clone-all")) return true;
        }
        for (int i = 0; i < n; ++i) restore(i);
        // duplicated-root: copy one certificate over another
        for (int from = 0; from < n && budget_left(); ++from)
            for (int to = 0; to < n && budget_left(); ++to) {
                if (from == to) continue;
                *slots[to] = snap[from];
                if (ev("duplicate")) return true;
                restore(to);
            }
        // simultaneous field shift everywhere
        for (long long delta : {1ll, -1ll}) {
            if (!budget_left()) break;
            bool any = false;
            for (int i = 0; i < (int)slots.size(); ++i) {
                std::uint64_t val;
                int len;
                if (lead_varint(snap[i].bytes, val, len) &&
                    (delta > 0 || val > 0)) {
                    auto head = enc_varint(val + delta);
                    slots[i]->bytes = head;
                    slots[i]->bytes.insert(slots[i]->bytes.end(),
                                           snap[i].bytes.begin() + len, snap[i].bytes.end());
                    slots[i]->bits = snap[i].bits + 8 * ((long long)head.size() - len);
                    any = true;
                }
            }
            if (any && ev("field-shift-all")) return true;
            for (int i = 0; i < (int)slots.size(); ++i) restore(i);
        }
        return false;
    }

    bool structured() {
        // near-miss grafts: prover output of g minus one edge, pasted onto g.
        // This is the cycle-as-path forgery when g is a cycle, and its
        // analogue everywhere else.
        auto edges = g.edge_ids();
        int grafts = 0;
        for (auto [u, v] : edges) {
            if (grafts >= 24 || !budget_left()) break;
            std::vector<std::pair<NodeId, NodeId>> rest;
            for (auto [a, b] : edges)
                if (!(a == u && b == v)) rest.push_back({a, b});
            Graph gm(g.ids(), rest);
            if (!gm.connected()) continue;
            std::optional<Assignment> a;
            try {
                a = s.prover(gm);
            } catch (...) {
                continue; // prover guards may refuse the near-miss; fine
            }
            if (!a) continue;
            ++grafts;
            load(*a);
            if (ev("graft")) return true;
            if (mutate_loaded()) return true;
        }
        if (grafts == 0 && budget_left()) {
            // no graft base; run the mutation families over the all-empty
            // assignment so the cheap adversaries still fire
            load(Assignment{});
            if (mutate_loaded()) return true;
        }
        return false;
    }

    // ---- random assignments ----

    bool random_phase(std::mt19937_64& rng) {
        for (long long t = 0; t < opt.random_assignments; ++t) {
            for (auto* sl : slots) {
                int len = (int)(rng() % (opt.max_random_cert_bytes + 1));
                if (len > 4 && (rng() & 1)) len = (int)(rng() % 5); // skew short
                sl->bytes.resize(len);
                for (auto& b : sl->bytes) b = (std::uint8_t)rng();
                sl->bits = 8 * (std::size_t)len;
                if (len > 0 && (rng() & 7) == 0) sl->bits = rng() % (8 * len + 1);
            }
            if (eval("random")) return true;
        }
        return false;
    }
};

} // namespace

FuzzReport fuzz_soundness(const Scheme& s, const Graph& g, const FuzzBudget& budget) {
    Fuzzer fz(s, g, budget);
    // caller contract: g must be a no-instance. If the prover accepts it,
    // flag that instead of fuzzing. A prover guard throwing counts as
    // "nothing produced".
    CertifyResult cr;
    try {
        cr = certify(g, s);
    } catch (const std::invalid_argument&) {
        cr.produced = false;
    }
    if (cr.produced && cr.accepted) {
        fz.rep.input_was_yes = true;
        fz.rep.accepting_found = true;
        fz.rep.attack = "prover";
        fz.rep.counterexample = cr.assignment;
        return fz.rep;
    }
    if (fz.exhaustive()) return fz.rep;
    if (budget.structured && fz.structured()) return fz.rep;
    std::mt19937_64 rng(budget.seed);
    if (budget.random_assignments > 0 && fz.random_phase(rng)) return fz.rep;
    return fz.rep;
}

CompletenessReport check_completeness(const Scheme& s, const std::vector<Graph>& yes_instances) {
    CompletenessReport rep;
    for (int i = 0; i < (int)yes_instances.size(); ++i) {
        const Graph& g = yes_instances[i];
        CertifyResult r = certify(g, s);
        if (!r.produced) {
            rep.ok = false;
            rep.failed_index = i;
            rep.reason = "prover returned no assignment";
            return rep;
        }
        if (!r.accepted) {
            auto verdict = run_verifier_report(g, s, r.assignment);
            rep.ok = false;
            rep.failed_index = i;
            rep.reason = "verifier rejected the prover's assignment at node " +
                         (verdict.rejecting.empty()
                              ? std::string("?")
                              : std::to_string(verdict.rejecting.front()));
            return rep;
        }
        std::size_t bits = max_node_cert_bits(r.assignment);
        if (s.size_bits && (long long)bits > s.size_bits(g.n())) {
            rep.ok = false;
            rep.failed_index = i;
            rep.reason = "certificate of " + std::to_string(bits) +
                         " bits exceeds the declared bound " +
                         std::to_string(s.size_bits(g.n())) + " at n=" + std::to_string(g.n());
            return rep;
        }
        auto [it, fresh] = rep.max_bits_per_n.try_emplace(g.n(), bits);
        if (!fresh) it->second = std::max(it->second, bits);
    }
    return rep;
}

} // namespace lc
