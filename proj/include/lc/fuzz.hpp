#pragma once

#include "lc/cert.hpp"
#include "lc/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lc {

// Soundness fuzzing. The caller certifies that g is a no-instance of the
// scheme's class; fuzz_soundness then hunts for an assignment every node
// accepts. Finding one is a soundness bug in the scheme, reported in the
// result, never an exception.
struct FuzzBudget {
    std::uint64_t seed = 0xf005ba11;
    long long random_assignments = 100'000;
    bool structured = true;
    long long structured_cap = 50'000; // eval ceiling for the structured phase

    // Exhaustive sweep: every slot (each node, plus each edge for schemes
    // with edge certificates) runs through all bit strings of length 0..b,
    // with b maximal under slots*b <= exhaustive_bit_budget and
    // (2^(b+1)-1)^slots <= exhaustive_max_total. Within that bound the
    // absence of accepting assignments is a proof, not evidence.
    int exhaustive_bit_budget = 24;
    long long exhaustive_max_total = 32'768;

    int max_random_cert_bytes = 12;
};

struct FuzzReport {
    bool accepting_found = false;
    Assignment counterexample; // meaningful when accepting_found
    std::string attack;        // phase that found it
    bool input_was_yes = false; // caller-contract violation: the prover accepts g
    bool proved = false;       // exhaustive sweep ran to completion
    int proved_bits = -1;      // per-slot bit bound covered by the sweep
    long long tried = 0;

    bool sound() const { return !accepting_found; }
    std::string label() const; // "proved(<=N bits)" or "evidence"
};

FuzzReport fuzz_soundness(const Scheme& s, const Graph& g, const FuzzBudget& budget = {});

// Completeness: every instance must get an assignment from the prover and
// every node must accept it. Stops at the first failure.
struct CompletenessReport {
    bool ok = true;
    int failed_index = -1;
    std::string reason;
    std::map<int, std::size_t> max_bits_per_n; // over the instances that passed
};

CompletenessReport check_completeness(const Scheme& s, const std::vector<Graph>& yes_instances);

} // namespace lc
