#pragma once

#include "bubblecut/bubble.hpp"
#include "bubblecut/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bubblecut {

// Caps keep the exhaustive procedures from hanging on oversized input;
// callers may raise them explicitly, accepting the blow-up.
inline constexpr int kBruteForceCap = 24;
inline constexpr int kExhaustiveOrderingCap = 8;

// Exact maximum cut by enumerating all 2^(n-1) inequivalent cuts (vertex 0
// is pinned to S; the complement cut has equal size). Refuses n > cap.
long long brute_force_max_cut(const Graph& g, int cap = kBruteForceCap);

// True iff some vertex permutation satisfies the umbrella property, checked
// directly from its three-index definition over all n! permutations.
// Refuses n > cap.
bool exhaustive_proper_interval_check(const Graph& g, int cap = kExhaustiveOrderingCap);

struct Mismatch {
    uint64_t seed = 0;       // per-trial generator seed
    BubbleModel model;       // offending instance
    long long dp_value = 0;
    long long oracle_value = 0;
};

struct VerificationReport {
    int trials = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

// Cross-checks the solver against the brute-force oracle on `trials` random
// models with 1 <= n <= max_n. Deterministic in seed; failures are carried
// in the report, never thrown.
VerificationReport verify_dp(int trials, int max_n, uint64_t seed);

// Canonical JSON for a report. Timing is deliberately omitted so repeated
// runs with equal parameters serialize byte-identically.
std::string report_to_json(const VerificationReport& report);

}  // namespace bubblecut
