#pragma once

#include "bubblecut/bubble.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bubblecut {

struct BenchRecord {
    int n = 0;
    long long op_count = 0;
    long long bound = 0;  // count_bound of the instance
    double wall_time_seconds = 0.0;
};

struct BenchSweep {
    std::vector<BenchRecord> records;
    // Least-squares slope of log(op_count) against log(n); absent unless the
    // sweep has at least two usable sizes.
    std::optional<double> fitted_exponent;
};

// Dense two-column benchmark family: the n vertices are split into four
// near-equal bubbles arranged as two stacked rows per column, so the inner
// loops of the solver run against ranges of width ~n/4 on both axes and the
// instance exercises the quartic regime. Deterministic in (n, seed).
BubbleModel dense_model(int n, uint64_t seed);

// Solves the dense family at each requested size and fits the growth
// exponent across the sweep.
BenchSweep run_bench(const std::vector<int>& sizes, uint64_t seed);

// Canonical JSON for a sweep. Wall-clock fields are deliberately omitted so
// repeated runs with equal parameters serialize byte-identically.
std::string sweep_to_json(const BenchSweep& sweep);

}  // namespace bubblecut
