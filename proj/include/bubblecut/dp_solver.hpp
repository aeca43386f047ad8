#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bubblecut/bubble.hpp"
#include "bubblecut/graph.hpp"

namespace bubblecut {

// Sizes of the three edge groups a row contributes when its bubble puts s of
// its b vertices into S: internal pairs (e2), crossings against the earlier
// rows of the same column (e3), and against the earlier rows of the next
// column (e4). x/x' are the S-counts of those prefixes including this row.
struct CrossTerms {
    long long e2 = 0;
    long long e3 = 0;
    long long e4 = 0;
};

// Throws contract_error unless 0 <= s <= b, 0 <= x-s <= b_prev and
// 0 <= x'-s' <= b2_prev.
CrossTerms cross_terms(long long s, long long s2, long long x, long long x2,
                       long long b, long long b_prev, long long b2_prev);

struct SolveResult {
    long long max_cut_size = 0;
    std::optional<Cut> cut;
    long long op_count = 0;          // innermost recurrence-loop iterations
    long long summary_op_count = 0;  // column-summary scan iterations
};

// One column pair's value tables, exposed for tests and golden dumps.
// value[i] is the table after processing row i (value[0] holds the seed);
// entry (x, x2) lives at index x * (x2_max[i] + 1) + x2.
struct PairTables {
    int j = 0;  // 1-based column index
    std::vector<int> x_max;                        // per row i = 0..r_j
    std::vector<int> x2_max;                       // per row i = 0..r_j
    std::vector<std::vector<long long>> value;     // per row, dense (x, x2)
};

// Optional insight into a solve, for tests and instrumentation.
struct SolveCapture {
    std::vector<PairTables> tables;   // full tables, pair k first
    long long recurrence_value = 0;   // phase-1 value (an upper bound)
    long long traceback_value = 0;    // honestly evaluated traceback cut
    bool resolution_used = false;     // phase 3 ran
    long long resolve_ops = 0;        // phase-3 inner iterations
};

// Exact maximum cut of realize_graph(m).
//
// Phase 1 runs the column-pair recurrence and produces an upper bound plus
// instrumented op counts. Phase 2 walks the traceback; when the resulting
// cut meets the bound, optimality is certified and the solve returns. When
// it does not (the recurrence's bound is not always attained — see the
// fixture tests), phase 3 computes the exact answer with an independent
// column-pattern sweep and returns its witness.
//
// op_count / summary_op_count cover phase 1 (the recurrence under
// instrumentation); phase-3 effort is reported via SolveCapture.
SolveResult solve_max_cut(const BubbleModel& m, bool want_cut,
                          SolveCapture* capture = nullptr);

// Phase 1 alone: the recurrence's value, which is >= the true maximum cut
// and equal to it on many but not all models. Kept public so callers and
// tests can compare both solvers side by side.
long long recurrence_upper_bound(const BubbleModel& m);

// Sum over adjacent column pairs of (c_j * c_{j+1})^2 — the recurrence's
// iteration-count ceiling used by the complexity tests alongside n^4.
long long count_bound(const BubbleModel& m);

// Captured tables as JSON (golden-test hook).
std::string tables_to_json(const SolveCapture& capture);

}  // namespace bubblecut
