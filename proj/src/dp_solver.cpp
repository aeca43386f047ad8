#include "bubblecut/dp_solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>

namespace bubblecut {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

// Digested model: per-column bubble sizes plus prefix sums, 0-based.
struct Sizes {
    std::vector<std::vector<int>> b;  // b[j][i]
    int k = 0;

    int size(int j, int i) const {
        if (j < 0 || j >= k) return 0;
        if (i < 0 || i >= static_cast<int>(b[j].size())) return 0;
        return b[j][i];
    }
    int rows(int j) const { return (j >= 0 && j < k) ? static_cast<int>(b[j].size()) : 0; }
    int column(int j) const {
        if (j < 0 || j >= k) return 0;
        int c = 0;
        for (int v : b[j]) c += v;
        return c;
    }
};

Sizes digest(const BubbleModel& m) {
    Sizes s;
    s.k = m.k();
    s.b.resize(s.k);
    for (int j = 0; j < s.k; ++j) {
        s.b[j].resize(m.rows(j));
        for (int i = 0; i < m.rows(j); ++i) s.b[j][i] = m.bubble_size(j, i);
    }
    return s;
}

// Dense (x, x2) table for one row level of a column pair.
struct RowTable {
    int x_max = 0;
    int x2_max = 0;
    std::vector<long long> val;
    std::vector<int> s_choice;   // traceback: chosen s per entry
    std::vector<int> s2_choice;  // traceback: chosen s2 per entry

    size_t idx(int x, int x2) const {
        return static_cast<size_t>(x) * (x2_max + 1) + x2;
    }
};

struct PairState {
    std::vector<RowTable> rows;  // index 0..r_j, row 0 holds the seed
    long long summary = 0;
    int arg_x = 0;
    int arg_x2 = 0;
};

// The cut value of a per-bubble count assignment, straight from the model's
// arithmetic: each column contributes X(C-X); each bubble of column j+1
// crosses the strictly higher rows of column j.
long long objective_from_counts(const Sizes& sz,
                                const std::vector<std::vector<int>>& counts) {
    long long total = 0;
    for (int j = 0; j < sz.k; ++j) {
        long long X = 0, C = 0;
        for (int i = 0; i < sz.rows(j); ++i) {
            X += counts[j][i];
            C += sz.b[j][i];
        }
        total += X * (C - X);
        if (j + 1 < sz.k) {
            // Suffix sums over column j, scanned from the top.
            long long above_b = 0, above_t = 0;
            for (int i = sz.rows(j) - 1; i >= 0; --i) {
                if (i < sz.rows(j + 1)) {
                    long long t2 = counts[j + 1][i];
                    long long b2 = sz.b[j + 1][i];
                    total += t2 * (above_b - above_t) + (b2 - t2) * above_t;
                }
                above_b += sz.b[j][i];
                above_t += counts[j][i];
            }
            // Rows of column j+1 at or above row r_j have no left neighbors.
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Phase 1+2: the column-pair recurrence and its traceback.
// ---------------------------------------------------------------------------

struct RecurrenceRun {
    std::vector<PairState> pairs;  // index j = 0..k-1
    long long value = 0;
    long long op_count = 0;
    long long summary_op_count = 0;
};

RecurrenceRun run_recurrence(const Sizes& sz) {
    RecurrenceRun run;
    run.pairs.resize(sz.k);
    long long seed = 0;  // summary of the column right of the current pair
    for (int j = sz.k - 1; j >= 0; --j) {
        PairState& ps = run.pairs[j];
        int r = sz.rows(j);
        ps.rows.resize(r + 1);
        ps.rows[0].x_max = 0;
        ps.rows[0].x2_max = 0;
        ps.rows[0].val = {seed};

        int cum = 0, cum2 = 0;
        for (int i = 1; i <= r; ++i) {
            const RowTable& prev = ps.rows[i - 1];
            RowTable& cur = ps.rows[i];
            int b = sz.size(j, i - 1);
            int b2 = sz.size(j + 1, i - 1);
            int b_prev = cum, b2_prev = cum2;
            cum += b;
            cum2 += b2;
            cur.x_max = cum;
            cur.x2_max = cum2;
            if (b == 0 && b2 == 0) {
                // Nothing joins at this level; the table is unchanged.
                cur.val = prev.val;
                cur.s_choice.assign(cur.val.size(), 0);
                cur.s2_choice.assign(cur.val.size(), 0);
                continue;
            }
            cur.val.assign(static_cast<size_t>(cum + 1) * (cum2 + 1), 0);
            cur.s_choice.assign(cur.val.size(), 0);
            cur.s2_choice.assign(cur.val.size(), 0);
            for (int x = 0; x <= cum; ++x) {
                for (int x2 = 0; x2 <= cum2; ++x2) {
                    long long best = kNegInf;
                    int best_s = 0, best_s2 = 0;
                    int s_lo = std::max(0, x - b_prev), s_hi = std::min(b, x);
                    int s2_lo = std::max(0, x2 - b2_prev), s2_hi = std::min(b2, x2);
                    for (int s = s_lo; s <= s_hi; ++s) {
                        for (int s2 = s2_lo; s2 <= s2_hi; ++s2) {
                            ++run.op_count;
                            long long cand =
                                prev.val[prev.idx(x - s, x2 - s2)] -
                                static_cast<long long>(b) * s2 +
                                static_cast<long long>(s) *
                                    (b_prev + b2_prev - 2LL * x - 2LL * x2 + s + 2LL * s2);
                            if (cand > best) {
                                best = cand;
                                best_s = s;
                                best_s2 = s2;
                            }
                        }
                    }
                    assert(best > kNegInf);
#ifndef NDEBUG
                    {
                        // The compact bracket must equal the three edge groups.
                        CrossTerms ct = cross_terms(best_s, best_s2, x, x2, b, b_prev, b2_prev);
                        long long bracket =
                            static_cast<long long>(b) * (x + x2) -
                            static_cast<long long>(b) * best_s2 +
                            static_cast<long long>(best_s) *
                                (b_prev + b2_prev - 2LL * x - 2LL * x2 + best_s + 2LL * best_s2);
                        assert(bracket == ct.e2 + ct.e3 + ct.e4);
                    }
#endif
                    size_t at = cur.idx(x, x2);
                    cur.val[at] = static_cast<long long>(b) * (x + x2) + best;
                    cur.s_choice[at] = best_s;
                    cur.s2_choice[at] = best_s2;
                }
            }
        }

        // Column summary: best entry of the final row, smallest (x, x2) first.
        const RowTable& top = ps.rows[r];
        long long best = kNegInf;
        for (int x = 0; x <= top.x_max; ++x) {
            for (int x2 = 0; x2 <= top.x2_max; ++x2) {
                ++run.summary_op_count;
                long long v = top.val[top.idx(x, x2)];
                if (v > best) {
                    best = v;
                    ps.arg_x = x;
                    ps.arg_x2 = x2;
                }
            }
        }
        ps.summary = best;
        seed = best;
    }
    run.value = sz.k > 0 ? run.pairs[0].summary : 0;
    return run;
}

// Walks the recorded choices; per pair j the walk fixes column j's S-count
// per bubble. The result is a real cut but not always an optimal one (the
// per-pair assumptions about the next column need not agree), so the caller
// re-evaluates it honestly.
std::vector<std::vector<int>> traceback_counts(const Sizes& sz, const RecurrenceRun& run) {
    std::vector<std::vector<int>> counts(sz.k);
    for (int j = 0; j < sz.k; ++j) {
        const PairState& ps = run.pairs[j];
        counts[j].assign(sz.rows(j), 0);
        int x = ps.arg_x, x2 = ps.arg_x2;
        for (int i = sz.rows(j); i >= 1; --i) {
            const RowTable& row = ps.rows[i];
            size_t at = row.idx(x, x2);
            int s = row.s_choice.empty() ? 0 : row.s_choice[at];
            int s2 = row.s2_choice.empty() ? 0 : row.s2_choice[at];
            counts[j][i - 1] = s;
            x -= s;
            x2 -= s2;
        }
        assert(x == 0 && x2 == 0);
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Phase 3: exact column-pattern sweep.
//
// A pattern is one column's vector of per-bubble S-counts. Processing
// columns right to left with D[pattern] = best value of the suffix makes the
// cross terms exact by construction: they are evaluated from the two full
// patterns, never from an assumed summary.
// ---------------------------------------------------------------------------

constexpr long long kPatternCap = 1LL << 22;
constexpr long long kResolveBudget = 4'000'000'000LL;

long long pattern_count(const Sizes& sz, int j) {
    long long p = 1;
    for (int i = 0; i < sz.rows(j); ++i) {
        p *= sz.b[j][i] + 1;
        if (p > kPatternCap) return -1;
    }
    return p;
}

// Lexicographic odometer over one column's count vectors.
struct PatternIter {
    const std::vector<int>* radix;
    std::vector<int> digits;

    explicit PatternIter(const std::vector<int>& sizes)
        : radix(&sizes), digits(sizes.size(), 0) {}

    bool advance() {
        for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
            if (digits[i] < (*radix)[i]) {
                ++digits[i];
                std::fill(digits.begin() + i + 1, digits.end(), 0);
                return true;
            }
            digits[i] = 0;
        }
        return false;
    }
};

struct Resolution {
    bool feasible = false;
    long long value = 0;
    long long ops = 0;
    std::vector<std::vector<int>> counts;
};

Resolution resolve_exact(const Sizes& sz) {
    Resolution res;
    std::vector<long long> pat(sz.k);
    long long budget = 0;
    for (int j = 0; j < sz.k; ++j) {
        pat[j] = pattern_count(sz, j);
        if (pat[j] < 0) return res;
        if (j > 0) {
            long long pairs = pat[j - 1] * pat[j];
            if (pairs > kResolveBudget / std::max(1, sz.rows(j - 1) + 1)) return res;
            budget += pairs * (sz.rows(j - 1) + 1);
            if (budget > kResolveBudget) return res;
        }
    }
    if (sz.k == 0) {
        res.feasible = true;
        return res;
    }

    // D[q] = best value of columns j.. with column j's pattern q; arg[j][p]
    // records the chosen pattern of column j+1.
    std::vector<std::vector<long long>> arg(sz.k);
    std::vector<long long> d_next;
    for (int j = sz.k - 1; j >= 0; --j) {
        std::vector<long long> d_cur(pat[j], kNegInf);
        if (j + 1 < sz.k) arg[j].assign(pat[j], 0);
        int r = sz.rows(j);
        int r2 = sz.rows(j + 1);
        long long C = sz.column(j);

        // Per-pattern data for column j: total count, and for the cross
        // terms the coefficient of the next column's prefix at each level.
        PatternIter it(sz.b[j]);
        long long p_index = 0;
        do {
            long long X = 0;
            for (int v : it.digits) X += v;
            long long base = X * (C - X);
            if (j + 1 == sz.k) {
                d_cur[p_index] = base;
            } else {
                // fixed part: sum over rows of t_i * (size prefix of column j+1)
                long long fixed = 0;
                {
                    long long pre_b2 = 0;
                    for (int i = 0; i < r; ++i) {
                        fixed += static_cast<long long>(it.digits[i]) * pre_b2;
                        if (i < r2) pre_b2 += sz.b[j + 1][i];
                    }
                }
                // weight on q's count at row i2: sum of (b_i - 2 t_i) over rows i > i2
                std::vector<long long> wsuf(r2, 0);
                {
                    long long acc = 0;
                    for (int i = r - 1; i >= 0; --i) {
                        if (i < r2) wsuf[i] = acc;
                        acc += sz.b[j][i] - 2LL * it.digits[i];
                    }
                }
                PatternIter qt(sz.b[j + 1]);
                long long q_index = 0;
                long long best = kNegInf, best_q = 0;
                do {
                    long long cross = fixed;
                    for (int i2 = 0; i2 < r2; ++i2) {
                        cross += static_cast<long long>(qt.digits[i2]) * wsuf[i2];
                        ++res.ops;
                    }
                    ++res.ops;
                    long long cand = cross + d_next[q_index];
                    if (cand > best) {
                        best = cand;
                        best_q = q_index;
                    }
                    ++q_index;
                } while (qt.advance());
                d_cur[p_index] = base + best;
                arg[j][p_index] = best_q;
            }
            ++p_index;
        } while (it.advance());
        d_next = std::move(d_cur);
    }

    long long best = kNegInf, best_p = 0;
    for (long long p = 0; p < pat[0]; ++p) {
        if (d_next[p] > best) {
            best = d_next[p];
            best_p = p;
        }
    }

    // Decode the winning chain back into per-bubble counts.
    res.counts.resize(sz.k);
    long long p = best_p;
    for (int j = 0; j < sz.k; ++j) {
        res.counts[j].assign(sz.rows(j), 0);
        long long rem = p;
        for (int i = sz.rows(j) - 1; i >= 0; --i) {
            res.counts[j][i] = static_cast<int>(rem % (sz.b[j][i] + 1));
            rem /= sz.b[j][i] + 1;
        }
        if (j + 1 < sz.k) p = arg[j][p];
    }
    res.feasible = true;
    res.value = best;
    return res;
}

// Last-resort exact fallback for models whose pattern space is too large:
// plain enumeration over the realized graph (duality halves the space).
Resolution resolve_brute(const BubbleModel& m) {
    Resolution res;
    if (m.n > 24) return res;
    Graph g = realize_graph(m);
    std::vector<uint32_t> mask(m.n, 0);
    for (const auto& [u, v] : g.edges()) {
        mask[u] |= 1u << v;
        mask[v] |= 1u << u;
    }
    long long best = 0;
    uint32_t best_set = 0;
    uint32_t limit = m.n == 0 ? 1 : (1u << (m.n - 1));
    for (uint32_t set = 0; set < limit; ++set) {
        ++res.ops;
        long long cut = 0;
        for (int v = 0; v < m.n; ++v)
            if (set >> v & 1u) cut += std::popcount(mask[v] & ~set);
        if (cut > best) {
            best = cut;
            best_set = set;
        }
    }
    res.counts.resize(m.k());
    for (int j = 0; j < m.k(); ++j) {
        res.counts[j].assign(m.rows(j), 0);
        for (int i = 0; i < m.rows(j); ++i)
            for (int v : m.columns[j][i])
                if (best_set >> v & 1u) ++res.counts[j][i];
    }
    res.feasible = true;
    res.value = best;
    return res;
}

Cut cut_from_counts(const BubbleModel& m, const std::vector<std::vector<int>>& counts) {
    Cut cut;
    cut.membership.assign(m.n, 0);
    for (int j = 0; j < m.k(); ++j) {
        for (int i = 0; i < m.rows(j); ++i) {
            std::vector<int> ids = m.columns[j][i];
            std::sort(ids.begin(), ids.end());
            for (int t = 0; t < counts[j][i]; ++t) cut.membership[ids[t]] = 1;
        }
    }
    return cut;
}

}  // namespace

CrossTerms cross_terms(long long s, long long s2, long long x, long long x2,
                       long long b, long long b_prev, long long b2_prev) {
    if (s < 0 || s > b) throw contract_error("cross_terms: s outside [0, b]");
    if (x - s < 0 || x - s > b_prev)
        throw contract_error("cross_terms: x - s outside [0, b_prev]");
    if (x2 - s2 < 0 || x2 - s2 > b2_prev)
        throw contract_error("cross_terms: x2 - s2 outside [0, b2_prev]");
    CrossTerms ct;
    ct.e2 = s * (b - s);
    ct.e3 = s * (b_prev - (x - s)) + (b - s) * (x - s);
    ct.e4 = s * (b2_prev - (x2 - s2)) + (b - s) * (x2 - s2);
    return ct;
}

long long count_bound(const BubbleModel& m) {
    long long total = 0;
    for (int j = 0; j + 1 < m.k(); ++j) {
        long long c = m.column_size(j);
        long long c2 = m.column_size(j + 1);
        total += c * c * c2 * c2;
    }
    return total;
}

long long recurrence_upper_bound(const BubbleModel& m) {
    if (auto bad = validate_model(m)) throw contract_error("invalid model: " + *bad);
    if (realized_edge_count(m) == 0) return 0;
    return run_recurrence(digest(m)).value;
}

SolveResult solve_max_cut(const BubbleModel& m, bool want_cut, SolveCapture* capture) {
    if (auto bad = validate_model(m)) throw contract_error("invalid model: " + *bad);
    SolveResult result;
    if (capture) *capture = SolveCapture{};

    if (realized_edge_count(m) == 0) {
        // Edgeless graphs need no table work; every cut has size 0.
        if (want_cut) result.cut = Cut{std::vector<uint8_t>(m.n, 0)};
        return result;
    }

    Sizes sz = digest(m);
    RecurrenceRun run = run_recurrence(sz);
    result.op_count = run.op_count;
    result.summary_op_count = run.summary_op_count;

    std::vector<std::vector<int>> counts = traceback_counts(sz, run);
    long long traced = objective_from_counts(sz, counts);
    assert(traced <= run.value);

    if (capture) {
        capture->recurrence_value = run.value;
        capture->traceback_value = traced;
        for (int j = 0; j < sz.k; ++j) {
            PairTables pt;
            pt.j = j + 1;
            for (const auto& row : run.pairs[j].rows) {
                pt.x_max.push_back(row.x_max);
                pt.x2_max.push_back(row.x2_max);
                pt.value.push_back(row.val);
            }
            capture->tables.push_back(std::move(pt));
        }
    }

    if (traced == run.value) {
        // The traceback cut attains the recurrence's upper bound, which
        // certifies both as the exact optimum.
        result.max_cut_size = run.value;
    } else {
        Resolution res = resolve_exact(sz);
        if (!res.feasible) res = resolve_brute(m);
        if (!res.feasible)
            throw std::runtime_error(
                "exact resolution is out of budget for this model (pattern space too large) "
                "and the instance exceeds the enumeration cap");
        assert(res.value >= traced && res.value <= run.value);
        assert(objective_from_counts(sz, res.counts) == res.value);
        result.max_cut_size = res.value;
        counts = std::move(res.counts);
        if (capture) {
            capture->resolution_used = true;
            capture->resolve_ops = res.ops;
        }
    }

    if (want_cut) result.cut = cut_from_counts(m, counts);
    return result;
}

std::string tables_to_json(const SolveCapture& capture) {
    nlohmann::ordered_json out;
    out["recurrence_value"] = capture.recurrence_value;
    out["pairs"] = nlohmann::ordered_json::array();
    for (const auto& pt : capture.tables) {
        nlohmann::ordered_json pair_doc;
        pair_doc["j"] = pt.j;
        pair_doc["rows"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < pt.value.size(); ++i) {
            nlohmann::ordered_json row;
            row["i"] = i;
            row["x_max"] = pt.x_max[i];
            row["x2_max"] = pt.x2_max[i];
            row["values"] = pt.value[i];
            pair_doc["rows"].push_back(std::move(row));
        }
        out["pairs"].push_back(std::move(pair_doc));
    }
    return out.dump();
}

}  // namespace bubblecut
