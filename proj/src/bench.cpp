#include "bubblecut/bench.hpp"

#include "bubblecut/dp_solver.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <random>

namespace bubblecut {

BubbleModel dense_model(int n, uint64_t seed) {
    if (n < 1) throw contract_error("dense_model: n must be positive");
    std::mt19937_64 engine(seed);
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    for (size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[engine() % i]);

    // Four near-equal parts, filled in order: two rows for column 1, two for
    // column 2.
    std::vector<std::vector<int>> part(4);
    int base = n / 4, extra = n % 4;
    int at = 0;
    for (int p = 0; p < 4; ++p) {
        int take = base + (p < extra ? 1 : 0);
        part[p].assign(ids.begin() + at, ids.begin() + at + take);
        at += take;
    }

    BubbleModel m;
    m.n = n;
    m.columns.push_back({part[0], part[1]});
    m.columns.push_back({part[2], part[3]});
    for (auto& col : m.columns)
        while (!col.empty() && col.back().empty()) col.pop_back();
    while (!m.columns.empty() && m.columns.back().empty()) m.columns.pop_back();
    if (auto bad = validate_model(m))
        throw contract_error("dense_model produced an invalid model: " + *bad);
    return m;
}

BenchSweep run_bench(const std::vector<int>& sizes, uint64_t seed) {
    BenchSweep sweep;
    for (int n : sizes) {
        BubbleModel m = dense_model(n, seed);
        auto start = std::chrono::steady_clock::now();
        SolveResult r = solve_max_cut(m, false);
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        sweep.records.push_back({n, r.op_count, count_bound(m), elapsed});
    }

    // Fit log(op_count) = a + e*log(n) by least squares over records with a
    // positive op_count.
    std::vector<std::pair<double, double>> pts;
    for (const auto& rec : sweep.records)
        if (rec.n > 0 && rec.op_count > 0)
            pts.push_back({std::log(static_cast<double>(rec.n)),
                           std::log(static_cast<double>(rec.op_count))});
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = pts.size() * sxx - sx * sx;
        if (denom > 0) sweep.fitted_exponent = (pts.size() * sxy - sx * sy) / denom;
    }
    return sweep;
}

std::string sweep_to_json(const BenchSweep& sweep) {
    nlohmann::ordered_json out;
    out["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : sweep.records) {
        nlohmann::ordered_json doc;
        doc["n"] = rec.n;
        doc["op_count"] = rec.op_count;
        doc["bound"] = rec.bound;
        out["records"].push_back(std::move(doc));
    }
    if (sweep.fitted_exponent)
        out["fitted_exponent"] = *sweep.fitted_exponent;
    else
        out["fitted_exponent"] = nullptr;
    return out.dump();
}

}  // namespace bubblecut
