#include "bubblecut/bench.hpp"
#include "bubblecut/bubble.hpp"
#include "bubblecut/dp_solver.hpp"
#include "bubblecut/generator.hpp"
#include "bubblecut/graph.hpp"
#include "bubblecut/oracle.hpp"
#include "bubblecut/recognition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotProperInterval = 2;
constexpr int kInternalError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bubblecut::parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct SolveOptions {
    std::string input;
    std::string format;
    bool emit_cut = false;
    bool json = false;
};

int run_solve(const SolveOptions& opt) {
    using namespace bubblecut;
    std::string text = read_file(opt.input);
    BubbleModel model;
    if (opt.format == "edges") {
        Graph g = parse_edge_list(text);
        auto maybe = build_bubble_model(g);
        if (!maybe) {
            std::cerr << "not a proper interval graph (recognition stage)\n";
            return kNotProperInterval;
        }
        model = std::move(*maybe);
    } else {
        model = model_from_json(text);
    }

    SolveResult result = solve_max_cut(model, opt.emit_cut);
    if (opt.emit_cut) {
        // Re-evaluate the witness on the realized graph before reporting it.
        if (!result.cut ||
            cut_size(realize_graph(model), *result.cut) != result.max_cut_size) {
            std::cerr << "internal error: cut witness does not match the reported size\n";
            return kInternalError;
        }
    }

    if (opt.json) {
        nlohmann::ordered_json out;
        out["n"] = model.n;
        out["maxcut"] = result.max_cut_size;
        out["op_count"] = result.op_count;
        out["summary_op_count"] = result.summary_op_count;
        out["count_bound"] = count_bound(model);
        if (opt.emit_cut) {
            nlohmann::ordered_json side = nlohmann::ordered_json::array();
            for (int v = 0; v < model.n; ++v)
                if (result.cut->in_s(v)) side.push_back(v);
            out["cut"] = std::move(side);
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "maxcut " << result.max_cut_size << "\n";
        if (opt.emit_cut) {
            std::cout << "cut";
            for (int v = 0; v < model.n; ++v)
                if (result.cut->in_s(v)) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_recognize(const std::string& input) {
    using namespace bubblecut;
    Graph g = parse_edge_list(read_file(input));
    auto maybe = build_bubble_model(g);
    if (!maybe) {
        std::cerr << "not a proper interval graph\n";
        return kNotProperInterval;
    }
    std::cout << model_to_json(*maybe) << "\n";
    return kOk;
}

struct GenOptions {
    int n = 0;
    uint64_t seed = 0;
    int columns = 0;
    double empty_rate = 0.15;
    std::string format;
};

int run_gen(const GenOptions& opt) {
    using namespace bubblecut;
    GenParams params;
    params.columns = opt.columns;
    params.empty_rate = opt.empty_rate;
    BubbleModel m = random_model(opt.n, opt.seed, params);
    if (opt.format == "bubbles")
        std::cout << model_to_json(m) << "\n";
    else
        std::cout << serialize_edge_list(realize_graph(m));
    return kOk;
}

int run_verify(int trials, int max_n, uint64_t seed) {
    using namespace bubblecut;
    VerificationReport report = verify_dp(trials, max_n, seed);
    std::cout << report_to_json(report) << "\n";
    std::cerr << "verify: " << report.trials << " trials, "
              << report.mismatches.size() << " mismatches, "
              << report.elapsed_seconds << "s\n";
    return report.passed() ? kOk : kInternalError;
}

int run_bench(const std::vector<int>& sizes, uint64_t seed, bool json) {
    using namespace bubblecut;
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i - 1] >= sizes[i])
            throw parse_error("--sizes must be strictly ascending");
    BenchSweep sweep = bubblecut::run_bench(sizes, seed);
    if (json) {
        std::cout << sweep_to_json(sweep) << "\n";
    } else {
        for (const auto& rec : sweep.records)
            std::cout << "n=" << rec.n << " op_count=" << rec.op_count
                      << " bound=" << rec.bound << " time=" << rec.wall_time_seconds
                      << "s\n";
        if (sweep.fitted_exponent)
            std::cout << "fitted_exponent " << *sweep.fitted_exponent << "\n";
        else
            std::cout << "fitted_exponent n/a\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum cut for proper interval graphs via bubble models"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "compute the maximum cut size of one instance");
    solve->add_option("--input", solve_opt.input, "input file")->required();
    solve->add_option("--format", solve_opt.format, "input format")
        ->required()
        ->check(CLI::IsMember({"edges", "bubbles"}));
    solve->add_flag("--emit-cut", solve_opt.emit_cut, "also output one optimal cut");
    solve->add_flag("--json", solve_opt.json, "machine-readable output");

    std::string recognize_input;
    CLI::App* recognize =
        app.add_subcommand("recognize", "build a bubble model from an edge list");
    recognize->add_option("--input", recognize_input, "input file")->required();

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_opt.n, "vertex count")->required();
    gen->add_option("--seed", gen_opt.seed, "generator seed")->required();
    gen->add_option("--columns", gen_opt.columns, "column-count hint (0 = auto)");
    gen->add_option("--empty-rate", gen_opt.empty_rate, "empty-bubble rate");
    gen->add_option("--format", gen_opt.format, "output format")
        ->required()
        ->check(CLI::IsMember({"bubbles", "edges"}));

    int verify_trials = 1000;
    int verify_max_n = 12;
    uint64_t verify_seed = 42;
    CLI::App* verify =
        app.add_subcommand("verify", "cross-check the solver against the brute-force oracle");
    verify->add_option("--trials", verify_trials, "number of random instances");
    verify->add_option("--max-n", verify_max_n, "largest vertex count");
    verify->add_option("--seed", verify_seed, "master seed");

    std::vector<int> bench_sizes;
    uint64_t bench_seed = 0;
    bool bench_json = false;
    CLI::App* bench = app.add_subcommand("bench", "instrumented sweep over a dense family");
    bench->add_option("--sizes", bench_sizes, "comma-separated instance sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--seed", bench_seed, "generator seed")->required();
    bench->add_flag("--json", bench_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (recognize->parsed()) return run_recognize(recognize_input);
        if (gen->parsed()) return run_gen(gen_opt);
        if (verify->parsed()) return run_verify(verify_trials, verify_max_n, verify_seed);
        if (bench->parsed()) return run_bench(bench_sizes, bench_seed, bench_json);
    } catch (const bubblecut::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const bubblecut::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInputError;
}
