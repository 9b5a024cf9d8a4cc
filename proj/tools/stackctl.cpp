// stackctl: generate, solve and sweep online stacking instances.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stacking/stacking.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int report(stk_status status, const std::string& context) {
    std::cerr << "stackctl: " << context << ": " << stk_status_name(status) << "\n"
              << stk_last_error() << "\n";
    return status == STK_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
}

struct InstanceHandle {
    stk_instance* ptr = nullptr;
    ~InstanceHandle() { stk_instance_destroy(ptr); }
};

struct ColoringHandle {
    stk_coloring* ptr = nullptr;
    ~ColoringHandle() { stk_coloring_destroy(ptr); }
};

// Shared "where does the instance come from" options.
struct Source {
    std::string path;
    std::string dist;
    std::size_t n = 0;
    std::uint64_t seed = 1;

    int load(InstanceHandle& out) const {
        if (!path.empty()) {
            if (auto s = stk_instance_read_file(path.c_str(), &out.ptr); s != STK_OK) {
                return report(s, "reading '" + path + "'");
            }
            return kExitOk;
        }
        if (dist.empty() || n == 0) {
            std::cerr << "stackctl: give an instance file or --dist with --n >= 1\n";
            return kExitUsage;
        }
        if (auto s = stk_instance_generate(dist.c_str(), n, seed, &out.ptr); s != STK_OK) {
            return report(s, "generating " + dist);
        }
        return kExitOk;
    }
};

int cmd_generate(const std::string& dist, std::size_t n, std::uint64_t seed,
                 const std::string& out_path) {
    if (dist.empty()) {
        std::cerr << "stackctl generate: a distribution is required (e.g. u:0.3)\n";
        return kExitUsage;
    }
    if (n == 0) {
        std::cerr << "stackctl generate: --n must be >= 1\n";
        return kExitUsage;
    }
    InstanceHandle inst;
    if (auto s = stk_instance_generate(dist.c_str(), n, seed, &inst.ptr); s != STK_OK) {
        return report(s, "generating " + dist);
    }
    if (!out_path.empty()) {
        if (auto s = stk_instance_write_file(inst.ptr, out_path.c_str()); s != STK_OK) {
            return report(s, "writing '" + out_path + "'");
        }
        return kExitOk;
    }
    std::size_t needed = 0;
    stk_instance_to_text(inst.ptr, nullptr, 0, &needed);
    std::string text(needed, '\0');
    if (auto s = stk_instance_to_text(inst.ptr, text.data(), text.size(), &needed); s != STK_OK) {
        return report(s, "formatting instance");
    }
    text.pop_back();
    std::cout << text;
    return kExitOk;
}

int cmd_solve(const std::string& path, std::size_t h) {
    InstanceHandle inst;
    if (auto s = stk_instance_read_file(path.c_str(), &inst.ptr); s != STK_OK) {
        return report(s, "reading '" + path + "'");
    }
    stk_experiment_row row{};
    if (auto s = stk_measure_instance(inst.ptr, h, "file", 0, &row); s != STK_OK) {
        return report(s, "solving");
    }
    std::size_t needed = 0;
    stk_experiment_row_csv(&row, nullptr, 0, &needed);
    std::string text(needed, '\0');
    stk_experiment_row_csv(&row, text.data(), text.size(), &needed);
    text.pop_back();
    std::cout << text;
    if (row.error[0] != '\0') {
        std::cerr << "stackctl solve: " << row.error << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct ExperimentArgs {
    std::string suite;
    std::vector<std::string> dists;
    std::vector<std::size_t> n_values;
    std::optional<std::size_t> h;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool plots = false;
    std::size_t workers = 0;
};

int cmd_experiment(const ExperimentArgs& args) {
    stk_sweep_config cfg{};
    std::vector<const char*> dist_ptrs;
    if (!args.suite.empty()) {
        if (auto s = stk_suite_config(args.suite.c_str(), &cfg); s != STK_OK) {
            return report(s, "suite");
        }
    } else {
        cfg.h = 5;
        cfg.base_seed = 1;
        cfg.instances_per_point = 1;
    }
    if (!args.dists.empty()) {
        for (const auto& d : args.dists) dist_ptrs.push_back(d.c_str());
        cfg.distributions = dist_ptrs.data();
        cfg.num_distributions = dist_ptrs.size();
    }
    if (!args.n_values.empty()) {
        cfg.n_values = args.n_values.data();
        cfg.num_n_values = args.n_values.size();
    }
    if (args.h) cfg.h = *args.h;
    if (args.seed) cfg.base_seed = *args.seed;
    if (cfg.num_distributions == 0) {
        std::cerr << "stackctl experiment: no distributions (use --suite or --dist)\n";
        return kExitUsage;
    }
    if (cfg.num_n_values == 0) {
        std::cerr << "stackctl experiment: no n values (use --suite or --n)\n";
        return kExitUsage;
    }

    std::size_t workers = args.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    std::string prefix;
    if (args.plots) {
        std::filesystem::path p = args.out.empty() ? "experiment" : args.out;
        prefix = p.replace_extension().string();
    }
    std::size_t failed = 0;
    auto s = stk_run_sweep(&cfg, workers, args.out.empty() ? nullptr : args.out.c_str(),
                           args.plots ? prefix.c_str() : nullptr, &failed);
    if (s != STK_OK) return report(s, "experiment");
    if (failed > 0) {
        std::cerr << "stackctl experiment: " << failed << " row(s) failed; see the error column\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_oracle(const Source& src, std::size_t h, std::size_t limit) {
    InstanceHandle inst;
    if (int rc = src.load(inst); rc != kExitOk) return rc;

    ColoringHandle exact, online;
    std::uint64_t nodes = 0;
    if (auto s = stk_solve_exact(inst.ptr, h, limit, &exact.ptr, &nodes); s != STK_OK) {
        return report(s, "oracle");
    }
    if (auto s = stk_solve_online(inst.ptr, h, &online.ptr); s != STK_OK) {
        return report(s, "online solve");
    }
    std::size_t omega = 0;
    stk_clique_number(inst.ptr, &omega, nullptr);

    std::cout << "n=" << stk_instance_size(inst.ptr) << " h=" << h << " omega_prime=" << omega
              << " lower_bound=" << (omega + h - 1) / h
              << " chi_exact=" << stk_coloring_num_colors(exact.ptr)
              << " chi_online=" << stk_coloring_num_colors(online.ptr) << " nodes=" << nodes
              << "\nwitness:";
    for (std::size_t i = 0; i < stk_coloring_size(exact.ptr); ++i) {
        std::cout << ' ' << stk_coloring_color(exact.ptr, i);
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& level, std::uint64_t seed) {
    int passed = 0;
    auto print = [](const char* line, void*) { std::cout << line << "\n" << std::flush; };
    if (auto s = stk_verify(level.c_str(), seed, print, nullptr, &passed); s != STK_OK) {
        return report(s, "verify");
    }
    std::cout << (passed ? "verify: all suites passed" : "verify: FAILED") << "\n";
    return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online stacking: instance generation, solving and experiment sweeps"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");

    // generate
    auto* gen = app.add_subcommand("generate", "write a random instance");
    std::string gen_dist, gen_out;
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    gen->add_option("dist,--dist", gen_dist,
                    "distribution: usq | u:<ell> | g:<mc>:<sc>:<ml>:<sl> | fixed:<len>");
    gen->add_option("--n", gen_n, "number of intervals")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance file online and print its row");
    std::string solve_in;
    std::size_t solve_h = 5;
    solve->add_option("input", solve_in, "instance file")->required();
    solve->add_option("--h", solve_h, "stack capacity")->check(CLI::PositiveNumber);

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a sweep and write CSV (and SVG plots)");
    ExperimentArgs exp_args;
    exp->add_option("--suite", exp_args.suite, "preset sweep")
        ->check(CLI::IsMember({"paper", "smoke"}));
    exp->add_option("--dist", exp_args.dists, "distribution (repeatable)");
    exp->add_option("--n", exp_args.n_values, "instance sizes, ascending (repeatable)");
    exp->add_option("--h", exp_args.h, "stack capacity")->check(CLI::PositiveNumber);
    exp->add_option("--seed", exp_args.seed, "base seed");
    exp->add_option("--out", exp_args.out, "CSV path (default: stdout)");
    exp->add_flag("--plots", exp_args.plots, "write SVG scatter plots next to the CSV");
    exp->add_option("--workers", exp_args.workers, "parallel jobs (default: hardware threads)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact optimum of a small instance");
    Source oracle_src;
    std::size_t oracle_h = 2, oracle_limit = 14;
    oracle->add_option("input", oracle_src.path, "instance file");
    oracle->add_option("--dist", oracle_src.dist, "generate instead of reading a file");
    oracle->add_option("--n", oracle_src.n, "size for --dist");
    oracle->add_option("--seed", oracle_src.seed, "seed for --dist");
    oracle->add_option("--h", oracle_h, "stack capacity")->check(CLI::PositiveNumber);
    oracle->add_option("--limit", oracle_limit, "refuse instances larger than this");

    // verify
    auto* verify = app.add_subcommand("verify", "run the self-check suites");
    std::string verify_level = "quick";
    std::uint64_t verify_seed = 1;
    verify->add_option("--level", verify_level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", verify_seed, "suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*gen) return cmd_generate(gen_dist, gen_n, gen_seed, gen_out);
    if (*solve) return cmd_solve(solve_in, solve_h);
    if (*exp) return cmd_experiment(exp_args);
    if (*oracle) return cmd_oracle(oracle_src, oracle_h, oracle_limit);
    if (*verify) return cmd_verify(verify_level, verify_seed);
    return kExitUsage;
}
