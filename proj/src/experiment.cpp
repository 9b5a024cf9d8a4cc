#include "stacking/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "stacking/instance_io.hpp"
#include "stacking/patience.hpp"
#include "stacking/rng.hpp"
#include "stacking/solver.hpp"

namespace stacking {

ExperimentRow measure_instance(const Instance& inst, std::size_t h, std::string dist,
                               std::uint64_t seed) {
    ExperimentRow row;
    row.dist = std::move(dist);
    row.n = inst.size();
    row.h = h;
    row.seed = seed;
    try {
        require_capacity(h);
        auto t0 = std::chrono::steady_clock::now();
        auto col = solve_online(inst, h);
        auto t1 = std::chrono::steady_clock::now();
        row.solve_micros = std::chrono::duration<double, std::micro>(t1 - t0).count();

        auto report = bound_report(inst, h, col);
        row.c = report.c;
        row.omega_prime = report.omega_prime;
        row.chi_prime = report.chi_prime_h;
        row.lower_bound = report.lower_bound;
        double sqrt_n = std::sqrt(static_cast<double>(row.n));
        row.c_over_sqrt_n = static_cast<double>(row.c) / sqrt_n;
        row.ratio_ub = report.ratio_ub;
        row.err_sqrt_n = (report.ratio_ub - 1.0) * sqrt_n;

        if (static_cast<double>(row.chi_prime) > report.lemma2_rhs) {
            row.error = "chi_prime exceeds omega_prime/h + c";
        } else if (auto bad = validate_coloring(inst, h, col); !bad.empty()) {
            row.error = "invalid coloring: " + bad.front().describe();
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

ExperimentRow run_point(const DistributionSpec& spec, std::size_t n, std::size_t h,
                        std::uint64_t seed) {
    try {
        return measure_instance(generate(spec, n, seed), h, to_string(spec), seed);
    } catch (const std::exception& e) {
        ExperimentRow row;
        row.dist = to_string(spec);
        row.n = n;
        row.h = h;
        row.seed = seed;
        row.error = e.what();
        return row;
    }
}

void SweepConfig::validate() const {
    if (distributions.empty()) throw std::invalid_argument("sweep: no distributions");
    if (n_values.empty()) throw std::invalid_argument("sweep: no n values");
    if (!std::is_sorted(n_values.begin(), n_values.end()) || n_values.front() == 0) {
        throw std::invalid_argument("sweep: n values must be positive and ascending");
    }
    if (h == 0) throw std::invalid_argument("sweep: h must be >= 1");
    if (instances_per_point == 0) throw std::invalid_argument("sweep: instances per point must be >= 1");
    for (const auto& d : distributions) stacking::validate(d);
}

SweepConfig suite_config(std::string_view name) {
    SweepConfig cfg;
    cfg.h = 5;
    if (name == "paper") {
        cfg.distributions = sweep_presets();
        for (std::size_t n = 2000; n <= 200000; n += 2000) cfg.n_values.push_back(n);
    } else if (name == "smoke") {
        cfg.distributions = {UniformMaxLen{0.3}, GaussianCL{0.0, 1.0, 1.0, 0.2}};
        cfg.n_values = {2000, 10000, 50000};
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "' (paper|smoke)");
    }
    return cfg;
}

std::uint64_t point_seed(std::uint64_t base_seed, std::size_t dist_index, std::size_t n,
                         std::size_t repeat) {
    return mix_seed(base_seed, dist_index, n, repeat);
}

std::vector<ExperimentRow> run_sweep(const SweepConfig& config, std::size_t workers) {
    config.validate();

    struct Job {
        std::size_t dist;
        std::size_t n;
        std::size_t repeat;
    };
    std::vector<Job> jobs;
    for (std::size_t d = 0; d < config.distributions.size(); ++d) {
        for (auto n : config.n_values) {
            for (std::size_t r = 0; r < config.instances_per_point; ++r) jobs.push_back({d, n, r});
        }
    }

    std::vector<ExperimentRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            const auto& job = jobs[j];
            rows[j] = run_point(config.distributions[job.dist], job.n, config.h,
                                point_seed(config.base_seed, job.dist, job.n, job.repeat));
        }
    };

    workers = std::clamp<std::size_t>(workers, 1, jobs.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const ExperimentRow& r) {
    os << csv_field(r.dist) << ',' << r.n << ',' << r.h << ',' << r.seed << ',' << r.c << ','
       << r.omega_prime << ',' << r.chi_prime << ',' << r.lower_bound << ','
       << format_double(r.c_over_sqrt_n) << ',' << format_double(r.err_sqrt_n) << ','
       << format_double(r.ratio_ub) << ',' << format_double(r.solve_micros) << ','
       << csv_field(r.error) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows) {
    write_csv_header(os);
    for (const auto& r : rows) write_csv_row(os, r);
}

}  // namespace stacking
