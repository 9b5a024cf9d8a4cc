#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stacking/generators.hpp"
#include "stacking/interval.hpp"

namespace stacking {

struct ExperimentRow {
    std::string dist;
    std::size_t n = 0;
    std::size_t h = 0;
    std::uint64_t seed = 0;
    std::size_t c = 0;
    std::size_t omega_prime = 0;
    std::size_t chi_prime = 0;
    std::size_t lower_bound = 0;
    double c_over_sqrt_n = 0.0;
    double err_sqrt_n = 0.0;  // (chi_prime * h / omega_prime - 1) * sqrt(n)
    double ratio_ub = 0.0;    // chi_prime * h / omega_prime
    double solve_micros = 0.0;
    std::string error;        // empty on success

    bool ok() const { return error.empty(); }
};

// Solves one instance online and fills every column. The upper bound
// (chi_prime <= omega_prime / h + c) and coloring validity are re-checked and
// reported through `error`.
ExperimentRow measure_instance(const Instance& inst, std::size_t h, std::string dist,
                               std::uint64_t seed);

// Generates, then measures. Generation failures land in `error`.
ExperimentRow run_point(const DistributionSpec& spec, std::size_t n, std::size_t h,
                        std::uint64_t seed);

struct SweepConfig {
    std::vector<DistributionSpec> distributions;
    std::vector<std::size_t> n_values;  // nonempty, ascending
    std::size_t h = 5;
    std::uint64_t base_seed = 1;
    std::size_t instances_per_point = 1;

    void validate() const;  // throws std::invalid_argument
};

// paper: eight published presets, h = 5, n = 2000, 4000, ..., 200000.
// smoke: u:0.3 and g:0:1:1:0.2, n in {2000, 10000, 50000}.
SweepConfig suite_config(std::string_view name);

std::uint64_t point_seed(std::uint64_t base_seed, std::size_t dist_index, std::size_t n,
                         std::size_t repeat);

// Rows in configuration order (distribution, n, repeat), regardless of workers.
std::vector<ExperimentRow> run_sweep(const SweepConfig& config, std::size_t workers = 1);

inline constexpr std::string_view kCsvHeader =
    "dist,n,h,seed,c,omega_prime,chi_prime,lower_bound,c_over_sqrt_n,err_sqrt_n,ratio_ub,"
    "solve_micros,error";

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ExperimentRow& row);
void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows);

// Three scatter charts per distribution family (c/sqrt(n), err_sqrt_n and
// ratio_ub against n), written as `<prefix>_<family>_<metric>.svg`. Returns
// the written paths.
std::vector<std::filesystem::path> write_plots(const std::vector<ExperimentRow>& rows,
                                               const std::filesystem::path& prefix);

}  // namespace stacking
