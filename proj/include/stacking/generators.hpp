#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stacking/interval.hpp"

namespace stacking {

// (a, b) uniform on the unit square, interval [min, max].
struct UniformSquare {};

// Uniform on {(a, b) in the unit square : |a - b| <= ell}.
struct UniformMaxLen {
    double ell = 1.0;
};

// Center ~ N(mu_c, sigma_c), length ~ N(mu_l, sigma_l) redrawn while <= 0.
struct GaussianCL {
    double mu_c = 0.0;
    double sigma_c = 1.0;
    double mu_l = 1.0;
    double sigma_l = 0.2;
};

// [u, u + length] with u uniform on [0, 1 - length]; no interval nests in another.
struct FixedLen {
    double length = 0.1;
};

using DistributionSpec = std::variant<UniformSquare, UniformMaxLen, GaussianCL, FixedLen>;

// Parses `usq`, `u:<ell>`, `g:<mu_c>:<sigma_c>:<mu_l>:<sigma_l>`, `fixed:<len>`.
// Throws std::invalid_argument on bad syntax or out-of-range parameters.
DistributionSpec parse_distribution(std::string_view text);
std::string to_string(const DistributionSpec& spec);
void validate(const DistributionSpec& spec);

// "uniform" for usq and u:*, "gaussian" for g:*, "fixed" for fixed:*.
std::string family(const DistributionSpec& spec);

// The eight distributions of the full sweep (`--suite paper`).
std::vector<DistributionSpec> sweep_presets();

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxConsecutiveRejections = 1'000'000;

// n i.i.d. windows sorted by start. Pair k of attempt r is drawn from its own
// stream SplitMix64(mix_seed(seed, k, r)), so redrawing one pair never shifts
// another. A pair colliding with an endpoint of a lower-indexed pair is
// redrawn with the next attempt number.
Instance generate(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace stacking
