#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stacking/interval.hpp"
#include "stacking/solver.hpp"

namespace stacking {

// Self-check suites over randomized and exhaustive inputs. Each failure
// carries a reproducer (distribution, n, seed, h).

enum class VerifyLevel { Quick, Full };

using SolveFn = std::function<Coloring(const Instance&, std::size_t)>;

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Quick;
    std::uint64_t seed = 1;
    std::size_t max_counterexamples = 5;
    SolveFn online = solve_online;
    SolveFn offline = solve_offline;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;  // first max_counterexamples

    bool passed() const { return failures == 0 && cases > 0; }
};

// Pile count equals the quadratic LIS on every permutation up to length 7
// (8 at full level) and on random real sequences.
SuiteResult verify_lis_equality(const VerifyOptions& opts);

// Online and offline colorings agree item for item.
SuiteResult verify_online_offline(const VerifyOptions& opts);

// Each prefix of an instance gets the same colors as in the full run.
SuiteResult verify_prefix_property(const VerifyOptions& opts);

// Valid coloring, chi' <= omega'/h + c, chi' <= omega', chi'_1 == omega'.
SuiteResult verify_bounds(const VerifyOptions& opts);

// ceil(omega'/h) <= chi_exact <= chi' on small instances, h in {1, 2, 3}.
SuiteResult verify_oracle_sandwich(const VerifyOptions& opts);

// Mean pile count of random permutations stays at or below 2 sqrt(n).
SuiteResult verify_ln_mean(const VerifyOptions& opts);

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

}  // namespace stacking
