#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "stacking/interval.hpp"
#include "stacking/solver.hpp"

namespace stacking {

class LimitExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExactResult {
    std::size_t chi_h = 0;
    Coloring witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultExactLimit = 14;

// Optimal stack count by branch and bound; exponential, small instances only.
// Throws LimitExceeded when inst.size() > limit.
ExactResult chi_exact(const Instance& inst, std::size_t h, std::size_t limit = kDefaultExactLimit);

}  // namespace stacking
