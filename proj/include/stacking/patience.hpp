#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "stacking/interval.hpp"

namespace stacking {

class DuplicateValue : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Piles after Patience Sorting. Each pile is stored bottom-to-top and is
// strictly decreasing; tops() is strictly increasing left to right.
struct PileSet {
    std::vector<std::vector<double>> piles;

    std::size_t size() const { return piles.size(); }
    std::vector<double> tops() const;
};

// Pile index (0-based, left to right) each value lands on when dealt front to
// back: a value goes on the leftmost pile whose top is larger, else opens a
// new pile on the right. Values must be distinct.
std::vector<std::size_t> assign_piles(std::span<const double> deck);

PileSet patience_sort(std::span<const double> deck);

// Quadratic dynamic program, kept separate from the pile code on purpose so
// the two can be checked against each other.
std::size_t lis_length(std::span<const double> seq);

struct ChainSet {
    // chains[k] lists intervals bottom-to-top; each strictly contains the next
    std::vector<std::vector<Interval>> chains;

    std::size_t size() const { return chains.size(); }
};

// Minimum chain partition: patience sort the end values taken in start order.
ChainSet min_chain_partition(const Instance& inst);

// Same count as min_chain_partition(inst).size() without building the chains.
std::size_t min_chain_count(const Instance& inst);

struct LnStats {
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation (n - 1 denominator)
    std::uint64_t seed = 0;
};

// Pile-count statistics over uniform random permutations of 1..n. Trial t
// shuffles with SplitMix64(mix_seed(seed, t)) so trials are independent.
LnStats ln_statistics(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace stacking
