#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "stacking/interval.hpp"

namespace stacking {

using Color = std::uint32_t;  // stack id, 1-based

// Stack assignment: color_of[i] is the color of instance item i.
struct Coloring {
    std::vector<Color> color_of;
    std::size_t num_colors = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

class OutOfOrderArrival : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DuplicateEndpoint : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::size_t require_capacity(std::size_t h);

// Online stacking state. Items must be pushed in increasing start order; each
// push decides a color from the items seen so far.
//
// Chains are patience piles over end values: the new item goes on the chain
// whose top contains it with the smallest end, else starts a chain. A chain's
// current block keeps its color until it holds h items; the next item on the
// chain becomes a block bottom and takes the expired color with the earliest
// expiry, or a fresh one.
class OnlineSolver {
public:
    explicit OnlineSolver(std::size_t capacity);

    Color push(double start, double end);
    Color push(const Interval& item) { return push(item.start, item.end); }

    std::size_t capacity() const { return capacity_; }
    std::size_t num_colors() const { return chi_; }
    std::size_t num_chains() const { return top_ends_.size(); }
    std::size_t num_items() const { return num_items_; }

    // Read-only view for invariant checks.
    struct ChainView {
        double top_end;
        Color color;
        std::size_t block_size;
    };
    std::vector<ChainView> chains() const;

private:
    friend Coloring solve_online(const Instance&, std::size_t);

    struct Expiry {
        double end;
        Color color;
        bool operator>(const Expiry& o) const { return end > o.end; }
    };
    struct ChainState {
        Color color;
        std::size_t block_size;
    };

    Color place(double start, double end);

    std::size_t capacity_;
    std::vector<double> top_ends_;   // strictly increasing
    std::vector<ChainState> chain_;  // parallel to top_ends_
    std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiry_;
    Color chi_ = 0;
    std::size_t num_items_ = 0;
    double last_start_ = 0.0;
    bool check_endpoints_ = true;
    std::unordered_set<double> seen_;
};

Coloring solve_online(const Instance& inst, std::size_t h);

// Offline twin: min chain partition, split chains into blocks of h from the
// bottom, greedily color block bottoms in start order reusing the color with
// the earliest expiry, propagate bottom colors to their blocks.
Coloring solve_offline(const Instance& inst, std::size_t h);

struct ColoringViolation {
    enum class Kind {
        Coverage,  // wrong length, color 0, out of range or unused color
        Overlap,   // two overlapping intervals share a color
        Capacity,  // more than h same-colored intervals contain a point
    };
    Kind kind;
    std::vector<std::size_t> items;
    double point = 0.0;  // Capacity only

    std::string describe() const;
};

// Per-color sweep: same-colored intervals must form a laminar family (any
// crossing is an overlap) whose nesting depth never exceeds h.
std::vector<ColoringViolation> validate_coloring(const Instance& inst, std::size_t h,
                                                 const Coloring& col);

struct BoundReport {
    std::size_t c = 0;
    std::size_t omega_prime = 0;
    std::size_t chi_prime_h = 0;
    std::size_t lower_bound = 0;  // ceil(omega_prime / h)
    double lemma2_rhs = 0.0;      // omega_prime / h + c
    double ratio_ub = 0.0;        // chi_prime_h * h / omega_prime
};

BoundReport bound_report(const Instance& inst, std::size_t h, const Coloring& col);

}  // namespace stacking
