#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacking {

// Storage window of one item: arrives at `start`, departs at `end`.
struct Interval {
    std::size_t id = 0;
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Crossing without nesting: a.start < b.start < a.end < b.end or the mirror.
bool overlaps(const Interval& a, const Interval& b);

// Strict nesting: outer.start < inner.start and inner.end < outer.end.
bool contains(const Interval& outer, const Interval& inner);

inline bool disjoint(const Interval& a, const Interval& b) {
    return a.end < b.start || b.end < a.start;
}

struct Violation {
    enum class Kind { StartNotBeforeEnd, DuplicateEndpoint, NonFinite };
    Kind kind;
    std::vector<std::size_t> items;  // indices into the raw input
    double value = 0.0;

    std::string describe() const;
};

class InvalidInstance : public std::runtime_error {
public:
    explicit InvalidInstance(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Intervals with pairwise distinct endpoints, ordered by strictly increasing
// start. Item ids are rewritten to the arrival position, so items()[i].id == i.
class Instance {
public:
    Instance() = default;

    // Sorts and validates; throws InvalidInstance listing every violation.
    static Instance from_intervals(std::vector<Interval> raw);

    std::span<const Interval> items() const { return items_; }
    const Interval& operator[](std::size_t i) const { return items_[i]; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    auto begin() const { return items_.cbegin(); }
    auto end() const { return items_.cend(); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    explicit Instance(std::vector<Interval> sorted) : items_(std::move(sorted)) {}
    std::vector<Interval> items_;
};

// Every violation in raw input order; empty when from_intervals would succeed.
std::vector<Violation> check_intervals(std::span<const Interval> raw);

// Convenience constructor from (start, end) pairs in the given order.
Instance make_instance(std::initializer_list<std::pair<double, double>> windows);

struct InstanceStats {
    std::size_t omega_prime = 0;  // max number of intervals sharing a point
    double witness_t = 0.0;       // midpoint of the first region attaining it
};

// Sweep over the 2n sorted endpoints. Throws EmptyInput on an empty instance.
InstanceStats clique_number(const Instance& inst);

}  // namespace stacking
