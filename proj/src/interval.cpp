#include "stacking/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace stacking {

bool overlaps(const Interval& a, const Interval& b) {
    return (a.start < b.start && b.start < a.end && a.end < b.end) ||
           (b.start < a.start && a.start < b.end && b.end < a.end);
}

bool contains(const Interval& outer, const Interval& inner) {
    return outer.start < inner.start && inner.end < outer.end;
}

std::string Violation::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
    case Kind::StartNotBeforeEnd:
        os << "item " << items.at(0) << ": start >= end";
        break;
    case Kind::DuplicateEndpoint:
        os << "duplicate endpoint " << value << " (items";
        for (auto id : items) os << ' ' << id;
        os << ')';
        break;
    case Kind::NonFinite:
        os << "item " << items.at(0) << ": non-finite endpoint";
        break;
    }
    return os.str();
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
    std::string msg = "invalid instance:";
    for (const auto& v : violations) {
        msg += "\n  ";
        msg += v.describe();
    }
    return msg;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<Violation> check_intervals(std::span<const Interval> raw) {
    std::vector<Violation> out;

    struct Endpoint {
        double value;
        std::size_t item;
    };
    std::vector<Endpoint> endpoints;
    endpoints.reserve(2 * raw.size());

    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& iv = raw[i];
        if (!std::isfinite(iv.start) || !std::isfinite(iv.end)) {
            out.push_back({Violation::Kind::NonFinite, {i}, 0.0});
            continue;
        }
        if (!(iv.start < iv.end)) {
            out.push_back({Violation::Kind::StartNotBeforeEnd, {i}, iv.start});
        }
        endpoints.push_back({iv.start, i});
        endpoints.push_back({iv.end, i});
    }

    std::sort(endpoints.begin(), endpoints.end(), [](const Endpoint& a, const Endpoint& b) {
        return a.value < b.value || (a.value == b.value && a.item < b.item);
    });
    for (std::size_t k = 0; k < endpoints.size();) {
        std::size_t run = k + 1;
        while (run < endpoints.size() && endpoints[run].value == endpoints[k].value) ++run;
        if (run - k > 1) {
            Violation v{Violation::Kind::DuplicateEndpoint, {}, endpoints[k].value};
            for (std::size_t r = k; r < run; ++r) {
                if (v.items.empty() || v.items.back() != endpoints[r].item) {
                    v.items.push_back(endpoints[r].item);
                }
            }
            // a degenerate [t,t] is already reported as start >= end
            if (v.items.size() > 1) out.push_back(std::move(v));
        }
        k = run;
    }
    return out;
}

Instance Instance::from_intervals(std::vector<Interval> raw) {
    auto violations = check_intervals(raw);
    if (!violations.empty()) throw InvalidInstance(std::move(violations));

    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i].id = i;
    return Instance(std::move(raw));
}

Instance make_instance(std::initializer_list<std::pair<double, double>> windows) {
    std::vector<Interval> raw;
    raw.reserve(windows.size());
    for (const auto& [s, e] : windows) raw.push_back({raw.size(), s, e});
    return Instance::from_intervals(std::move(raw));
}

InstanceStats clique_number(const Instance& inst) {
    if (inst.empty()) throw EmptyInput("clique_number: empty instance");

    // +1 at a start, -1 at an end; endpoints are distinct so no tie handling
    std::vector<std::pair<double, int>> events;
    events.reserve(2 * inst.size());
    for (const auto& iv : inst) {
        events.emplace_back(iv.start, +1);
        events.emplace_back(iv.end, -1);
    }
    std::sort(events.begin(), events.end());

    InstanceStats stats;
    std::size_t depth = 0;
    for (std::size_t k = 0; k + 1 < events.size(); ++k) {
        if (events[k].second > 0) {
            ++depth;
            if (depth > stats.omega_prime) {
                stats.omega_prime = depth;
                stats.witness_t = 0.5 * (events[k].first + events[k + 1].first);
            }
        } else {
            --depth;
        }
    }
    return stats;
}

}  // namespace stacking
