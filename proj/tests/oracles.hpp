#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code with the library paths they check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "stacking/interval.hpp"
#include "stacking/solver.hpp"

namespace oracle {

// Midpoints between consecutive sorted endpoints: containment counts are
// constant on each open gap, so these points see every distinct count.
inline std::vector<double> gap_midpoints(const stacking::Instance& inst) {
    std::vector<double> pts;
    for (const auto& iv : inst) {
        pts.push_back(iv.start);
        pts.push_back(iv.end);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> mids;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) mids.push_back(0.5 * (pts[k] + pts[k + 1]));
    return mids;
}

inline std::size_t count_containing(const stacking::Instance& inst, double t) {
    std::size_t n = 0;
    for (const auto& iv : inst) n += (iv.start < t && t < iv.end) ? 1 : 0;
    return n;
}

inline std::size_t clique_number(const stacking::Instance& inst) {
    std::size_t best = 0;
    for (double t : gap_midpoints(inst)) best = std::max(best, count_containing(inst, t));
    return best;
}

// Both h-overlap-coloring conditions by pairwise and pointwise scan.
inline bool valid_coloring(const stacking::Instance& inst, std::size_t h,
                           const std::vector<stacking::Color>& color) {
    if (color.size() != inst.size()) return false;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.size(); ++j) {
            const auto &a = inst[i], &b = inst[j];
            bool cross = (a.start < b.start && b.start < a.end && a.end < b.end) ||
                         (b.start < a.start && a.start < b.end && b.end < a.end);
            if (cross && color[i] == color[j]) return false;
        }
    }
    for (double t : gap_midpoints(inst)) {
        std::vector<std::size_t> per_color;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (!(inst[i].start < t && t < inst[i].end)) continue;
            if (per_color.size() <= color[i]) per_color.resize(color[i] + 1, 0);
            if (++per_color[color[i]] > h) return false;
        }
    }
    return true;
}

// Longest increasing subsequence by enumerating all 2^n subsequences.
inline std::size_t lis_by_subsets(const std::vector<double>& seq) {
    std::size_t best = 0;
    const std::size_t n = seq.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        double last = 0;
        bool first = true, increasing = true;
        std::size_t len = 0;
        for (std::size_t i = 0; i < n && increasing; ++i) {
            if (!(mask >> i & 1)) continue;
            if (!first && !(last < seq[i])) increasing = false;
            last = seq[i];
            first = false;
            ++len;
        }
        if (increasing) best = std::max(best, len);
    }
    return best;
}

// Minimum colors over every restricted-growth color assignment. Tiny n only.
inline std::size_t chi_by_enumeration(const stacking::Instance& inst, std::size_t h) {
    const std::size_t n = inst.size();
    if (n == 0) return 0;
    std::size_t best = n;
    std::vector<stacking::Color> color(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (used >= best) return;
        if (i == n) {
            if (valid_coloring(inst, h, color)) best = used;
            return;
        }
        for (std::size_t c = 1; c <= used + 1; ++c) {
            color[i] = static_cast<stacking::Color>(c);
            rec(i + 1, std::max(used, c));
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace oracle
