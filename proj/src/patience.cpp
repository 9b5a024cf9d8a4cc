#include "stacking/patience.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "stacking/rng.hpp"

namespace stacking {

namespace {

void require_distinct(std::span<const double> values, const char* who) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw DuplicateValue(std::string(who) + ": duplicate value " + std::to_string(*dup));
    }
}

// Pile count only; tops is the scratch buffer of current pile tops.
template <class Value>
std::size_t count_piles(std::span<const Value> deck, std::vector<Value>& tops) {
    tops.clear();
    for (const auto& v : deck) {
        auto it = std::upper_bound(tops.begin(), tops.end(), v);
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            *it = v;
        }
    }
    return tops.size();
}

}  // namespace

std::vector<double> PileSet::tops() const {
    std::vector<double> out;
    out.reserve(piles.size());
    for (const auto& p : piles) out.push_back(p.back());
    return out;
}

std::vector<std::size_t> assign_piles(std::span<const double> deck) {
    require_distinct(deck, "assign_piles");
    std::vector<double> tops;
    std::vector<std::size_t> pile_of(deck.size());
    for (std::size_t i = 0; i < deck.size(); ++i) {
        auto it = std::upper_bound(tops.begin(), tops.end(), deck[i]);
        pile_of[i] = static_cast<std::size_t>(it - tops.begin());
        if (it == tops.end()) {
            tops.push_back(deck[i]);
        } else {
            *it = deck[i];
        }
    }
    return pile_of;
}

PileSet patience_sort(std::span<const double> deck) {
    auto pile_of = assign_piles(deck);
    PileSet out;
    for (std::size_t i = 0; i < deck.size(); ++i) {
        if (pile_of[i] == out.piles.size()) out.piles.emplace_back();
        out.piles[pile_of[i]].push_back(deck[i]);
    }
    return out;
}

std::size_t lis_length(std::span<const double> seq) {
    require_distinct(seq, "lis_length");
    // best[i] = longest increasing subsequence ending at seq[i]
    std::vector<std::size_t> best(seq.size(), 1);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (seq[j] < seq[i] && best[j] + 1 > best[i]) best[i] = best[j] + 1;
        }
        longest = std::max(longest, best[i]);
    }
    return longest;
}

ChainSet min_chain_partition(const Instance& inst) {
    std::vector<double> ends;
    ends.reserve(inst.size());
    for (const auto& iv : inst) ends.push_back(iv.end);

    auto pile_of = assign_piles(ends);
    ChainSet out;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (pile_of[i] == out.chains.size()) out.chains.emplace_back();
        out.chains[pile_of[i]].push_back(inst[i]);
    }
    return out;
}

std::size_t min_chain_count(const Instance& inst) {
    std::vector<double> ends;
    ends.reserve(inst.size());
    for (const auto& iv : inst) ends.push_back(iv.end);
    std::vector<double> tops;
    return count_piles<double>(ends, tops);
}

LnStats ln_statistics(std::size_t n, std::size_t trials, std::uint64_t seed) {
    if (n == 0 || trials == 0) throw std::invalid_argument("ln_statistics: n and trials must be >= 1");

    std::vector<std::uint32_t> perm(n);
    std::vector<std::uint32_t> tops;
    tops.reserve(n);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::iota(perm.begin(), perm.end(), 1u);
        SplitMix64 rng(mix_seed(seed, t));
        // Fisher-Yates, high to low
        for (std::size_t i = n - 1; i > 0; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i);
            std::swap(perm[i], perm[pick(rng)]);
        }
        auto piles = static_cast<double>(count_piles<std::uint32_t>(perm, tops));
        sum += piles;
        sum_sq += piles * piles;
    }

    LnStats stats;
    stats.n = n;
    stats.trials = trials;
    stats.seed = seed;
    stats.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sum_sq - sum * stats.mean) / static_cast<double>(trials - 1);
        stats.std = std::sqrt(std::max(0.0, var));
    }
    return stats;
}

}  // namespace stacking
