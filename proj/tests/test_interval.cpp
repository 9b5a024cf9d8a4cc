#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "stacking/generators.hpp"
#include "stacking/interval.hpp"

using namespace stacking;

namespace {

Interval iv(double s, double e) { return {0, s, e}; }

}  // namespace

TEST(Predicates, Overlaps) {
    EXPECT_TRUE(overlaps(iv(0, 2), iv(1, 3)));
    EXPECT_FALSE(overlaps(iv(0, 3), iv(1, 2)));
    EXPECT_FALSE(overlaps(iv(0, 1), iv(2, 3)));
}

TEST(Predicates, Contains) {
    EXPECT_TRUE(contains(iv(0, 3), iv(1, 2)));
    EXPECT_FALSE(contains(iv(1, 2), iv(0, 3)));
    EXPECT_FALSE(contains(iv(0, 2), iv(1, 3)));
}

TEST(Predicates, ExactlyOneRelationHolds) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 20000; ++k) {
        double p[4] = {u(rng), u(rng), u(rng), u(rng)};
        Interval a = iv(std::min(p[0], p[1]), std::max(p[0], p[1]));
        Interval b = iv(std::min(p[2], p[3]), std::max(p[2], p[3]));
        if (check_intervals(std::vector<Interval>{a, b}).size() > 0) continue;
        EXPECT_EQ(overlaps(a, b), overlaps(b, a));
        int held = int(overlaps(a, b)) + int(contains(a, b)) + int(contains(b, a)) + int(disjoint(a, b));
        ASSERT_EQ(held, 1);
    }
}

TEST(Validate, SortsByStartAndRenumbers) {
    auto inst = Instance::from_intervals({{0, 1, 2}, {1, 0, 3}});
    ASSERT_EQ(inst.size(), 2u);
    EXPECT_EQ(inst[0].start, 0);
    EXPECT_EQ(inst[0].end, 3);
    EXPECT_EQ(inst[1].start, 1);
    EXPECT_EQ(inst[0].id, 0u);
    EXPECT_EQ(inst[1].id, 1u);
}

TEST(Validate, DuplicateEndpointReported) {
    std::vector<Interval> raw = {{0, 0, 1}, {1, 1, 2}};
    auto v = check_intervals(raw);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, Violation::Kind::DuplicateEndpoint);
    EXPECT_EQ(v[0].value, 1.0);
    EXPECT_EQ(v[0].items, (std::vector<std::size_t>{0, 1}));
    EXPECT_THROW(Instance::from_intervals(raw), InvalidInstance);
}

TEST(Validate, StartNotBeforeEnd) {
    std::vector<Interval> raw = {{0, 2, 2}};
    auto v = check_intervals(raw);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, Violation::Kind::StartNotBeforeEnd);

    raw = {{0, 3, 1}};
    EXPECT_EQ(check_intervals(raw).at(0).kind, Violation::Kind::StartNotBeforeEnd);
}

TEST(Validate, ListsEveryViolation) {
    std::vector<Interval> raw = {{0, 0, 1}, {1, 5, 4}, {2, 1, 7}, {3, 8, std::nan("")}};
    auto v = check_intervals(raw);
    EXPECT_EQ(v.size(), 3u);  // duplicate 1, start >= end, non-finite
    try {
        Instance::from_intervals(raw);
        FAIL() << "expected InvalidInstance";
    } catch (const InvalidInstance& e) {
        EXPECT_EQ(e.violations().size(), 3u);
        EXPECT_NE(std::string(e.what()).find("duplicate endpoint 1"), std::string::npos);
    }
}

TEST(CliqueNumber, Examples) {
    auto three = make_instance({{0, 2}, {1, 3}, {1.5, 4}});
    EXPECT_EQ(oracle::clique_number(three), 3u);
    EXPECT_EQ(clique_number(three).omega_prime, 3u);
    EXPECT_EQ(oracle::count_containing(three, clique_number(three).witness_t), 3u);

    EXPECT_EQ(clique_number(make_instance({{0, 1}, {2, 3}, {4, 5}})).omega_prime, 1u);
    EXPECT_EQ(clique_number(make_instance({{0, 10}, {1, 9}, {2, 8}, {3, 7}})).omega_prime, 4u);
}

TEST(CliqueNumber, WitnessIsFirstMaximalRegion) {
    // depth 2 on (1,2) and again on (5,6); the first region wins
    auto inst = make_instance({{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    auto s = clique_number(inst);
    EXPECT_EQ(s.omega_prime, 2u);
    EXPECT_DOUBLE_EQ(s.witness_t, 1.5);
}

TEST(CliqueNumber, EmptyInstanceRejected) {
    EXPECT_THROW(clique_number(Instance{}), EmptyInput);
}

TEST(CliqueNumber, MatchesBruteForceUpToFifty) {
    const DistributionSpec specs[] = {UniformSquare{}, UniformMaxLen{0.2}, GaussianCL{},
                                      FixedLen{0.1}};
    for (std::size_t n = 1; n <= 50; ++n) {
        for (std::size_t s = 0; s < std::size(specs); ++s) {
            auto inst = generate(specs[s], n, 1000 * n + s);
            auto stats = clique_number(inst);
            ASSERT_EQ(stats.omega_prime, oracle::clique_number(inst)) << "n=" << n << " s=" << s;
            ASSERT_EQ(oracle::count_containing(inst, stats.witness_t), stats.omega_prime);
        }
    }
}

TEST(CliqueNumber, InvariantUnderIncreasingAffineMap) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = generate(UniformSquare{}, 40, seed);
        std::vector<Interval> mapped;
        for (const auto& it : inst) mapped.push_back({it.id, 3.0 * it.start - 7.0, 3.0 * it.end - 7.0});
        auto m = Instance::from_intervals(mapped);
        EXPECT_EQ(clique_number(m).omega_prime, clique_number(inst).omega_prime);
    }
}
