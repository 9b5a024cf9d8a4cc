#include <gtest/gtest.h>

#include <cmath>

#include "stacking/generators.hpp"
#include "stacking/patience.hpp"

using namespace stacking;

TEST(Generate, DeterministicPerSeed) {
    for (auto spec : sweep_presets()) {
        EXPECT_EQ(generate(spec, 1000, 9), generate(spec, 1000, 9)) << to_string(spec);
        EXPECT_NE(generate(spec, 1000, 9), generate(spec, 1000, 10)) << to_string(spec);
    }
}

TEST(Generate, ZeroItemsRejected) {
    EXPECT_THROW(generate(UniformSquare{}, 0, 1), std::invalid_argument);
}

TEST(Generate, FullWidthUniformEqualsSquare) {
    EXPECT_EQ(generate(UniformMaxLen{1.0}, 2000, 3), generate(UniformSquare{}, 2000, 3));
}

TEST(Generate, SquareMeanLengthIsOneThird) {
    auto inst = generate(UniformSquare{}, 100000, 12);
    double total = 0;
    for (const auto& it : inst) {
        ASSERT_GE(it.start, 0.0);
        ASSERT_LE(it.end, 1.0);
        total += it.end - it.start;
    }
    // E|a - b| = 1/3, sd of the mean about 0.0007
    EXPECT_NEAR(total / 100000.0, 1.0 / 3.0, 0.01);
}

TEST(Generate, BoundedLengthsRespectEll) {
    for (double ell : {0.1, 0.3, 0.5, 0.8}) {
        auto inst = generate(UniformMaxLen{ell}, 20000, 5);
        double longest = 0;
        for (const auto& it : inst) {
            ASSERT_GE(it.start, 0.0);
            ASSERT_LE(it.end, 1.0);
            longest = std::max(longest, it.end - it.start);
        }
        EXPECT_LE(longest, ell);
        EXPECT_GT(longest, 0.95 * ell);
    }
}

TEST(Generate, FixedLengthWindowsFormAChainFreeFamily) {
    auto inst = generate(FixedLen{0.1}, 1000, 1);
    for (const auto& it : inst) {
        ASSERT_NEAR(it.end - it.start, 0.1, 1e-12);
        ASSERT_GE(it.start, 0.0);
        ASSERT_LE(it.end, 1.0 + 1e-12);
    }
    EXPECT_EQ(min_chain_count(inst), 1000u);
}

TEST(Generate, GaussianIsNotClampedAndLengthsPositive) {
    auto inst = generate(GaussianCL{0, 5, 1, 0.4}, 20000, 2);
    bool below = false, above = false;
    for (const auto& it : inst) {
        ASSERT_GT(it.end - it.start, 0.0);
        below = below || it.start < 0.0;
        above = above || it.end > 1.0;
    }
    EXPECT_TRUE(below);
    EXPECT_TRUE(above);

    // sigma_l large enough that many draws are rejected
    auto heavy = generate(GaussianCL{0, 1, 0.1, 1.0}, 5000, 2);
    for (const auto& it : heavy) ASSERT_GT(it.end - it.start, 0.0);
}

TEST(Generate, OutputIsValidForAllPresets) {
    for (auto spec : sweep_presets()) {
        auto inst = generate(spec, 5000, 77);
        std::vector<Interval> raw(inst.begin(), inst.end());
        EXPECT_TRUE(check_intervals(raw).empty());
        EXPECT_EQ(inst.size(), 5000u);
    }
}

TEST(Generate, PrefixOfStreamIsStable) {
    // item streams are indexed, so the smaller draw's windows are a subset
    auto small = generate(UniformSquare{}, 100, 8);
    auto big = generate(UniformSquare{}, 200, 8);
    std::size_t found = 0;
    for (const auto& it : small) {
        for (const auto& jt : big) found += (it.start == jt.start && it.end == jt.end) ? 1 : 0;
    }
    EXPECT_EQ(found, 100u);
}

TEST(Distribution, ParseAndFormatRoundTrip) {
    for (std::string text : {"usq", "u:0.3", "g:0:1:1:0.2", "g:0:5:1:0.4", "fixed:0.1"}) {
        EXPECT_EQ(to_string(parse_distribution(text)), text);
    }
    for (auto spec : sweep_presets()) EXPECT_EQ(to_string(parse_distribution(to_string(spec))), to_string(spec));
    EXPECT_EQ(sweep_presets().size(), 8u);
}

TEST(Distribution, Families) {
    EXPECT_EQ(family(parse_distribution("usq")), "uniform");
    EXPECT_EQ(family(parse_distribution("u:0.5")), "uniform");
    EXPECT_EQ(family(parse_distribution("g:0:1:1:0.2")), "gaussian");
    EXPECT_EQ(family(parse_distribution("fixed:0.2")), "fixed");
}

TEST(Distribution, BadSpecsRejected) {
    for (std::string bad : {"", "uniform", "u:", "u:0", "u:1.5", "u:-0.1", "u:abc", "g:0:1:1",
                            "g:0:0:1:0.2", "g:0:1:1:0", "g:0:1:1:0.2:5", "fixed:0", "fixed:1.5",
                            "fixed:nan", "usq:1"}) {
        EXPECT_THROW(parse_distribution(bad), std::invalid_argument) << bad;
    }
}
