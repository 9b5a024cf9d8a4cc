#pragma once

#include <cstdint>
#include <limits>

namespace stacking {

// SplitMix64 (Steele, Lea, Flood 2014). Small state, so one generator can be
// spun up per (seed, stream index) without a warm-up cost.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Order-sensitive hash used to derive sub-seeds, e.g. mix_seed(seed, item, attempt).
constexpr std::uint64_t mix_seed(std::uint64_t seed) { return seed; }

template <class... Rest>
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t next, Rest... rest) {
    std::uint64_t z = seed ^ (next + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return mix_seed(z, static_cast<std::uint64_t>(rest)...);
}

// Uniform double in [0, 1) with 53 random bits.
template <class Rng>
double unit_uniform(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace stacking
