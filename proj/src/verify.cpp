#include "stacking/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stacking/exact.hpp"
#include "stacking/generators.hpp"
#include "stacking/patience.hpp"
#include "stacking/rng.hpp"

namespace stacking {

namespace {

bool full(const VerifyOptions& o) { return o.level == VerifyLevel::Full; }

// Generator variants cycled through by the randomized suites.
const std::vector<DistributionSpec>& variants() {
    static const std::vector<DistributionSpec> v = {
        UniformSquare{}, UniformMaxLen{0.3}, GaussianCL{0.0, 1.0, 1.0, 0.2},
        GaussianCL{0.0, 5.0, 1.0, 0.4}, FixedLen{0.1},
    };
    return v;
}

class Recorder {
public:
    Recorder(std::string name, const VerifyOptions& opts) : opts_(opts) {
        result_.name = std::move(name);
    }

    void pass() { ++result_.cases; }

    void fail(const std::string& what) {
        ++result_.cases;
        ++result_.failures;
        if (result_.counterexamples.size() < opts_.max_counterexamples) {
            result_.counterexamples.push_back(what);
        }
    }

    void check(bool ok, const std::string& what) { ok ? pass() : fail(what); }

    SuiteResult take() { return std::move(result_); }

private:
    const VerifyOptions& opts_;
    SuiteResult result_;
};

struct RandomCase {
    DistributionSpec spec;
    std::size_t n;
    std::uint64_t seed;
    std::size_t h;

    std::string repro() const {
        std::ostringstream os;
        os << "dist=" << to_string(spec) << " n=" << n << " seed=" << seed << " h=" << h;
        return os.str();
    }
};

// Case k of a suite: variant, size in [1, max_n], seed and h all derived
// from (suite seed, k) so a single line reproduces it.
RandomCase random_case(std::uint64_t suite_seed, std::size_t k, std::size_t max_n,
                       std::span<const std::size_t> capacities) {
    SplitMix64 rng(mix_seed(suite_seed, k));
    const auto& vs = variants();
    RandomCase rc{vs[k % vs.size()], 1 + rng() % max_n, rng(), capacities[rng() % capacities.size()]};
    return rc;
}

}  // namespace

SuiteResult verify_lis_equality(const VerifyOptions& opts) {
    Recorder rec("lis-equality", opts);

    std::size_t max_perm = full(opts) ? 8 : 7;
    for (std::size_t len = 1; len <= max_perm; ++len) {
        std::vector<double> perm(len);
        std::iota(perm.begin(), perm.end(), 1.0);
        do {
            auto piles = patience_sort(perm).size();
            auto lis = lis_length(perm);
            if (piles == lis) {
                rec.pass();
            } else {
                std::ostringstream os;
                os << "permutation";
                for (double v : perm) os << ' ' << v;
                os << ": piles=" << piles << " lis=" << lis;
                rec.fail(os.str());
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::size_t randoms = full(opts) ? 5000 : 1000;
    std::uint64_t suite_seed = mix_seed(opts.seed, 1);
    for (std::size_t k = 0; k < randoms; ++k) {
        std::uint64_t seed = mix_seed(suite_seed, k);
        SplitMix64 rng(seed);
        std::vector<double> seq(1 + rng() % 200);
        for (auto& v : seq) v = unit_uniform(rng);
        std::sort(seq.begin(), seq.end());
        if (std::adjacent_find(seq.begin(), seq.end()) != seq.end()) continue;
        std::shuffle(seq.begin(), seq.end(), rng);
        auto piles = patience_sort(seq).size();
        auto lis = lis_length(seq);
        rec.check(piles == lis, "random sequence seed=" + std::to_string(seed) +
                                    " len=" + std::to_string(seq.size()) +
                                    ": piles=" + std::to_string(piles) +
                                    " lis=" + std::to_string(lis));
    }
    return rec.take();
}

SuiteResult verify_online_offline(const VerifyOptions& opts) {
    Recorder rec("online-offline-equivalence", opts);
    const std::size_t caps[] = {1, 2, 3, 5, 10};
    std::size_t cases = full(opts) ? 3000 : 500;
    std::uint64_t suite_seed = mix_seed(opts.seed, 2);
    for (std::size_t k = 0; k < cases; ++k) {
        auto rc = random_case(suite_seed, k, 500, caps);
        auto inst = generate(rc.spec, rc.n, rc.seed);
        auto a = opts.offline(inst, rc.h);
        auto b = opts.online(inst, rc.h);
        if (a.color_of == b.color_of && a.num_colors == b.num_colors) {
            rec.pass();
            continue;
        }
        std::size_t i = 0;
        while (i < inst.size() && i < a.color_of.size() && i < b.color_of.size() &&
               a.color_of[i] == b.color_of[i]) {
            ++i;
        }
        std::ostringstream os;
        os << rc.repro() << ": first mismatch at item " << i;
        if (i < a.color_of.size() && i < b.color_of.size()) {
            os << " (offline " << a.color_of[i] << ", online " << b.color_of[i] << ")";
        }
        rec.fail(os.str());
    }
    return rec.take();
}

SuiteResult verify_prefix_property(const VerifyOptions& opts) {
    Recorder rec("online-prefix", opts);
    const std::size_t caps[] = {1, 2, 3, 5};
    std::size_t cases = full(opts) ? 300 : 60;
    std::uint64_t suite_seed = mix_seed(opts.seed, 3);
    for (std::size_t k = 0; k < cases; ++k) {
        auto rc = random_case(suite_seed, k, 80, caps);
        auto inst = generate(rc.spec, rc.n, rc.seed);
        auto whole = opts.online(inst, rc.h);
        std::vector<Interval> prefix;
        bool ok = true;
        std::size_t bad_len = 0;
        for (std::size_t len = 1; len <= inst.size() && ok; ++len) {
            prefix.push_back(inst[len - 1]);
            auto part = opts.online(Instance::from_intervals(prefix), rc.h);
            ok = std::equal(part.color_of.begin(), part.color_of.end(), whole.color_of.begin());
            bad_len = len;
        }
        rec.check(ok, rc.repro() + ": prefix of length " + std::to_string(bad_len) +
                          " colored differently");
    }
    return rec.take();
}

SuiteResult verify_bounds(const VerifyOptions& opts) {
    Recorder rec("coloring-bounds", opts);
    const std::size_t caps[] = {1, 2, 3, 5, 10};
    std::size_t cases = full(opts) ? 2000 : 400;
    std::uint64_t suite_seed = mix_seed(opts.seed, 4);
    for (std::size_t k = 0; k < cases; ++k) {
        auto rc = random_case(suite_seed, k, 500, caps);
        auto inst = generate(rc.spec, rc.n, rc.seed);
        auto col = opts.online(inst, rc.h);
        if (auto bad = validate_coloring(inst, rc.h, col); !bad.empty()) {
            rec.fail(rc.repro() + ": " + bad.front().describe());
            continue;
        }
        auto r = bound_report(inst, rc.h, col);
        std::ostringstream os;
        os << rc.repro() << ": chi'=" << r.chi_prime_h << " omega'=" << r.omega_prime
           << " c=" << r.c;
        bool ok = static_cast<double>(r.chi_prime_h) <= r.lemma2_rhs &&
                  r.chi_prime_h <= r.omega_prime && r.lower_bound <= r.chi_prime_h;
        if (rc.h == 1) ok = ok && r.chi_prime_h == r.omega_prime;
        rec.check(ok, os.str());
    }
    return rec.take();
}

SuiteResult verify_oracle_sandwich(const VerifyOptions& opts) {
    Recorder rec("oracle-sandwich", opts);
    const std::size_t caps[] = {1, 2, 3};
    std::size_t cases = full(opts) ? 1000 : 200;
    std::size_t max_n = full(opts) ? 12 : 10;
    std::uint64_t suite_seed = mix_seed(opts.seed, 5);
    for (std::size_t k = 0; k < cases; ++k) {
        auto rc = random_case(suite_seed, k, max_n, caps);
        auto inst = generate(rc.spec, rc.n, rc.seed);
        auto col = opts.online(inst, rc.h);
        auto exact = chi_exact(inst, rc.h);
        auto omega = clique_number(inst).omega_prime;
        std::size_t lower = (omega + rc.h - 1) / rc.h;
        bool ok = lower <= exact.chi_h && exact.chi_h <= col.num_colors &&
                  col.num_colors <= omega && validate_coloring(inst, rc.h, exact.witness).empty();
        if (rc.h == 1) ok = ok && exact.chi_h == omega && col.num_colors == omega;
        std::ostringstream os;
        os << rc.repro() << ": lower=" << lower << " exact=" << exact.chi_h
           << " online=" << col.num_colors << " omega'=" << omega;
        rec.check(ok, os.str());
    }
    return rec.take();
}

SuiteResult verify_ln_mean(const VerifyOptions& opts) {
    Recorder rec("ln-mean-bound", opts);
    std::vector<std::size_t> sizes = {100, 1000};
    if (full(opts)) sizes.push_back(10000);
    for (auto n : sizes) {
        auto stats = ln_statistics(n, 200, mix_seed(opts.seed, 6, n));
        double bound = 2.0 * std::sqrt(static_cast<double>(n));
        std::ostringstream os;
        os << "n=" << n << " trials=200 seed=" << stats.seed << ": mean=" << stats.mean
           << " > 2 sqrt(n)=" << bound;
        rec.check(stats.mean <= bound, os.str());
    }
    return rec.take();
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
    return {
        verify_lis_equality(opts), verify_online_offline(opts), verify_prefix_property(opts),
        verify_bounds(opts),       verify_oracle_sandwich(opts), verify_ln_mean(opts),
    };
}

}  // namespace stacking
