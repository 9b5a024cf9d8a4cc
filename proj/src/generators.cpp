#include "stacking/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <utility>

#include "stacking/instance_io.hpp"
#include "stacking/rng.hpp"

namespace stacking {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> parse_params(std::string_view text, std::string_view whole) {
    std::vector<double> out;
    while (true) {
        auto colon = text.find(':');
        auto field = text.substr(0, colon);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("bad number '" + std::string(field) +
                                        "' in distribution '" + std::string(whole) + "'");
        }
        out.push_back(v);
        if (colon == std::string_view::npos) break;
        text.remove_prefix(colon + 1);
    }
    return out;
}

void expect_arity(const std::vector<double>& params, std::size_t arity, std::string_view whole) {
    if (params.size() != arity) {
        throw std::invalid_argument("distribution '" + std::string(whole) + "' expects " +
                                    std::to_string(arity) + " parameter(s)");
    }
}

struct Window {
    double start;
    double end;
};

// Either a finished window or a rejection.
template <class Rng>
bool draw_once(const DistributionSpec& spec, Rng& rng, Window& out) {
    return std::visit(
        overloaded{
            [&](const UniformSquare&) {
                double a = unit_uniform(rng), b = unit_uniform(rng);
                out = {std::min(a, b), std::max(a, b)};
                return a != b;
            },
            [&](const UniformMaxLen& u) {
                double a = unit_uniform(rng), b = unit_uniform(rng);
                out = {std::min(a, b), std::max(a, b)};
                return a != b && std::abs(a - b) <= u.ell;
            },
            [&](const GaussianCL& g) {
                std::normal_distribution<double> center_dist(g.mu_c, g.sigma_c);
                std::normal_distribution<double> length_dist(g.mu_l, g.sigma_l);
                double center = center_dist(rng);
                double length = 0.0;
                for (std::size_t tries = 0; (length = length_dist(rng)) <= 0.0; ++tries) {
                    if (tries >= kMaxConsecutiveRejections) {
                        throw GenerationError("generate: length rejection cap hit for " +
                                              to_string(spec));
                    }
                }
                out = {center - 0.5 * length, center + 0.5 * length};
                return out.start < out.end;
            },
            [&](const FixedLen& f) {
                double u = unit_uniform(rng) * (1.0 - f.length);
                out = {u, u + f.length};
                return out.start < out.end;
            },
        },
        spec);
}

Window draw_pair(const DistributionSpec& spec, std::uint64_t seed, std::size_t k,
                 std::uint64_t attempt) {
    SplitMix64 rng(mix_seed(seed, k, attempt));
    Window w{};
    for (std::size_t rejections = 0; !draw_once(spec, rng, w); ++rejections) {
        if (rejections >= kMaxConsecutiveRejections) {
            throw GenerationError("generate: " + std::to_string(kMaxConsecutiveRejections) +
                                  " consecutive rejections for " + to_string(spec));
        }
    }
    return w;
}

}  // namespace

void validate(const DistributionSpec& spec) {
    std::visit(overloaded{
                   [](const UniformSquare&) {},
                   [](const UniformMaxLen& u) {
                       if (!(u.ell > 0.0 && u.ell <= 1.0)) {
                           throw std::invalid_argument("u: ell must lie in (0, 1]");
                       }
                   },
                   [](const GaussianCL& g) {
                       if (!std::isfinite(g.mu_c) || !std::isfinite(g.mu_l)) {
                           throw std::invalid_argument("g: means must be finite");
                       }
                       if (!(g.sigma_c > 0.0 && std::isfinite(g.sigma_c)) ||
                           !(g.sigma_l > 0.0 && std::isfinite(g.sigma_l))) {
                           throw std::invalid_argument("g: standard deviations must be > 0");
                       }
                   },
                   [](const FixedLen& f) {
                       if (!(f.length > 0.0 && f.length < 1.0)) {
                           throw std::invalid_argument("fixed: length must lie in (0, 1)");
                       }
                   },
               },
               spec);
}

DistributionSpec parse_distribution(std::string_view text) {
    DistributionSpec spec;
    auto colon = text.find(':');
    auto tag = text.substr(0, colon);
    auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (tag == "usq" && colon == std::string_view::npos) {
        spec = UniformSquare{};
    } else if (tag == "u" && !rest.empty()) {
        auto p = parse_params(rest, text);
        expect_arity(p, 1, text);
        spec = UniformMaxLen{p[0]};
    } else if (tag == "g" && !rest.empty()) {
        auto p = parse_params(rest, text);
        expect_arity(p, 4, text);
        spec = GaussianCL{p[0], p[1], p[2], p[3]};
    } else if (tag == "fixed" && !rest.empty()) {
        auto p = parse_params(rest, text);
        expect_arity(p, 1, text);
        spec = FixedLen{p[0]};
    } else {
        throw std::invalid_argument("unknown distribution '" + std::string(text) +
                                    "' (expected usq, u:<ell>, g:<mu_c>:<sigma_c>:<mu_l>:<sigma_l>"
                                    " or fixed:<len>)");
    }
    validate(spec);
    return spec;
}

std::string to_string(const DistributionSpec& spec) {
    return std::visit(
        overloaded{
            [](const UniformSquare&) { return std::string("usq"); },
            [](const UniformMaxLen& u) { return "u:" + format_double(u.ell); },
            [](const GaussianCL& g) {
                return "g:" + format_double(g.mu_c) + ":" + format_double(g.sigma_c) + ":" +
                       format_double(g.mu_l) + ":" + format_double(g.sigma_l);
            },
            [](const FixedLen& f) { return "fixed:" + format_double(f.length); },
        },
        spec);
}

std::string family(const DistributionSpec& spec) {
    return std::visit(overloaded{
                          [](const UniformSquare&) { return std::string("uniform"); },
                          [](const UniformMaxLen&) { return std::string("uniform"); },
                          [](const GaussianCL&) { return std::string("gaussian"); },
                          [](const FixedLen&) { return std::string("fixed"); },
                      },
                      spec);
}

std::vector<DistributionSpec> sweep_presets() {
    return {
        UniformMaxLen{0.1},          UniformMaxLen{0.3},          UniformMaxLen{0.5},
        UniformMaxLen{0.8},          GaussianCL{0.0, 1.0, 1.0, 0.2}, GaussianCL{0.0, 1.0, 1.0, 0.4},
        GaussianCL{0.0, 5.0, 1.0, 0.2}, GaussianCL{0.0, 5.0, 1.0, 0.4},
    };
}

Instance generate(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    validate(spec);
    if (n == 0) throw std::invalid_argument("generate: n must be >= 1");

    std::vector<Window> windows(n);
    std::vector<std::uint64_t> attempt(n, 0);
    for (std::size_t k = 0; k < n; ++k) windows[k] = draw_pair(spec, seed, k, 0);

    // Collisions have probability ~0 but finite precision can produce them.
    // The lowest-indexed owner of a shared value keeps it; the others redraw.
    struct Endpoint {
        double value;
        std::size_t item;
    };
    std::vector<Endpoint> endpoints;
    std::vector<std::size_t> redraw;
    while (true) {
        endpoints.clear();
        for (std::size_t k = 0; k < n; ++k) {
            endpoints.push_back({windows[k].start, k});
            endpoints.push_back({windows[k].end, k});
        }
        std::sort(endpoints.begin(), endpoints.end(), [](const Endpoint& a, const Endpoint& b) {
            return a.value < b.value || (a.value == b.value && a.item < b.item);
        });
        redraw.clear();
        for (std::size_t e = 1; e < endpoints.size(); ++e) {
            if (endpoints[e].value == endpoints[e - 1].value) redraw.push_back(endpoints[e].item);
        }
        if (redraw.empty()) break;
        std::sort(redraw.begin(), redraw.end());
        redraw.erase(std::unique(redraw.begin(), redraw.end()), redraw.end());
        for (auto k : redraw) {
            if (++attempt[k] >= kMaxConsecutiveRejections) {
                throw GenerationError("generate: endpoint collisions do not resolve for " +
                                      to_string(spec));
            }
            windows[k] = draw_pair(spec, seed, k, attempt[k]);
        }
    }

    std::vector<Interval> raw(n);
    for (std::size_t k = 0; k < n; ++k) raw[k] = {k, windows[k].start, windows[k].end};
    return Instance::from_intervals(std::move(raw));
}

}  // namespace stacking
