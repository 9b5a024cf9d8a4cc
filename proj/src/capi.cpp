// extern "C" surface over the C++ core. Exceptions never cross this boundary.

#include "stacking/stacking.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "stacking/exact.hpp"
#include "stacking/experiment.hpp"
#include "stacking/generators.hpp"
#include "stacking/instance_io.hpp"
#include "stacking/interval.hpp"
#include "stacking/patience.hpp"
#include "stacking/solver.hpp"
#include "stacking/verify.hpp"

struct stk_instance {
    stacking::Instance inst;
};

struct stk_coloring {
    stacking::Coloring col;
};

struct stk_online_solver {
    stacking::OnlineSolver solver;
};

namespace {

thread_local std::string last_error;

class StatusError : public std::runtime_error {
public:
    StatusError(stk_status status, const std::string& what)
        : std::runtime_error(what), status_(status) {}
    stk_status status() const { return status_; }

private:
    stk_status status_;
};

template <class F>
stk_status guard(F&& body) noexcept {
    using namespace stacking;
    auto fail = [](stk_status s, const char* what) {
        try {
            last_error = what;
        } catch (...) {
        }
        return s;
    };
    try {
        body();
        last_error.clear();
        return STK_OK;
    } catch (const StatusError& e) {
        return fail(e.status(), e.what());
    } catch (const InvalidInstance& e) {
        return fail(STK_ERR_INVALID_INSTANCE, e.what());
    } catch (const ParseError& e) {
        return fail(STK_ERR_PARSE, e.what());
    } catch (const IoError& e) {
        return fail(STK_ERR_IO, e.what());
    } catch (const GenerationError& e) {
        return fail(STK_ERR_GENERATION, e.what());
    } catch (const EmptyInput& e) {
        return fail(STK_ERR_EMPTY_INPUT, e.what());
    } catch (const OutOfOrderArrival& e) {
        return fail(STK_ERR_OUT_OF_ORDER, e.what());
    } catch (const DuplicateEndpoint& e) {
        return fail(STK_ERR_DUPLICATE, e.what());
    } catch (const DuplicateValue& e) {
        return fail(STK_ERR_DUPLICATE, e.what());
    } catch (const LimitExceeded& e) {
        return fail(STK_ERR_LIMIT_EXCEEDED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(STK_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(STK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(STK_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(STK_ERR_INTERNAL, "unknown error");
    }
}

template <class T>
const T& deref(const T* p, const char* name) {
    if (p == nullptr) throw std::invalid_argument(std::string(name) + " is null");
    return *p;
}

template <class T>
T& deref(T* p, const char* name) {
    if (p == nullptr) throw std::invalid_argument(std::string(name) + " is null");
    return *p;
}

void copy_text(const std::string& text, char* buf, size_t buf_size, size_t* needed) {
    if (needed != nullptr) *needed = text.size() + 1;
    if (buf == nullptr) return;
    if (buf_size < text.size() + 1) {
        throw StatusError(STK_ERR_INVALID_ARGUMENT, "buffer too small: need " +
                                                        std::to_string(text.size() + 1) + " bytes");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
}

template <size_t N>
void copy_field(char (&dst)[N], const std::string& src) {
    size_t len = std::min(src.size(), N - 1);
    std::memcpy(dst, src.data(), len);
    dst[len] = '\0';
}

void fill_row(stk_experiment_row& out, const stacking::ExperimentRow& row) {
    copy_field(out.dist, row.dist);
    out.n = row.n;
    out.h = row.h;
    out.seed = row.seed;
    out.c = row.c;
    out.omega_prime = row.omega_prime;
    out.chi_prime = row.chi_prime;
    out.lower_bound = row.lower_bound;
    out.c_over_sqrt_n = row.c_over_sqrt_n;
    out.err_sqrt_n = row.err_sqrt_n;
    out.ratio_ub = row.ratio_ub;
    out.solve_micros = row.solve_micros;
    copy_field(out.error, row.error);
}

stacking::ExperimentRow to_row(const stk_experiment_row& in) {
    stacking::ExperimentRow row;
    row.dist = in.dist;
    row.n = in.n;
    row.h = in.h;
    row.seed = in.seed;
    row.c = in.c;
    row.omega_prime = in.omega_prime;
    row.chi_prime = in.chi_prime;
    row.lower_bound = in.lower_bound;
    row.c_over_sqrt_n = in.c_over_sqrt_n;
    row.err_sqrt_n = in.err_sqrt_n;
    row.ratio_ub = in.ratio_ub;
    row.solve_micros = in.solve_micros;
    row.error = in.error;
    return row;
}

// Backing storage for configs handed out by stk_suite_config.
struct SuiteStorage {
    std::vector<std::string> names;
    std::vector<const char*> name_ptrs;
    std::vector<size_t> n_values;
    stacking::SweepConfig config;

    explicit SuiteStorage(const char* suite) : config(stacking::suite_config(suite)) {
        for (const auto& d : config.distributions) names.push_back(stacking::to_string(d));
        for (const auto& s : names) name_ptrs.push_back(s.c_str());
        n_values.assign(config.n_values.begin(), config.n_values.end());
    }
};

}  // namespace

extern "C" {

const char* stk_last_error(void) { return last_error.c_str(); }

const char* stk_status_name(stk_status status) {
    switch (status) {
    case STK_OK: return "ok";
    case STK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case STK_ERR_INVALID_INSTANCE: return "invalid instance";
    case STK_ERR_EMPTY_INPUT: return "empty input";
    case STK_ERR_OUT_OF_ORDER: return "out-of-order arrival";
    case STK_ERR_DUPLICATE: return "duplicate value";
    case STK_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case STK_ERR_PARSE: return "parse error";
    case STK_ERR_IO: return "i/o error";
    case STK_ERR_GENERATION: return "generation failed";
    case STK_ERR_VERIFICATION: return "verification failed";
    case STK_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* stk_version(void) { return "1.0.0"; }

stk_status stk_instance_create(const double* starts, const double* ends, size_t n,
                               stk_instance** out) {
    return guard([&] {
        deref(out, "out");
        if (n > 0 && (starts == nullptr || ends == nullptr)) {
            throw std::invalid_argument("starts/ends are null");
        }
        std::vector<stacking::Interval> raw(n);
        for (size_t i = 0; i < n; ++i) raw[i] = {i, starts[i], ends[i]};
        *out = new stk_instance{stacking::Instance::from_intervals(std::move(raw))};
    });
}

stk_status stk_instance_generate(const char* spec, size_t n, uint64_t seed, stk_instance** out) {
    return guard([&] {
        deref(out, "out");
        if (spec == nullptr) throw std::invalid_argument("spec is null");
        auto dist = stacking::parse_distribution(spec);
        *out = new stk_instance{stacking::generate(dist, n, seed)};
    });
}

stk_status stk_instance_read_file(const char* path, stk_instance** out) {
    return guard([&] {
        deref(out, "out");
        if (path == nullptr) throw std::invalid_argument("path is null");
        *out = new stk_instance{stacking::read_instance_file(path)};
    });
}

stk_status stk_instance_write_file(const stk_instance* inst, const char* path) {
    return guard([&] {
        if (path == nullptr) throw std::invalid_argument("path is null");
        stacking::write_instance_file(path, deref(inst, "inst").inst);
    });
}

stk_status stk_instance_to_text(const stk_instance* inst, char* buf, size_t buf_size,
                                size_t* needed) {
    return guard([&] { copy_text(stacking::to_text(deref(inst, "inst").inst), buf, buf_size, needed); });
}

void stk_instance_destroy(stk_instance* inst) { delete inst; }

size_t stk_instance_size(const stk_instance* inst) { return inst ? inst->inst.size() : 0; }

stk_status stk_instance_get(const stk_instance* inst, size_t index, double* start, double* end) {
    return guard([&] {
        const auto& in = deref(inst, "inst").inst;
        if (index >= in.size()) throw std::invalid_argument("index out of range");
        if (start) *start = in[index].start;
        if (end) *end = in[index].end;
    });
}

stk_status stk_clique_number(const stk_instance* inst, size_t* omega_prime, double* witness_t) {
    return guard([&] {
        auto stats = stacking::clique_number(deref(inst, "inst").inst);
        if (omega_prime) *omega_prime = stats.omega_prime;
        if (witness_t) *witness_t = stats.witness_t;
    });
}

stk_status stk_chain_count(const stk_instance* inst, size_t* c) {
    return guard([&] { deref(c, "c") = stacking::min_chain_count(deref(inst, "inst").inst); });
}

stk_status stk_solve_online(const stk_instance* inst, size_t h, stk_coloring** out) {
    return guard([&] {
        deref(out, "out");
        stacking::require_capacity(h);
        *out = new stk_coloring{stacking::solve_online(deref(inst, "inst").inst, h)};
    });
}

stk_status stk_solve_offline(const stk_instance* inst, size_t h, stk_coloring** out) {
    return guard([&] {
        deref(out, "out");
        *out = new stk_coloring{stacking::solve_offline(deref(inst, "inst").inst, h)};
    });
}

stk_status stk_solve_exact(const stk_instance* inst, size_t h, size_t limit, stk_coloring** out,
                           uint64_t* nodes_explored) {
    return guard([&] {
        deref(out, "out");
        auto result = stacking::chi_exact(deref(inst, "inst").inst, h,
                                          limit == 0 ? stacking::kDefaultExactLimit : limit);
        if (nodes_explored) *nodes_explored = result.nodes_explored;
        *out = new stk_coloring{std::move(result.witness)};
    });
}

void stk_coloring_destroy(stk_coloring* col) { delete col; }

size_t stk_coloring_size(const stk_coloring* col) { return col ? col->col.color_of.size() : 0; }

size_t stk_coloring_num_colors(const stk_coloring* col) { return col ? col->col.num_colors : 0; }

uint32_t stk_coloring_color(const stk_coloring* col, size_t index) {
    if (col == nullptr || index >= col->col.color_of.size()) return 0;
    return col->col.color_of[index];
}

stk_status stk_validate_coloring(const stk_instance* inst, size_t h, const stk_coloring* col,
                                 size_t* violations) {
    return guard([&] {
        stacking::require_capacity(h);
        auto bad = stacking::validate_coloring(deref(inst, "inst").inst, h, deref(col, "col").col);
        deref(violations, "violations") = bad.size();
        if (!bad.empty()) {
            std::string msg = std::to_string(bad.size()) + " violation(s):";
            for (size_t k = 0; k < bad.size() && k < 5; ++k) msg += "\n  " + bad[k].describe();
            throw StatusError(STK_ERR_VERIFICATION, msg);
        }
    });
}

stk_status stk_bound_report_compute(const stk_instance* inst, size_t h, const stk_coloring* col,
                                    stk_bound_report* out) {
    return guard([&] {
        auto r = stacking::bound_report(deref(inst, "inst").inst, h, deref(col, "col").col);
        deref(out, "out") = {r.c, r.omega_prime, r.chi_prime_h, r.lower_bound, r.lemma2_rhs,
                             r.ratio_ub};
    });
}

stk_status stk_online_solver_create(size_t h, stk_online_solver** out) {
    return guard([&] {
        deref(out, "out");
        *out = new stk_online_solver{stacking::OnlineSolver(h)};
    });
}

stk_status stk_online_solver_push(stk_online_solver* solver, double start, double end,
                                  uint32_t* color) {
    return guard([&] {
        auto c = deref(solver, "solver").solver.push(start, end);
        if (color) *color = c;
    });
}

size_t stk_online_solver_num_colors(const stk_online_solver* solver) {
    return solver ? solver->solver.num_colors() : 0;
}

void stk_online_solver_destroy(stk_online_solver* solver) { delete solver; }

stk_status stk_patience_pile_count(const double* deck, size_t n, size_t* piles) {
    return guard([&] {
        if (n > 0) deref(deck, "deck");
        deref(piles, "piles") = stacking::patience_sort({deck, n}).size();
    });
}

stk_status stk_lis_length(const double* seq, size_t n, size_t* length) {
    return guard([&] {
        if (n > 0) deref(seq, "seq");
        deref(length, "length") = stacking::lis_length({seq, n});
    });
}

stk_status stk_ln_statistics(size_t n, size_t trials, uint64_t seed, stk_ln_stats* out) {
    return guard([&] {
        auto s = stacking::ln_statistics(n, trials, seed);
        deref(out, "out") = {s.n, s.trials, s.mean, s.std, s.seed};
    });
}

stk_status stk_measure_instance(const stk_instance* inst, size_t h, const char* dist,
                                uint64_t seed, stk_experiment_row* row) {
    return guard([&] {
        auto r = stacking::measure_instance(deref(inst, "inst").inst, h, dist ? dist : "", seed);
        fill_row(deref(row, "row"), r);
    });
}

stk_status stk_experiment_row_csv(const stk_experiment_row* row, char* buf, size_t buf_size,
                                  size_t* needed) {
    return guard([&] {
        std::ostringstream os;
        stacking::write_csv_header(os);
        stacking::write_csv_row(os, to_row(deref(row, "row")));
        copy_text(os.str(), buf, buf_size, needed);
    });
}

stk_status stk_suite_config(const char* suite, stk_sweep_config* out) {
    return guard([&] {
        if (suite == nullptr) throw std::invalid_argument("suite is null");
        std::string name = suite;
        deref(out, "out");
        static const SuiteStorage paper("paper");
        static const SuiteStorage smoke("smoke");
        const SuiteStorage* s = nullptr;
        if (name == "paper") {
            s = &paper;
        } else if (name == "smoke") {
            s = &smoke;
        } else {
            throw std::invalid_argument("unknown suite '" + name + "' (paper|smoke)");
        }
        *out = {s->name_ptrs.data(), s->name_ptrs.size(), s->n_values.data(),
                s->n_values.size(),  s->config.h,         s->config.base_seed,
                s->config.instances_per_point};
    });
}

stk_status stk_run_sweep(const stk_sweep_config* config, size_t workers, const char* csv_path,
                         const char* plot_prefix, size_t* failed_rows) {
    return guard([&] {
        const auto& in = deref(config, "config");
        stacking::SweepConfig cfg;
        if (in.num_distributions > 0) deref(in.distributions, "distributions");
        for (size_t d = 0; d < in.num_distributions; ++d) {
            if (in.distributions[d] == nullptr) throw std::invalid_argument("distribution is null");
            cfg.distributions.push_back(stacking::parse_distribution(in.distributions[d]));
        }
        if (in.num_n_values > 0) deref(in.n_values, "n_values");
        cfg.n_values.assign(in.n_values, in.n_values + in.num_n_values);
        cfg.h = in.h;
        cfg.base_seed = in.base_seed;
        cfg.instances_per_point = in.instances_per_point == 0 ? 1 : in.instances_per_point;
        cfg.validate();

        auto rows = stacking::run_sweep(cfg, workers);
        if (csv_path != nullptr) {
            std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
            if (!out) throw stacking::IoError(std::string("cannot open '") + csv_path + "' for writing");
            stacking::write_csv(out, rows);
            out.flush();
            if (!out) throw stacking::IoError(std::string("write failed on '") + csv_path + "'");
        } else {
            stacking::write_csv(std::cout, rows);
            std::cout.flush();
        }
        if (plot_prefix != nullptr) stacking::write_plots(rows, plot_prefix);
        if (failed_rows) {
            *failed_rows = static_cast<size_t>(
                std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok(); }));
        }
    });
}

stk_status stk_verify(const char* level, uint64_t seed, stk_report_fn report, void* user,
                      int* passed) {
    return guard([&] {
        if (level == nullptr) throw std::invalid_argument("level is null");
        std::string lv = level;
        stacking::VerifyOptions opts;
        if (lv == "quick") {
            opts.level = stacking::VerifyLevel::Quick;
        } else if (lv == "full") {
            opts.level = stacking::VerifyLevel::Full;
        } else {
            throw std::invalid_argument("unknown level '" + lv + "' (quick|full)");
        }
        opts.seed = seed;

        bool all = true;
        for (const auto& suite : stacking::run_verify(opts)) {
            all = all && suite.passed();
            if (report == nullptr) continue;
            std::string line = (suite.passed() ? "PASS " : "FAIL ") + suite.name + ": " +
                               std::to_string(suite.cases - suite.failures) + "/" +
                               std::to_string(suite.cases) + " cases";
            report(line.c_str(), user);
            for (const auto& cx : suite.counterexamples) {
                std::string cx_line = "  counterexample: " + cx;
                report(cx_line.c_str(), user);
            }
        }
        if (passed) *passed = all ? 1 : 0;
    });
}

}  // extern "C"
