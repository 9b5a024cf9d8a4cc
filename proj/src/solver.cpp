#include "stacking/solver.hpp"

#include <algorithm>
#include <sstream>

#include "stacking/patience.hpp"

namespace stacking {

namespace {

// First index with a[i] > x, without data-dependent branches.
std::size_t first_greater(const std::vector<double>& a, double x) {
    if (a.empty()) return 0;
    const double* first = a.data();
    std::size_t len = a.size();
    while (len > 1) {
        std::size_t half = len / 2;
        first += half * static_cast<std::size_t>(first[half - 1] <= x);
        len -= half;
    }
    return static_cast<std::size_t>(first - a.data()) + (*first <= x ? 1 : 0);
}

}  // namespace

std::size_t require_capacity(std::size_t h) {
    if (h == 0) throw std::invalid_argument("stack capacity h must be >= 1");
    return h;
}

OnlineSolver::OnlineSolver(std::size_t capacity) : capacity_(require_capacity(capacity)) {}

Color OnlineSolver::push(double start, double end) {
    if (!(start < end)) throw std::invalid_argument("push: start must be < end");
    if (num_items_ > 0 && !(start > last_start_)) {
        throw OutOfOrderArrival("push: start " + std::to_string(start) +
                                " does not exceed previous start " + std::to_string(last_start_));
    }
    if (check_endpoints_) {
        if (seen_.count(start) || seen_.count(end)) {
            throw DuplicateEndpoint("push: endpoint already seen");
        }
        seen_.insert(start);
        seen_.insert(end);
    }
    return place(start, end);
}

Color OnlineSolver::place(double start, double end) {
    last_start_ = start;
    ++num_items_;

    // tops with end > `end` contain the item (their starts are all earlier)
    auto k = first_greater(top_ends_, end);
    if (k == top_ends_.size()) {
        top_ends_.push_back(end);
        chain_.push_back({0, 1});
    } else {
        top_ends_[k] = end;
        auto& chain = chain_[k];
        if (chain.block_size < capacity_) {
            ++chain.block_size;
            return chain.color;
        }
        chain.block_size = 1;
    }

    Color color;
    if (!expiry_.empty() && expiry_.top().end < start) {
        color = expiry_.top().color;
        expiry_.pop();
    } else {
        color = ++chi_;
    }
    expiry_.push({end, color});
    chain_[k].color = color;
    return color;
}

std::vector<OnlineSolver::ChainView> OnlineSolver::chains() const {
    std::vector<ChainView> out;
    out.reserve(top_ends_.size());
    for (std::size_t k = 0; k < top_ends_.size(); ++k) {
        out.push_back({top_ends_[k], chain_[k].color, chain_[k].block_size});
    }
    return out;
}

Coloring solve_online(const Instance& inst, std::size_t h) {
    OnlineSolver solver(h);
    // a validated Instance already guarantees order and distinctness
    solver.check_endpoints_ = false;
    Coloring col;
    col.color_of.reserve(inst.size());
    for (const auto& iv : inst) col.color_of.push_back(solver.place(iv.start, iv.end));
    col.num_colors = solver.num_colors();
    return col;
}

Coloring solve_offline(const Instance& inst, std::size_t h) {
    require_capacity(h);
    auto chains = min_chain_partition(inst);

    // block bottoms, and each item's bottom
    std::vector<std::size_t> bottom_of(inst.size());
    std::vector<std::size_t> bottoms;
    for (const auto& chain : chains.chains) {
        for (std::size_t pos = 0; pos < chain.size(); ++pos) {
            std::size_t bottom = chain[pos - pos % h].id;
            bottom_of[chain[pos].id] = bottom;
            if (pos % h == 0) bottoms.push_back(bottom);
        }
    }
    std::sort(bottoms.begin(), bottoms.end());  // ids are in start order

    struct Expiry {
        double end;
        Color color;
        bool operator>(const Expiry& o) const { return end > o.end; }
    };
    std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiry;
    Coloring col;
    col.color_of.assign(inst.size(), 0);
    for (auto b : bottoms) {
        Color color;
        if (!expiry.empty() && expiry.top().end < inst[b].start) {
            color = expiry.top().color;
            expiry.pop();
        } else {
            color = static_cast<Color>(++col.num_colors);
        }
        expiry.push({inst[b].end, color});
        col.color_of[b] = color;
    }
    for (std::size_t i = 0; i < inst.size(); ++i) col.color_of[i] = col.color_of[bottom_of[i]];
    return col;
}

std::string ColoringViolation::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
    case Kind::Coverage: os << "coverage"; break;
    case Kind::Overlap: os << "overlapping intervals share a color"; break;
    case Kind::Capacity: os << "more than h same-colored intervals contain t=" << point; break;
    }
    if (!items.empty()) {
        os << " (items";
        for (auto i : items) os << ' ' << i;
        os << ')';
    }
    return os.str();
}

std::vector<ColoringViolation> validate_coloring(const Instance& inst, std::size_t h,
                                                 const Coloring& col) {
    using Kind = ColoringViolation::Kind;
    std::vector<ColoringViolation> out;
    if (col.color_of.size() != inst.size()) {
        out.push_back({Kind::Coverage, {}, 0.0});
        return out;
    }

    std::vector<std::vector<std::size_t>> by_color(col.num_colors + 1);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Color c = col.color_of[i];
        if (c == 0 || c > col.num_colors) {
            out.push_back({Kind::Coverage, {i}, 0.0});
        } else {
            by_color[c].push_back(i);
        }
    }
    for (std::size_t c = 1; c <= col.num_colors; ++c) {
        if (by_color[c].empty()) out.push_back({Kind::Coverage, {}, static_cast<double>(c)});
    }

    // events: (position, item, is_start); positions are distinct endpoints
    struct Event {
        double at;
        std::size_t item;
        bool start;
    };
    std::vector<Event> events;
    std::vector<std::size_t> open;
    for (std::size_t c = 1; c <= col.num_colors; ++c) {
        events.clear();
        for (auto i : by_color[c]) {
            events.push_back({inst[i].start, i, true});
            events.push_back({inst[i].end, i, false});
        }
        std::sort(events.begin(), events.end(),
                  [](const Event& a, const Event& b) { return a.at < b.at; });

        open.clear();
        for (std::size_t e = 0; e < events.size(); ++e) {
            const auto& ev = events[e];
            if (ev.start) {
                open.push_back(ev.item);
                if (open.size() > h) {
                    // region (ev.at, next event) is covered by everything open
                    double t = 0.5 * (ev.at + events[e + 1].at);
                    out.push_back({Kind::Capacity, open, t});
                }
                continue;
            }
            // everything opened above ev.item is still open: each one crosses it
            auto pos = std::find(open.begin(), open.end(), ev.item);
            for (auto above = pos + 1; above != open.end(); ++above) {
                out.push_back({Kind::Overlap, {ev.item, *above}, 0.0});
            }
            open.erase(pos);
        }
    }
    return out;
}

BoundReport bound_report(const Instance& inst, std::size_t h, const Coloring& col) {
    require_capacity(h);
    BoundReport r;
    r.c = min_chain_count(inst);
    r.omega_prime = clique_number(inst).omega_prime;
    r.chi_prime_h = col.num_colors;
    r.lower_bound = (r.omega_prime + h - 1) / h;
    double load = static_cast<double>(r.omega_prime) / static_cast<double>(h);
    r.lemma2_rhs = load + static_cast<double>(r.c);
    r.ratio_ub = static_cast<double>(r.chi_prime_h) / load;
    return r;
}

}  // namespace stacking
