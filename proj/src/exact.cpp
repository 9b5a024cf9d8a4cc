#include "stacking/exact.hpp"

#include <string>
#include <vector>

namespace stacking {

namespace {

class Search {
public:
    Search(const Instance& inst, std::size_t h, std::size_t lower, Coloring incumbent)
        : inst_(inst), h_(h), lower_(lower), best_(std::move(incumbent)),
          current_(inst.size(), 0) {}

    void run() {
        if (best_.num_colors <= lower_ || inst_.empty()) return;
        // first item always takes color 1
        current_[0] = 1;
        ++nodes_;
        descend(1, 1);
    }

    const Coloring& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Items before i are colored with colors 1..used.
    void descend(std::size_t i, std::size_t used) {
        if (best_.num_colors <= lower_) return;
        if (used >= best_.num_colors) return;
        if (i == inst_.size()) {
            best_.color_of = current_;
            best_.num_colors = used;
            return;
        }
        // a new color is only tried when it keeps us strictly below the incumbent
        std::size_t max_color = std::min(used + 1, best_.num_colors - 1);
        for (std::size_t c = 1; c <= max_color; ++c) {
            if (c >= best_.num_colors) break;
            if (!fits(i, static_cast<Color>(c))) continue;
            current_[i] = static_cast<Color>(c);
            ++nodes_;
            descend(i + 1, std::max(used, c));
            current_[i] = 0;
            if (best_.num_colors <= lower_) return;
        }
    }

    // Both conditions only need checking at the new item: it crosses no
    // same-colored earlier item, and the same-colored items alive just after
    // its start (where that color's depth peaks among processed items) stay
    // within h.
    bool fits(std::size_t i, Color c) const {
        const auto& item = inst_[i];
        std::size_t alive = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (current_[j] != c) continue;
            const auto& other = inst_[j];
            if (other.end < item.start) continue;
            if (other.end < item.end) return false;  // crossing
            if (++alive > h_) return false;
        }
        return true;
    }

    const Instance& inst_;
    std::size_t h_;
    std::size_t lower_;
    Coloring best_;
    std::vector<Color> current_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult chi_exact(const Instance& inst, std::size_t h, std::size_t limit) {
    require_capacity(h);
    if (inst.size() > limit) {
        throw LimitExceeded("chi_exact: " + std::to_string(inst.size()) +
                            " items exceeds the limit of " + std::to_string(limit));
    }
    ExactResult result;
    if (inst.empty()) return result;

    std::size_t omega = clique_number(inst).omega_prime;
    Search search(inst, h, (omega + h - 1) / h, solve_online(inst, h));
    search.run();

    result.witness = search.best();
    result.chi_h = result.witness.num_colors;
    result.nodes_explored = search.nodes();
    return result;
}

}  // namespace stacking
