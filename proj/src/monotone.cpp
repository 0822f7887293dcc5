#include "cubemap/monotone.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cubemap {

namespace {

void check_permutation(const FiniteMetricSpace& space, const std::vector<int>& order) {
    const std::size_t n = space.size();
    if (order.size() != n)
        throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                    " entries for a space of " + std::to_string(n) + " points");
    std::vector<char> seen(n, 0);
    for (int p : order) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p])
            throw std::invalid_argument("order has duplicate or out-of-range index " +
                                        std::to_string(p));
        seen[p] = 1;
    }
}

// Constant of the order prefix order[0..len). Interval diameters are built
// from the left endpoint inward: diam([i..j]) = max(diam([i+1..j]), distances
// from order[i]).
double prefix_constant(const FiniteMetricSpace& space, const std::vector<int>& order,
                       std::size_t len, std::array<int, 2>* cert = nullptr) {
    double worst = 0.0;
    for (std::size_t j = 1; j < len; ++j) {
        double diam = 0.0;
        for (std::size_t i = j; i-- > 0;) {
            for (std::size_t t = i + 1; t <= j; ++t)
                diam = std::max(diam, space.dist(order[i], order[t]));
            double ratio = diam / space.dist(order[i], order[j]);
            if (ratio > worst) {
                worst = ratio;
                if (cert) *cert = {order[i], order[j]};
            }
        }
    }
    return worst;
}

// Ratios contributed by intervals ending at the freshly appended last point.
// Everything else was already counted while the prefix was being built, so
// the partial constant of a prefix is max over these along the path.
double extension_constant(const FiniteMetricSpace& space, const std::vector<int>& prefix) {
    std::size_t j = prefix.size() - 1;
    double worst = 0.0, diam = 0.0;
    for (std::size_t i = j; i-- > 0;) {
        for (std::size_t t = i + 1; t <= j; ++t)
            diam = std::max(diam, space.dist(prefix[i], prefix[t]));
        worst = std::max(worst, diam / space.dist(prefix[i], prefix[j]));
    }
    return worst;
}

} // namespace

OrderAssignment monotonicity_constant(const FiniteMetricSpace& space,
                                      const std::vector<int>& order) {
    check_permutation(space, order);
    OrderAssignment out;
    out.order = order;
    out.c_value = prefix_constant(space, order, order.size(), &out.certificate);
    return out;
}

double brute_force_min_c(const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    if (n > 8)
        throw std::invalid_argument("brute_force_min_c is capped at 8 points, got " +
                                    std::to_string(n));
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    double best = n < 2 ? 0.0 : std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, prefix_constant(space, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct ExactSearch {
    const FiniteMetricSpace& space;
    std::size_t n;
    std::vector<int> prefix;
    std::vector<char> used;
    double best_c = std::numeric_limits<double>::infinity();
    std::vector<int> best_order;

    explicit ExactSearch(const FiniteMetricSpace& s) : space(s), n(s.size()), used(n, 0) {
        prefix.reserve(n);
    }

    // Depth-first in increasing point index, so complete orders are reached in
    // lexicographic sequence. Partial constants only grow under extension, so
    // a branch is pruned as soon as it cannot strictly beat the incumbent;
    // ties therefore keep the first (lexicographically smallest) optimum.
    void extend(double partial_c) {
        if (prefix.size() == n) {
            best_c = partial_c;
            best_order = prefix;
            return;
        }
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            prefix.push_back(static_cast<int>(p));
            double c = std::max(partial_c, extension_constant(space, prefix));
            if (c < best_c) {
                used[p] = 1;
                extend(c);
                used[p] = 0;
            }
            prefix.pop_back();
        }
    }
};

OrderAssignment heuristic_min_c(const FiniteMetricSpace& space, long budget) {
    const std::size_t n = space.size();
    std::vector<int> order;
    order.reserve(n);

    // Greedy insertion: place points in index order, each at the position that
    // keeps the prefix constant smallest (earliest position on ties).
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t best_pos = 0;
        double best_val = std::numeric_limits<double>::infinity();
        std::vector<int> candidate;
        for (std::size_t pos = 0; pos <= order.size(); ++pos) {
            candidate = order;
            candidate.insert(candidate.begin() + static_cast<long>(pos), static_cast<int>(p));
            double v = prefix_constant(space, candidate, candidate.size());
            if (v < best_val) {
                best_val = v;
                best_pos = pos;
            }
        }
        order.insert(order.begin() + static_cast<long>(best_pos), static_cast<int>(p));
    }

    // Pairwise-swap local search, best improvement first, until no swap helps
    // or the evaluation budget runs out.
    double current = prefix_constant(space, order, n);
    bool improved = true;
    while (improved && budget > 0) {
        improved = false;
        std::size_t bi = 0, bj = 0;
        double best_val = current;
        for (std::size_t i = 0; i < n && budget > 0; ++i)
            for (std::size_t j = i + 1; j < n && budget > 0; ++j) {
                std::swap(order[i], order[j]);
                double v = prefix_constant(space, order, n);
                --budget;
                std::swap(order[i], order[j]);
                if (v < best_val) {
                    best_val = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best_val < current) {
            std::swap(order[bi], order[bj]);
            current = best_val;
            improved = true;
        }
    }
    return monotonicity_constant(space, order);
}

} // namespace

OrderAssignment search_min_c(const FiniteMetricSpace& space, const SearchOptions& opts) {
    const std::size_t n = space.size();
    if (n == 0) throw std::invalid_argument("empty space has no order");

    if (opts.mode == SearchMode::Heuristic) return heuristic_min_c(space, opts.budget);

    if (n > static_cast<std::size_t>(opts.exact_cap))
        throw std::invalid_argument("exact search capped at " + std::to_string(opts.exact_cap) +
                                    " points (got " + std::to_string(n) +
                                    "); use heuristic mode");
    ExactSearch search(space);
    search.extend(0.0);
    return monotonicity_constant(space, search.best_order);
}

} // namespace cubemap
