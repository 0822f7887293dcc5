#pragma once

#include "cubemap/metric_space.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cubemap {

/// A linear order on a finite space together with its monotonicity data:
/// c_value is the least C such that diam([a,b]) <= C * d(a,b) for every
/// ordered pair, and certificate is a pair attaining that maximum ratio.
struct OrderAssignment {
    std::vector<int> order;          // order[rank] = point index
    double c_value = 0.0;            // >= 1 for any space with >= 2 points
    std::array<int, 2> certificate{-1, -1};
};

/// max over ordered pairs a < b of diam([a,b]) / d(a,b), with the attaining
/// pair. A space with fewer than two points reports 0 and no certificate.
OrderAssignment monotonicity_constant(const FiniteMetricSpace& space,
                                      const std::vector<int>& order);

enum class SearchMode { Exact, Heuristic };

struct SearchOptions {
    SearchMode mode = SearchMode::Exact;
    int exact_cap = 10;        // exact mode rejects spaces larger than this
    long budget = 10000;       // heuristic: max constant evaluations
};

/// Minimizes the monotonicity constant over linear orders. Exact mode runs a
/// branch-and-bound over order prefixes and returns the global minimum (ties
/// resolved to the lexicographically smallest permutation); heuristic mode is
/// greedy insertion plus pairwise-swap local search within the budget.
OrderAssignment search_min_c(const FiniteMetricSpace& space, const SearchOptions& opts);

/// Exhaustive minimum over all n! orders; ground truth for search_min_c.
/// Rejects n > 8.
double brute_force_min_c(const FiniteMetricSpace& space);

} // namespace cubemap
