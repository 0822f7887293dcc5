#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cubemap {

/// Finite metric space: point labels plus a symmetric distance matrix.
/// The constructor enforces structure only (square, finite, non-negative
/// entries); whether the matrix is an actual metric is reported by
/// validate_metric, not assumed.
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist_row_major);

    static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& rows,
                                         std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    double dist(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> d_;
};

struct MetricCheck {
    bool is_metric = false;
    bool is_ultrametric = false;
    // Triple (i, j, k) violating the triangle (or max-) inequality, or a pair
    // breaking a basic axiom encoded as (i, j, j). Present iff a flag is false.
    std::optional<std::array<std::size_t, 3>> witness;
    std::string note;
};

/// Classifies a distance matrix. Structural problems (non-square, negative,
/// non-finite entries) throw std::invalid_argument naming the offending entry;
/// metric-axiom failures come back as flags with a witness triple.
MetricCheck validate_metric(const std::vector<std::vector<double>>& rows);
MetricCheck validate_metric(const FiniteMetricSpace& space);

/// diam{x : a <= x <= b} under the linear order given as a permutation
/// (order[rank] = point index). Requires a <= b in the order.
double interval_diameter(const FiniteMetricSpace& space, const std::vector<int>& order,
                         int a, int b);

} // namespace cubemap
