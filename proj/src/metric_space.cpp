#include "cubemap/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cubemap {

namespace {

[[noreturn]] void reject_entry(std::size_t i, std::size_t j, const char* why) {
    throw std::invalid_argument("dist[" + std::to_string(i) + "][" + std::to_string(j) +
                                "]: " + why);
}

} // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> dist_row_major)
    : labels_(std::move(labels)), d_(std::move(dist_row_major)) {
    n_ = labels_.size();
    if (d_.size() != n_ * n_)
        throw std::invalid_argument("distance matrix is not n x n for n = " +
                                    std::to_string(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            double v = d_[i * n_ + j];
            if (!std::isfinite(v)) reject_entry(i, j, "non-finite entry");
            if (v < 0.0) reject_entry(i, j, "negative entry");
        }
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& rows,
                                                 std::vector<std::string> labels) {
    std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n) reject_entry(i, rows[i].size(), "row length != n (non-square)");
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    }
    if (labels.size() != n) throw std::invalid_argument("label count != point count");
    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = rows[i][j];
    return FiniteMetricSpace(std::move(labels), std::move(flat));
}

MetricCheck validate_metric(const std::vector<std::vector<double>>& rows) {
    return validate_metric(FiniteMetricSpace::from_matrix(rows));
}

// All comparisons on the raw input values are exact: inputs are taken verbatim
// and the flags must be reproducible, so no tolerance is applied here.
MetricCheck validate_metric(const FiniteMetricSpace& s) {
    MetricCheck out;
    const std::size_t n = s.size();

    for (std::size_t i = 0; i < n; ++i) {
        if (s.dist(i, i) != 0.0) {
            out.witness = {{i, i, i}};
            out.note = "dist[i][i] != 0";
            return out;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.dist(i, j) != s.dist(j, i)) {
                out.witness = {{i, j, j}};
                out.note = "asymmetric entry";
                return out;
            }
            if (s.dist(i, j) == 0.0) {
                out.witness = {{i, j, j}};
                out.note = "zero distance between distinct points";
                return out;
            }
        }
    }

    bool triangle = true, ultra = true;
    std::optional<std::array<std::size_t, 3>> tri_witness, ultra_witness;
    for (std::size_t i = 0; i < n && (triangle || ultra); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double via = std::max(s.dist(i, k), s.dist(j, k));
                if (ultra && s.dist(i, j) > via) {
                    ultra = false;
                    ultra_witness = {{i, j, k}};
                }
                if (triangle && s.dist(i, j) > s.dist(i, k) + s.dist(k, j)) {
                    triangle = false;
                    tri_witness = {{i, j, k}};
                }
            }
        }

    out.is_metric = triangle;
    out.is_ultrametric = triangle && ultra;
    if (!triangle) {
        out.witness = tri_witness;
        out.note = "triangle inequality fails";
    } else if (!ultra) {
        out.witness = ultra_witness;
        out.note = "max-inequality fails";
    }
    return out;
}

double interval_diameter(const FiniteMetricSpace& space, const std::vector<int>& order,
                         int a, int b) {
    const std::size_t n = space.size();
    if (order.size() != n) throw std::invalid_argument("order is not a permutation of the space");
    std::vector<int> rank(n, -1);
    for (std::size_t r = 0; r < n; ++r) {
        int p = order[r];
        if (p < 0 || static_cast<std::size_t>(p) >= n || rank[p] != -1)
            throw std::invalid_argument("order is not a permutation of the space");
        rank[p] = static_cast<int>(r);
    }
    if (a < 0 || static_cast<std::size_t>(a) >= n || b < 0 || static_cast<std::size_t>(b) >= n)
        throw std::invalid_argument("interval endpoint out of range");
    if (rank[a] > rank[b]) throw std::invalid_argument("interval endpoints out of order: a > b");

    double diam = 0.0;
    for (int r1 = rank[a]; r1 <= rank[b]; ++r1)
        for (int r2 = r1 + 1; r2 <= rank[b]; ++r2)
            diam = std::max(diam, space.dist(order[r1], order[r2]));
    return diam;
}

} // namespace cubemap
