#include "cubemap/gauge.hpp"

#include "cubemap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cubemap {

GaugeFunction GaugeFunction::power(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("gauge exponent must be positive and finite");
    GaugeFunction g;
    g.kind_ = Kind::Power;
    g.alpha_ = alpha;
    return g;
}

GaugeFunction GaugeFunction::table(std::vector<double> t, std::vector<double> phi) {
    if (t.size() != phi.size() || t.size() < 2)
        throw std::invalid_argument("gauge table needs >= 2 matching knots");
    if (t.front() != 0.0 || phi.front() != 0.0)
        throw std::invalid_argument("gauge table must start at (0, 0)");
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        // Strict monotonicity in both coordinates is what makes the polyline
        // invertible; anything else is a non-invertible tabulation.
        if (!(t[i] < t[i + 1]) || !(phi[i] < phi[i + 1]))
            throw std::invalid_argument("non-invertible gauge tabulation at knot " +
                                        std::to_string(i + 1));
        if (!std::isfinite(t[i + 1]) || !std::isfinite(phi[i + 1]))
            throw std::invalid_argument("non-finite gauge knot");
    }
    GaugeFunction g;
    g.kind_ = Kind::Table;
    g.t_ = std::move(t);
    g.phi_ = std::move(phi);
    return g;
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x < 0.0) throw std::invalid_argument("gauge argument must be >= 0");
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    if (hi == xs.size()) hi = xs.size() - 1; // extrapolate with the last slope
    std::size_t lo = hi - 1;
    double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

} // namespace

double GaugeFunction::operator()(double t) const {
    if (t < 0.0) throw std::invalid_argument("gauge argument must be >= 0");
    if (kind_ == Kind::Power) return std::pow(t, alpha_);
    return interp(t_, phi_, t);
}

double GaugeFunction::inverse(double y) const {
    if (y < 0.0) throw std::invalid_argument("gauge inverse argument must be >= 0");
    if (kind_ == Kind::Power) return std::pow(y, 1.0 / alpha_);
    return interp(phi_, t_, y);
}

DecreasingSequence DecreasingSequence::from_values(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("sequence tabulation is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i]))
            throw std::invalid_argument("sequence value g(" + std::to_string(i + 1) +
                                        ") must be positive and finite");
        if (i > 0 && !(values[i] < values[i - 1]))
            throw std::invalid_argument("sequence not strictly decreasing at m = " +
                                        std::to_string(i + 1));
    }
    DecreasingSequence s;
    s.values_ = std::move(values);
    return s;
}

DecreasingSequence DecreasingSequence::tabulate(const std::function<double(int)>& g, int depth) {
    if (depth < 1) throw std::invalid_argument("tabulation depth must be >= 1");
    std::vector<double> v(static_cast<std::size_t>(depth));
    for (int m = 1; m <= depth; ++m) v[static_cast<std::size_t>(m - 1)] = g(m);
    return from_values(std::move(v));
}

DecreasingSequence DecreasingSequence::harmonic(int depth) {
    return tabulate([](int m) { return 1.0 / m; }, depth);
}

DecreasingSequence DecreasingSequence::geometric(double ratio, double scale, int depth) {
    if (!(ratio > 0.0) || !(ratio < 1.0))
        throw std::invalid_argument("geometric ratio must lie in (0, 1)");
    if (!(scale > 0.0)) throw std::invalid_argument("geometric scale must be positive");
    return tabulate([=](int m) { return scale * std::pow(ratio, m); }, depth);
}

double DecreasingSequence::at(int m) const {
    if (m < 1 || m > depth())
        throw std::invalid_argument("sequence not tabulated at m = " + std::to_string(m));
    return values_[static_cast<std::size_t>(m - 1)];
}

DecreasingSequence remetrize_gauge(const DecreasingSequence& g0, const GaugeFunction& phi0,
                                   const GaugeFunction& phi) {
    std::vector<double> v(g0.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = phi.inverse(phi0(g0.values()[i]));
    return DecreasingSequence::from_values(std::move(v));
}

double dg_distance(std::span<const int> x, std::span<const int> y,
                   const DecreasingSequence& g) {
    if (x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin())) return 0.0;
    std::size_t shared = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < shared; ++i) {
        if (x[i] != y[i]) {
            int m = static_cast<int>(i) + 1; // |x ^ y| + 1
            return g.at(m);
        }
    }
    throw UndecidedAtDepth("prefixes agree to depth " + std::to_string(shared) +
                           " without being identical; undecided at this depth");
}

} // namespace cubemap
