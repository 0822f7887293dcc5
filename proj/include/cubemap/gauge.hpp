#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cubemap {

/// Strictly increasing bijection [0,inf) -> [0,inf) with phi(0) = 0, carried
/// together with its exact inverse. Two representations: the power family
/// t^alpha, and a tabulated monotone polyline (linear interpolation between
/// knots, linear extrapolation beyond the last knot so the map stays onto).
class GaugeFunction {
public:
    static GaugeFunction power(double alpha);
    static GaugeFunction table(std::vector<double> t, std::vector<double> phi);
    static GaugeFunction identity() { return power(1.0); }

    double operator()(double t) const;
    double inverse(double y) const;

    bool is_power() const { return kind_ == Kind::Power; }
    double alpha() const { return alpha_; }
    const std::vector<double>& knots_t() const { return t_; }
    const std::vector<double>& knots_phi() const { return phi_; }

private:
    enum class Kind { Power, Table };
    Kind kind_ = Kind::Power;
    double alpha_ = 1.0;
    std::vector<double> t_, phi_;

    GaugeFunction() = default;
};

/// g: {1, 2, ...} -> (0, inf), strictly decreasing where tabulated. Values are
/// stored for m = 1..depth; points of the sequence space are finite prefixes,
/// so a finite tabulation is all the artifact ever needs.
class DecreasingSequence {
public:
    static DecreasingSequence from_values(std::vector<double> values);
    static DecreasingSequence tabulate(const std::function<double(int)>& g, int depth);
    static DecreasingSequence harmonic(int depth);                       // 1/m
    static DecreasingSequence geometric(double ratio, double scale, int depth); // scale*ratio^m

    double at(int m) const; // 1-based
    int depth() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// g with phi o g = phi0 o g0 pointwise on the tabulation grid,
/// i.e. g(m) = phi^{-1}(phi0(g0(m))).
DecreasingSequence remetrize_gauge(const DecreasingSequence& g0, const GaugeFunction& phi0,
                                   const GaugeFunction& phi);

/// d_g(x, y) = g(|common prefix| + 1); 0 iff the prefixes are identical.
/// Throws UndecidedAtDepth when the prefixes coincide to their full tabulated
/// length without being identical.
double dg_distance(std::span<const int> x, std::span<const int> y,
                   const DecreasingSequence& g);

} // namespace cubemap
