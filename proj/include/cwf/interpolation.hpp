#pragma once

#include <vector>

namespace cwf {

// Piecewise cubic Hermite interpolant on a strictly increasing abscissa.
// Slopes are supplied by the caller (typically exact analytic derivatives);
// an optional Fritsch-Carlson limiter clamps them where the cubic would
// otherwise overshoot monotone data.
class CubicHermite {
public:
    CubicHermite() = default;
    CubicHermite(std::vector<double> x, std::vector<double> y,
                 std::vector<double> dydx, bool monotone_limit);

    double value(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t cell(double x) const;

    std::vector<double> x_, y_, d_;
};

}  // namespace cwf
