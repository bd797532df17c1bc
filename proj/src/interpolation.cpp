#include "cwf/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwf {

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y,
                           std::vector<double> dydx, bool monotone_limit)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(dydx)) {
    if (x_.size() < 2 || x_.size() != y_.size() || x_.size() != d_.size())
        throw std::invalid_argument("CubicHermite: inconsistent table sizes");
    for (std::size_t i = 0; i + 1 < x_.size(); ++i)
        if (!(x_[i] < x_[i + 1]))
            throw std::invalid_argument("CubicHermite: abscissa not increasing");

    if (!monotone_limit) return;

    // Fritsch-Carlson: on cells where the data are monotone, keep
    // (alpha, beta) inside the circle of radius 3 so the cubic is too.
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double h = x_[i + 1] - x_[i];
        const double secant = (y_[i + 1] - y_[i]) / h;
        if (secant == 0.0) continue;
        const double alpha = d_[i] / secant;
        const double beta = d_[i + 1] / secant;
        if (alpha < 0.0 || beta < 0.0) continue;  // local extremum, leave as is
        const double rad = alpha * alpha + beta * beta;
        if (rad > 9.0) {
            const double scale = 3.0 / std::sqrt(rad);
            d_[i] = scale * alpha * secant;
            d_[i + 1] = scale * beta * secant;
        }
    }
}

std::size_t CubicHermite::cell(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    auto j = static_cast<std::size_t>(it - x_.begin());
    if (j == 0) return 0;
    if (j > x_.size() - 1) return x_.size() - 2;
    return j - 1;
}

double CubicHermite::value(double x) const {
    const std::size_t j = cell(x);
    const double h = x_[j + 1] - x_[j];
    const double s = (x - x_[j]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[j] + h * h10 * d_[j] + h01 * y_[j + 1] + h * h11 * d_[j + 1];
}

double CubicHermite::derivative(double x) const {
    const std::size_t j = cell(x);
    const double h = x_[j + 1] - x_[j];
    const double s = (x - x_[j]) / h;
    const double d00 = (6 * s * s - 6 * s) / h;
    const double d10 = 3 * s * s - 4 * s + 1;
    const double d01 = (6 * s - 6 * s * s) / h;
    const double d11 = 3 * s * s - 2 * s;
    return d00 * y_[j] + d10 * d_[j] + d01 * y_[j + 1] + d11 * d_[j + 1];
}

}  // namespace cwf
