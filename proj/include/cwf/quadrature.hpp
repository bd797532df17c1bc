#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "cwf/errors.hpp"

namespace cwf {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]. Even indices of the
// Kronrod nodes coincide with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 15> kronrod_x = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr std::array<double, 15> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr std::array<double, 7> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

}  // namespace detail

// One Gauss-Kronrod 7/15 panel; the error estimate is the Gauss/Kronrod
// discrepancy.
template <typename F>
QuadratureResult gk15_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(mid + half * detail::kronrod_x[i]);
        kronrod += detail::kronrod_w[i] * v;
        if (i % 2 == 1) gauss += detail::gauss_w[i / 2] * v;
    }
    return {half * kronrod, std::abs(half * (kronrod - gauss))};
}

// Adaptive bisection driven by the panel error estimate. Throws
// QuadratureError when max_depth is exhausted before abs_tol is met.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           int max_depth = 14) {
    struct Recurse {
        F& f;
        double tol_floor;
        QuadratureResult run(double a, double b, double tol, int depth) {
            QuadratureResult whole = gk15_panel(f, a, b);
            if (whole.error_estimate <= std::max(tol, tol_floor) || depth <= 0) {
                if (whole.error_estimate > std::max(tol, tol_floor))
                    throw QuadratureError("quadrature failure", whole.error_estimate);
                return whole;
            }
            const double mid = 0.5 * (a + b);
            QuadratureResult left = run(a, mid, 0.5 * tol, depth - 1);
            QuadratureResult right = run(mid, b, 0.5 * tol, depth - 1);
            return {left.value + right.value,
                    left.error_estimate + right.error_estimate};
        }
    };
    // Do not chase tolerances below roundoff of the panel sum.
    const double scale = std::abs(gk15_panel(f, a, b).value);
    Recurse rec{f, 64.0 * std::numeric_limits<double>::epsilon() * scale};
    return rec.run(a, b, abs_tol, max_depth);
}

}  // namespace cwf
