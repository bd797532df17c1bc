#pragma once

#include <complex>
#include <vector>

#include "cwf/orbit.hpp"

namespace cwf {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Discretized (r, phi) annulus. Radial rows carry explicit coordinates (so
// graded spacings are allowed); phi is uniform on [0, 2pi).
struct PolarGrid {
    std::vector<double> r;
    int n_phi = 0;
    double margin_fraction = 0.0;  // metadata when built over an annulus

    // Rows placed uniformly between the margins of the accessible annulus:
    // r_lo = r_min + margin * (r_max - r_min), r_hi symmetric.
    static PolarGrid annulus(const TurningPoints& tp, double margin, int n_r,
                             int n_phi);
    // Free-standing uniform grid (synthetic-field tests, generic kernels).
    static PolarGrid uniform(double r_lo, double r_hi, int n_r, int n_phi);

    int n_r() const { return static_cast<int>(r.size()); }
    double r_lo() const { return r.front(); }
    double r_hi() const { return r.back(); }
    double phi(int j) const { return two_pi * j / n_phi; }
    double phi_step() const { return two_pi / n_phi; }
    // Representative radial step (exact for uniform grids).
    double r_step() const { return (r.back() - r.front()) / (n_r() - 1); }
};

template <typename T>
struct Grid {
    int n_r = 0;
    int n_phi = 0;
    std::vector<T> v;

    Grid() = default;
    Grid(int nr, int np) : n_r(nr), n_phi(np), v(static_cast<std::size_t>(nr) * np) {}

    T& at(int i, int j) { return v[static_cast<std::size_t>(i) * n_phi + j]; }
    const T& at(int i, int j) const {
        return v[static_cast<std::size_t>(i) * n_phi + j];
    }
};

using RealGrid = Grid<double>;
using ComplexGrid = Grid<std::complex<double>>;

}  // namespace cwf
