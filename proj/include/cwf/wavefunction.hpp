#pragma once

#include <complex>
#include <vector>

#include "cwf/exec.hpp"
#include "cwf/grid.hpp"
#include "cwf/orbit.hpp"
#include "cwf/radial_profile.hpp"
#include "cwf/report.hpp"

namespace cwf {

// One evaluation of the classical wave function psi = rho e^{iS}.
struct FieldSample {
    double rho = 0.0;
    double S = 0.0;
    std::complex<double> psi;
};

// rho(r) = C / (sqrt(r |l|) f(r)^{1/4}); diverges at the turning points.
// Throws DensitySingularityError when f(r) <= 0.
double density(const OrbitParams& p, double C, double r);

// Normalization constant C with int rho^2 r dr dphi = 1 over the accessible
// annulus, via the same endpoint-regularized quadrature as the orbit
// integrals (the integrand carries 1/p_r). Rejects near-circular orbits
// (eccentricity_like < 1e-6) with DegenerateAnnulusError.
double normalize(const OrbitParams& p);

FieldSample wavefunction(const PrincipalFunction& pf, double C, double r,
                         double phi, double t);

// Residual of (1/r) d_r(r rho^2 d_r S) + (1/r^2) d_phi(rho^2 d_phi S)
// + m d_t rho^2 on the grid. The outer derivatives are centered differences
// across grid rows/columns; d_r S comes from the interpolant derivative of R
// and d_t rho^2 = 0 (the density is stationary). Boundary rows are excluded.
// Norms are normalized by max|rho^2 d_r S| / (r_max - r_min).
ResidualReport continuity_residual(const OrbitParams& p,
                                   const PrincipalFunction& pf, double C,
                                   const PolarGrid& grid,
                                   Exec exec = Exec::parallel);

// Full field tabulation for export: psi at every grid point at time t.
struct FieldGrid {
    PolarGrid grid;
    double t = 0.0;
    std::vector<FieldSample> samples;  // row-major (i * n_phi + j)

    const FieldSample& at(int i, int j) const {
        return samples[static_cast<std::size_t>(i) * grid.n_phi + j];
    }
};

FieldGrid build_field_grid(const PrincipalFunction& pf, double C,
                           const PolarGrid& grid, double t,
                           Exec exec = Exec::parallel);

}  // namespace cwf
