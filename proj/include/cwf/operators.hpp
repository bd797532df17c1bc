#pragma once

#include <complex>
#include <functional>

#include "cwf/exec.hpp"
#include "cwf/grid.hpp"
#include "cwf/orbit.hpp"
#include "cwf/radial_profile.hpp"
#include "cwf/report.hpp"
#include "cwf/wavefunction.hpp"

namespace cwf {

// Finite-difference polar Laplacian (1/r) d_r(r d_r f) + (1/r^2) d^2_phi f.
// Radial stencil is the centered 3-point form aware of non-uniform row
// spacing; phi is the periodic centered stencil. Fields that pick up a
// constant factor across the phi seam (psi with non-integer l) pass it as
// seam_phase: f(phi + 2pi) = seam_phase * f(phi). Boundary rows of the
// output are marked invalid with NaN.
ComplexGrid polar_laplacian(const ComplexGrid& field, const PolarGrid& grid,
                            std::complex<double> seam_phase = 1.0,
                            Exec exec = Exec::parallel);
RealGrid polar_laplacian(const RealGrid& field, const PolarGrid& grid,
                         Exec exec = Exec::parallel);

// Quantum-potential term (1/2m) lap(rho)/rho from a tabulated density grid.
RealGrid quantum_potential_of(const RealGrid& rho, const PolarGrid& grid,
                              double m, Exec exec = Exec::parallel);
// Same, with rho built from the closed-form density of p.
RealGrid quantum_potential(const OrbitParams& p, double C,
                           const PolarGrid& grid, Exec exec = Exec::parallel);

// d f / dr of radial_momentum_sq (used by analytic-derivative paths).
double radial_momentum_sq_derivative(const OrbitParams& p, double r);
// Analytic d rho / dr of the closed-form density.
double density_derivative(const OrbitParams& p, double C, double r);

enum class DerivSource { interpolated, analytic };

// A stationary separable state rho(r) e^{i(S_r(r) + l phi - E t)} described
// functionally, so native profiles and Levi-Civita-mapped fields go through
// one evaluator. Optional d_* members supply analytic derivatives; when
// absent the evaluators fall back to centered differences at the given step.
struct StationaryFields {
    double m = 1.0;
    double E = 0.0;
    double l = 0.0;
    std::function<double(double)> potential;      // V(r)
    std::function<double(double)> radial_action;  // S_r(r)
    std::function<double(double)> rho;
    std::function<double(double)> d_radial_action;    // optional
    std::function<double(double)> d_rho;              // optional
    std::function<double(double)> lap_radial_action;  // optional (1/r) d_r(r dS_r)
};

StationaryFields fields_of(const PrincipalFunction& pf, double C);

ResidualReport hj_field_residual(const StationaryFields& f,
                                 const PolarGrid& grid, double fd_step,
                                 Exec exec = Exec::parallel);
ResidualReport continuity_field_residual(const StationaryFields& f,
                                         const PolarGrid& grid,
                                         double annulus_width,
                                         Exec exec = Exec::parallel);
ResidualReport sle_field_residual(const StationaryFields& f,
                                  const PolarGrid& grid, double fd_step,
                                  Exec exec = Exec::parallel);

// Pointwise residual of H_cl psi = i d_t psi for the stationary state, with
// the time derivative replaced analytically by -iE psi. The Laplacian of
// psi = rho e^{iS} is expanded by the product rule, so the (1/2m) lap(rho)
// quantum-potential term cancels its counterpart in H_cl exactly and the
// real/imaginary parts reduce to the Hamilton-Jacobi and continuity
// expressions. Norms are max/rms of |residual| / (|E| |psi|).
ResidualReport sle_residual(const OrbitParams& p, const PrincipalFunction& pf,
                            double C, const PolarGrid& grid,
                            double fd_step_rel = 1e-4,
                            DerivSource source = DerivSource::interpolated,
                            Exec exec = Exec::parallel);

}  // namespace cwf
