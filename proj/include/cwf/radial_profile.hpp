#pragma once

#include <vector>

#include "cwf/exec.hpp"
#include "cwf/grid.hpp"
#include "cwf/interpolation.hpp"
#include "cwf/orbit.hpp"
#include "cwf/report.hpp"

namespace cwf {

struct ProfileNode {
    double r;    // radius
    double p_r;  // radial momentum sqrt(f(r)), outgoing branch
    double R;    // radial action, zero at r_ref
    double t;    // time of flight from r_ref
    double phi;  // swept orbital angle from r_ref
};

enum class Branch { outgoing };  // p_r >= 0 half-orbit from periapsis

struct ProfileOptions {
    int n_nodes = 2048;
    double abs_tol = 1e-10;  // per-node absolute quadrature target
    int max_depth = 14;
};

// Tabulated quadrature of the radial action R(r) = int sqrt(f) dr, the time
// of flight t(r) = int m/sqrt(f) dr and the angle phi(r) = int l/(r^2
// sqrt(f)) dr along the outgoing branch.
//
// Nodes are uniform in the regularizing variable u of the substitution
// r = r_min + (r_max - r_min) sin^2(u): f factors as (r - r_min)(r_max - r)
// g(r), so all three integrands become smooth on [0, pi/2] and the du-slopes
// are known in closed form. The in-between representation is cubic Hermite
// in u with those exact slopes (monotone-limited), so interpolation error
// stays far below the quadrature target.
class RadialProfile {
public:
    static RadialProfile build(const OrbitParams& p, int n_nodes, double r_ref);
    static RadialProfile build(const OrbitParams& p, double r_ref,
                               const ProfileOptions& opt);

    const OrbitParams& params() const { return params_; }
    const TurningPoints& turning() const { return tp_; }
    const std::vector<ProfileNode>& nodes() const { return nodes_; }
    Branch branch() const { return Branch::outgoing; }
    double r_ref() const { return r_ref_; }
    double r_min() const { return tp_.r_min; }
    double r_max() const { return tp_.r_max; }

    double action(double r) const;             // R(r)
    double action_derivative(double r) const;  // dR/dr of the interpolant
    double time_of_flight(double r) const;     // t(r)
    double sweep_angle(double r) const;        // phi(r)
    double radial_momentum(double r) const;    // sqrt(max(f, 0))

    // Full radial period T_r = 2 (t(r_max) - t(r_min)); independent of r_ref.
    double radial_period() const;

private:
    double u_of_r(double r) const;

    OrbitParams params_;
    TurningPoints tp_;
    double r_ref_ = 0.0;
    std::vector<ProfileNode> nodes_;
    CubicHermite action_u_, time_u_, angle_u_;  // tabulated against u
};

// Hamilton's principal function S(r, phi, t) = R(r) + l phi - E t. The phi
// and t dependence is analytic; only R is interpolated.
struct PrincipalFunction {
    RadialProfile profile;
    int interpolation_order = 3;
};

double principal_function(const PrincipalFunction& pf, double r, double phi,
                          double t);

// Residual of (1/2m)(dS/dr)^2 + l^2/(2m r^2) + V(r) - E on the grid, with
// dS/dr from centered differences of R at step fd_step_rel * (r_max - r_min).
// Reported norms are normalized by |E|.
ResidualReport hj_residual(const PrincipalFunction& pf, const PolarGrid& grid,
                           double fd_step_rel = 1e-4,
                           Exec exec = Exec::parallel);

}  // namespace cwf
