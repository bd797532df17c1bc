#include "cwf/radial_profile.hpp"

#include <cmath>
#include <stdexcept>

#include "cwf/quadrature.hpp"

namespace cwf {

namespace {

constexpr double half_pi = 1.5707963267948966192313216916398;

struct Integrands {
    const OrbitParams& p;
    const TurningPoints& tp;

    double r_of_u(double u) const {
        const double s = std::sin(u);
        return tp.r_min + tp.width() * s * s;
    }
    // Slopes in u of (R, t, phi); all smooth through the turning points.
    void slopes(double u, double& dR, double& dt, double& dphi) const {
        const double r = r_of_u(u);
        const double sg = std::sqrt(edge_factor(p, tp, r));
        const double su = std::sin(u), cu = std::cos(u);
        const double w = tp.width();
        dR = 2.0 * w * w * su * su * cu * cu * sg;
        dt = 2.0 * p.m / sg;
        dphi = 2.0 * p.l / (r * r * sg);
    }
};

}  // namespace

RadialProfile RadialProfile::build(const OrbitParams& p, int n_nodes,
                                   double r_ref) {
    ProfileOptions opt;
    opt.n_nodes = n_nodes;
    return build(p, r_ref, opt);
}

RadialProfile RadialProfile::build(const OrbitParams& p, double r_ref,
                                   const ProfileOptions& opt) {
    if (opt.n_nodes < 16)
        throw std::invalid_argument("profile needs at least 16 nodes");
    RadialProfile prof;
    prof.params_ = p;
    prof.tp_ = turning_points(p);  // throws UnboundStateError if unbound
    if (std::isnan(r_ref)) r_ref = prof.tp_.r_min;
    if (!(r_ref >= prof.tp_.r_min && r_ref < prof.tp_.r_max))
        throw std::domain_error("r_ref must lie in [r_min, r_max)");
    prof.r_ref_ = r_ref;

    const int n = opt.n_nodes;
    Integrands ig{p, prof.tp_};

    std::vector<double> u(n), R(n), t(n), phi(n), dR(n), dt(n), dphi(n);
    for (int j = 0; j < n; ++j) {
        u[j] = half_pi * j / (n - 1);
        ig.slopes(u[j], dR[j], dt[j], dphi[j]);
    }

    // Cumulative per-interval quadrature; the per-node error budget is split
    // across intervals so every tabulated value meets opt.abs_tol.
    const double tol = opt.abs_tol / (n - 1);
    double errR = 0.0, errt = 0.0, errphi = 0.0;
    for (int j = 1; j < n; ++j) {
        double s0, s1, s2;
        auto fR = [&](double uu) { ig.slopes(uu, s0, s1, s2); return s0; };
        auto ft = [&](double uu) { ig.slopes(uu, s0, s1, s2); return s1; };
        auto fp = [&](double uu) { ig.slopes(uu, s0, s1, s2); return s2; };
        QuadratureResult qR = integrate(fR, u[j - 1], u[j], tol, opt.max_depth);
        QuadratureResult qt = integrate(ft, u[j - 1], u[j], tol, opt.max_depth);
        QuadratureResult qp = integrate(fp, u[j - 1], u[j], tol, opt.max_depth);
        R[j] = R[j - 1] + qR.value;
        t[j] = t[j - 1] + qt.value;
        phi[j] = phi[j - 1] + qp.value;
        errR += qR.error_estimate;
        errt += qt.error_estimate;
        errphi += qp.error_estimate;
    }
    const double worst = std::max({errR, errt, std::abs(errphi)});
    if (worst > opt.abs_tol)
        throw QuadratureError("quadrature failure: accumulated node error", worst);

    prof.nodes_.resize(n);
    for (int j = 0; j < n; ++j) {
        const double r = ig.r_of_u(u[j]);
        const double su = std::sin(u[j]), cu = std::cos(u[j]);
        const double p_r = prof.tp_.width() * su * cu *
                           std::sqrt(edge_factor(p, prof.tp_, r));
        prof.nodes_[j] = {r, p_r, R[j], t[j], phi[j]};
    }

    prof.action_u_ = CubicHermite(u, R, dR, true);
    prof.time_u_ = CubicHermite(u, t, dt, true);
    prof.angle_u_ = CubicHermite(u, phi, dphi, true);

    // Shift so that R(r_ref) = t(r_ref) = phi(r_ref) = 0.
    if (r_ref > prof.tp_.r_min) {
        const double u0 = prof.u_of_r(r_ref);
        const double R0 = prof.action_u_.value(u0);
        const double t0 = prof.time_u_.value(u0);
        const double phi0 = prof.angle_u_.value(u0);
        for (int j = 0; j < n; ++j) {
            R[j] -= R0;
            t[j] -= t0;
            phi[j] -= phi0;
            prof.nodes_[j].R = R[j];
            prof.nodes_[j].t = t[j];
            prof.nodes_[j].phi = phi[j];
        }
        prof.action_u_ = CubicHermite(u, R, dR, true);
        prof.time_u_ = CubicHermite(u, t, dt, true);
        prof.angle_u_ = CubicHermite(u, phi, dphi, true);
    }
    return prof;
}

double RadialProfile::u_of_r(double r) const {
    if (!(r >= tp_.r_min && r <= tp_.r_max))
        throw std::domain_error("radius outside the profile range");
    double x = (r - tp_.r_min) / tp_.width();
    if (x < 0.0) x = 0.0;
    if (x > 1.0) x = 1.0;
    return std::asin(std::sqrt(x));
}

double RadialProfile::action(double r) const {
    return action_u_.value(u_of_r(r));
}

double RadialProfile::action_derivative(double r) const {
    const double u = u_of_r(r);
    const double drdu = tp_.width() * std::sin(2.0 * u);
    if (drdu == 0.0) return radial_momentum(r);  // dR/dr -> p_r at the ends
    return action_u_.derivative(u) / drdu;
}

double RadialProfile::time_of_flight(double r) const {
    return time_u_.value(u_of_r(r));
}

double RadialProfile::sweep_angle(double r) const {
    return angle_u_.value(u_of_r(r));
}

double RadialProfile::radial_momentum(double r) const {
    const double f = radial_momentum_sq(params_, r);
    return f > 0.0 ? std::sqrt(f) : 0.0;
}

double RadialProfile::radial_period() const {
    return 2.0 * (nodes_.back().t - nodes_.front().t);
}

double principal_function(const PrincipalFunction& pf, double r, double phi,
                          double t) {
    const OrbitParams& p = pf.profile.params();
    return pf.profile.action(r) + p.l * phi - p.E * t;
}

ResidualReport hj_residual(const PrincipalFunction& pf, const PolarGrid& grid,
                           double fd_step_rel, Exec exec) {
    const OrbitParams& p = pf.profile.params();
    const TurningPoints& tp = pf.profile.turning();
    if (!(grid.r_lo() > tp.r_min && grid.r_hi() < tp.r_max))
        throw SingularBoundaryError(
            "singular boundary: grid touches a turning point");
    const double h = fd_step_rel * tp.width();
    if (!(grid.r_lo() - h > tp.r_min && grid.r_hi() + h < tp.r_max))
        throw SingularBoundaryError(
            "singular boundary: difference stencil leaves the annulus");

    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    std::vector<double> row_max(n_r, 0.0), row_sumsq(n_r, 0.0);

    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const double dS =
            (pf.profile.action(r + h) - pf.profile.action(r - h)) / (2.0 * h);
        const double lhs = dS * dS / (2.0 * p.m) +
                           p.l * p.l / (2.0 * p.m * r * r) + potential(p, r) -
                           p.E;
        // S has no phi or t dependence beyond the analytic l*phi - E*t terms,
        // so the residual is constant along each row.
        const double a = std::abs(lhs);
        row_max[i] = a;
        row_sumsq[i] = static_cast<double>(n_phi) * lhs * lhs;
    });

    ResidualReport rep;
    rep.kind = ResidualKind::hamilton_jacobi;
    rep.n_r = n_r;
    rep.n_phi = n_phi;
    rep.margin_fraction = grid.margin_fraction;
    rep.h_r = h;
    rep.h_phi = grid.phi_step();
    rep.normalization_scale = std::abs(p.E);
    double mx = 0.0, sumsq = 0.0;
    for (int i = 0; i < n_r; ++i) {  // serial reduction, thread-count invariant
        mx = std::max(mx, row_max[i]);
        sumsq += row_sumsq[i];
    }
    rep.max_residual = mx / rep.normalization_scale;
    rep.rms_residual = std::sqrt(sumsq / (static_cast<double>(n_r) * n_phi)) /
                       rep.normalization_scale;
    return rep;
}

}  // namespace cwf
