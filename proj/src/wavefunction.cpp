#include "cwf/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "cwf/quadrature.hpp"

namespace cwf {

double density(const OrbitParams& p, double C, double r) {
    if (!(C > 0.0)) throw std::invalid_argument("normalization C must be positive");
    const double f = radial_momentum_sq(p, r);  // validates r > 0
    if (!(f > 0.0))
        throw DensitySingularityError(
            "density singularity: point at or beyond a turning point");
    return C / (std::sqrt(r * std::abs(p.l)) * std::pow(f, 0.25));
}

double normalize(const OrbitParams& p) {
    const TurningPoints tp = turning_points(p);  // throws if unbound
    if (tp.eccentricity_like < 1e-6)
        throw DegenerateAnnulusError(
            "degenerate annulus: circular orbit has measure-zero support");

    // With C = 1:  int rho^2 r dr dphi = 2 pi / |l| * int dr / p_r,
    // and under r = r_min + w sin^2 u the radial integrand is 2 / sqrt(g).
    const double w = tp.width();
    auto integrand = [&](double u) {
        const double s = std::sin(u);
        const double r = tp.r_min + w * s * s;
        return 2.0 / std::sqrt(edge_factor(p, tp, r));
    };
    constexpr double half_pi = 1.5707963267948966192313216916398;
    const QuadratureResult q = integrate(integrand, 0.0, half_pi, 1e-12, 16);
    const double total = two_pi * q.value / std::abs(p.l);
    return 1.0 / std::sqrt(total);
}

FieldSample wavefunction(const PrincipalFunction& pf, double C, double r,
                         double phi, double t) {
    FieldSample out;
    out.rho = density(pf.profile.params(), C, r);
    out.S = principal_function(pf, r, phi, t);
    out.psi = std::polar(out.rho, out.S);
    return out;
}

ResidualReport continuity_residual(const OrbitParams& p,
                                   const PrincipalFunction& pf, double C,
                                   const PolarGrid& grid, Exec exec) {
    const TurningPoints& tp = pf.profile.turning();
    if (!(grid.r_lo() > tp.r_min && grid.r_hi() < tp.r_max))
        throw SingularBoundaryError(
            "singular boundary: grid touches a turning point");
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    if (n_r < 3) throw std::invalid_argument("need at least 3 radial rows");

    // G(r) = r rho^2 dS/dr is constant (= C^2 sgn(l)/|l| ... = C^2/l) for the
    // exact fields; the discrete residual picks up only interpolation error.
    std::vector<double> G(n_r), rho_sq(n_r);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const double rho = density(p, C, r);
        rho_sq[i] = rho * rho;
        G[i] = r * rho_sq[i] * pf.profile.action_derivative(r);
    });

    const double h_phi = grid.phi_step();
    std::vector<double> row_max(n_r, 0.0), row_sumsq(n_r, 0.0);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        if (i == 0 || i == n_r - 1) return;  // boundary rows excluded
        const double r = grid.r[i];
        const double term_r =
            (G[i + 1] - G[i - 1]) / (grid.r[i + 1] - grid.r[i - 1]) / r;
        // rho is phi-independent and d_phi S = l, so the angular difference
        // vanishes identically; evaluated anyway to keep the operator honest.
        const double term_phi =
            (rho_sq[i] * p.l - rho_sq[i] * p.l) / (2.0 * h_phi) / (r * r);
        const double term_t = 0.0;  // stationary density
        const double res = term_r + term_phi + term_t;
        row_max[i] = std::abs(res);
        row_sumsq[i] = static_cast<double>(n_phi) * res * res;
    });

    double scale_num = 0.0;
    for (int i = 0; i < n_r; ++i)
        scale_num = std::max(scale_num, std::abs(rho_sq[i] * pf.profile.action_derivative(grid.r[i])));

    ResidualReport rep;
    rep.kind = ResidualKind::continuity;
    rep.n_r = n_r;
    rep.n_phi = n_phi;
    rep.margin_fraction = grid.margin_fraction;
    rep.h_r = grid.r_step();
    rep.h_phi = h_phi;
    rep.normalization_scale = scale_num / tp.width();
    double mx = 0.0, sumsq = 0.0;
    for (int i = 0; i < n_r; ++i) {
        mx = std::max(mx, row_max[i]);
        sumsq += row_sumsq[i];
    }
    const int interior = n_r - 2;
    rep.max_residual = mx / rep.normalization_scale;
    rep.rms_residual =
        std::sqrt(sumsq / (static_cast<double>(interior) * n_phi)) /
        rep.normalization_scale;
    return rep;
}

FieldGrid build_field_grid(const PrincipalFunction& pf, double C,
                           const PolarGrid& grid, double t, Exec exec) {
    FieldGrid out;
    out.grid = grid;
    out.t = t;
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    out.samples.resize(static_cast<std::size_t>(n_r) * n_phi);
    const OrbitParams& p = pf.profile.params();
    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const double rho = density(p, C, r);
        const double R = pf.profile.action(r);
        for (int j = 0; j < n_phi; ++j) {
            const double S = R + p.l * grid.phi(j) - p.E * t;
            FieldSample& s = out.samples[static_cast<std::size_t>(i) * n_phi + j];
            s.rho = rho;
            s.S = S;
            s.psi = std::polar(rho, S);
        }
    });
    return out;
}

}  // namespace cwf
