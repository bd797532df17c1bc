#include "cwf/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cwf {

namespace {

const double nan_marker = std::numeric_limits<double>::quiet_NaN();

// Centered 3-point weights for f'' and f' on possibly non-uniform spacing.
struct RadialStencil {
    double wm2, w02, wp2;  // f'' weights at (i-1, i, i+1)
    double wm1, w01, wp1;  // f'  weights
};

RadialStencil radial_stencil(double hm, double hp) {
    const double denom = hm * hp * (hm + hp);
    RadialStencil s;
    s.wm2 = 2.0 * hp / denom;
    s.w02 = -2.0 * (hm + hp) / denom;
    s.wp2 = 2.0 * hm / denom;
    s.wm1 = -hp * hp / denom;
    s.w01 = (hp * hp - hm * hm) / denom;
    s.wp1 = hm * hm / denom;
    return s;
}

template <typename T>
Grid<T> laplacian_impl(const Grid<T>& field, const PolarGrid& grid,
                       T seam_phase, Exec exec) {
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    if (field.n_r != n_r || field.n_phi != n_phi)
        throw std::invalid_argument("field dimensions do not match the grid");
    if (n_r < 8 || n_phi < 8)
        throw std::invalid_argument("grid must be at least 8x8");

    Grid<T> out(n_r, n_phi);
    const double h_phi = grid.phi_step();
    const T seam_inv = T(1.0) / seam_phase;

    parallel_for(n_r, exec, [&](std::int64_t i) {
        if (i == 0 || i == n_r - 1) {
            for (int j = 0; j < n_phi; ++j) out.at(i, j) = T(nan_marker);
            return;
        }
        const double r = grid.r[i];
        const RadialStencil st =
            radial_stencil(grid.r[i] - grid.r[i - 1], grid.r[i + 1] - grid.r[i]);
        for (int j = 0; j < n_phi; ++j) {
            const T fm = field.at(i, j == 0 ? n_phi - 1 : j - 1) *
                         (j == 0 ? seam_inv : T(1.0));
            const T fp = field.at(i, j == n_phi - 1 ? 0 : j + 1) *
                         (j == n_phi - 1 ? seam_phase : T(1.0));
            const T f0 = field.at(i, j);
            const T d2r = st.wm2 * field.at(i - 1, j) + st.w02 * f0 +
                          st.wp2 * field.at(i + 1, j);
            const T d1r = st.wm1 * field.at(i - 1, j) + st.w01 * f0 +
                          st.wp1 * field.at(i + 1, j);
            const T d2phi = (fp - 2.0 * f0 + fm) / (h_phi * h_phi);
            out.at(i, j) = d2r + d1r / r + d2phi / (r * r);
        }
    });
    return out;
}

}  // namespace

ComplexGrid polar_laplacian(const ComplexGrid& field, const PolarGrid& grid,
                            std::complex<double> seam_phase, Exec exec) {
    return laplacian_impl(field, grid, seam_phase, exec);
}

RealGrid polar_laplacian(const RealGrid& field, const PolarGrid& grid,
                         Exec exec) {
    return laplacian_impl(field, grid, 1.0, exec);
}

RealGrid quantum_potential_of(const RealGrid& rho, const PolarGrid& grid,
                              double m, Exec exec) {
    RealGrid lap = polar_laplacian(rho, grid, exec);
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    RealGrid out(n_r, n_phi);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        for (int j = 0; j < n_phi; ++j)
            out.at(i, j) = lap.at(i, j) / (2.0 * m * rho.at(i, j));
    });
    return out;
}

RealGrid quantum_potential(const OrbitParams& p, double C,
                           const PolarGrid& grid, Exec exec) {
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    RealGrid rho(n_r, n_phi);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double v = density(p, C, grid.r[i]);  // throws on singular rows
        for (int j = 0; j < n_phi; ++j) rho.at(i, j) = v;
    });
    return quantum_potential_of(rho, grid, p.m, exec);
}

double radial_momentum_sq_derivative(const OrbitParams& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    if (p.system == System::kepler)
        return -2.0 * p.m * p.coupling / (r * r) + 2.0 * p.l * p.l / (r * r * r);
    return -2.0 * p.m * p.coupling * r + 2.0 * p.l * p.l / (r * r * r);
}

double density_derivative(const OrbitParams& p, double C, double r) {
    const double rho = density(p, C, r);
    const double f = radial_momentum_sq(p, r);
    const double df = radial_momentum_sq_derivative(p, r);
    // rho ~ r^{-1/2} f^{-1/4}
    return rho * (-0.5 / r - 0.25 * df / f);
}

StationaryFields fields_of(const PrincipalFunction& pf, double C) {
    const OrbitParams p = pf.profile.params();
    StationaryFields f;
    f.m = p.m;
    f.E = p.E;
    f.l = p.l;
    f.potential = [p](double r) { return potential(p, r); };
    // capture the profile by pointer: StationaryFields never outlives the
    // PrincipalFunction it wraps
    const RadialProfile* prof = &pf.profile;
    f.radial_action = [prof](double r) { return prof->action(r); };
    f.d_radial_action = [prof](double r) { return prof->action_derivative(r); };
    f.rho = [p, C](double r) { return density(p, C, r); };
    return f;
}

namespace {

void check_interior(const PolarGrid& grid, double pad) {
    if (grid.n_r() < 8 || grid.n_phi < 8)
        throw std::invalid_argument("grid must be at least 8x8");
    (void)pad;
}

struct RowDerivs {
    double S, dS, lapS_r, rho, drho;
};

// Radial derivative bundle at one row; FD fallback at step h when no
// analytic derivative was supplied.
RowDerivs row_derivs(const StationaryFields& f, double r, double h) {
    RowDerivs d;
    d.S = f.radial_action(r);
    d.rho = f.rho(r);
    const bool fd_S = !f.d_radial_action;
    auto dS_at = [&](double rr) {
        return fd_S ? (f.radial_action(rr + h) - f.radial_action(rr - h)) / (2.0 * h)
                    : f.d_radial_action(rr);
    };
    d.dS = dS_at(r);
    // (1/r) d_r (r dS/dr) by one more centered difference
    d.lapS_r = ((r + h) * dS_at(r + h) - (r - h) * dS_at(r - h)) / (2.0 * h * r);
    d.drho = f.d_rho ? f.d_rho(r)
                     : (f.rho(r + h) - f.rho(r - h)) / (2.0 * h);
    return d;
}

ResidualReport make_report(ResidualKind kind, const PolarGrid& grid, double h_r,
                           double scale, const std::vector<double>& row_max,
                           const std::vector<double>& row_sumsq, long count) {
    ResidualReport rep;
    rep.kind = kind;
    rep.n_r = grid.n_r();
    rep.n_phi = grid.n_phi;
    rep.margin_fraction = grid.margin_fraction;
    rep.h_r = h_r;
    rep.h_phi = grid.phi_step();
    rep.normalization_scale = scale;
    double mx = 0.0, sumsq = 0.0;
    for (double v : row_max) mx = std::max(mx, v);
    for (double v : row_sumsq) sumsq += v;
    rep.max_residual = mx / scale;
    rep.rms_residual = std::sqrt(sumsq / static_cast<double>(count)) / scale;
    return rep;
}

}  // namespace

ResidualReport hj_field_residual(const StationaryFields& f,
                                 const PolarGrid& grid, double fd_step,
                                 Exec exec) {
    check_interior(grid, fd_step);
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    std::vector<double> row_max(n_r, 0.0), row_sumsq(n_r, 0.0);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const double dS =
            f.d_radial_action
                ? f.d_radial_action(r)
                : (f.radial_action(r + fd_step) - f.radial_action(r - fd_step)) /
                      (2.0 * fd_step);
        const double lhs = dS * dS / (2.0 * f.m) +
                           f.l * f.l / (2.0 * f.m * r * r) + f.potential(r) -
                           f.E;
        row_max[i] = std::abs(lhs);
        row_sumsq[i] = static_cast<double>(n_phi) * lhs * lhs;
    });
    return make_report(ResidualKind::hamilton_jacobi, grid, fd_step,
                       std::abs(f.E), row_max, row_sumsq,
                       static_cast<long>(n_r) * n_phi);
}

ResidualReport continuity_field_residual(const StationaryFields& f,
                                         const PolarGrid& grid,
                                         double annulus_width, Exec exec) {
    check_interior(grid, 0.0);
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    std::vector<double> G(n_r), flux(n_r);
    const double fd_step = 1e-4 * annulus_width;
    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const double rho = f.rho(r);
        const double dS =
            f.d_radial_action
                ? f.d_radial_action(r)
                : (f.radial_action(r + fd_step) - f.radial_action(r - fd_step)) /
                      (2.0 * fd_step);
        flux[i] = rho * rho * dS;
        G[i] = r * flux[i];
    });
    std::vector<double> row_max(n_r, 0.0), row_sumsq(n_r, 0.0);
    parallel_for(n_r, exec, [&](std::int64_t i) {
        if (i == 0 || i == n_r - 1) return;
        const double r = grid.r[i];
        const double res =
            (G[i + 1] - G[i - 1]) / (grid.r[i + 1] - grid.r[i - 1]) / r;
        row_max[i] = std::abs(res);
        row_sumsq[i] = static_cast<double>(n_phi) * res * res;
    });
    double scale = 0.0;
    for (int i = 0; i < n_r; ++i) scale = std::max(scale, std::abs(flux[i]));
    return make_report(ResidualKind::continuity, grid, grid.r_step(),
                       scale / annulus_width, row_max, row_sumsq,
                       static_cast<long>(n_r - 2) * n_phi);
}

ResidualReport sle_field_residual(const StationaryFields& f,
                                  const PolarGrid& grid, double fd_step,
                                  Exec exec) {
    check_interior(grid, fd_step);
    const int n_r = grid.n_r();
    const int n_phi = grid.n_phi;
    const double h_phi = grid.phi_step();
    std::vector<double> row_max(n_r, 0.0), row_sumsq(n_r, 0.0);

    parallel_for(n_r, exec, [&](std::int64_t i) {
        const double r = grid.r[i];
        const RowDerivs d = row_derivs(f, r, fd_step);
        double mx = 0.0, sumsq = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = grid.phi(j);
            // phi-direction differences of S = S_r + l phi (exact on a
            // linear phase) and of the phi-independent rho
            const double Sp = d.S + f.l * (phi + h_phi);
            const double Sm = d.S + f.l * (phi - h_phi);
            const double S0 = d.S + f.l * phi;
            const double dS_phi = (Sp - Sm) / (2.0 * h_phi);
            const double d2S_phi = (Sp - 2.0 * S0 + Sm) / (h_phi * h_phi);
            const double lapS = d.lapS_r + d2S_phi / (r * r);
            // product-rule expansion of H_cl psi - E psi over e^{iS}: the
            // lap(rho) term cancels against the quantum potential, leaving
            //   Re -> rho * (Hamilton-Jacobi lhs)
            //   Im -> -(1/m) (grad rho . grad S + rho/2 lap S)
            const double re =
                d.rho * (d.dS * d.dS / (2.0 * f.m) +
                         dS_phi * dS_phi / (2.0 * f.m * r * r) +
                         f.potential(r) - f.E);
            const double im =
                -(1.0 / f.m) * (d.drho * d.dS + 0.5 * d.rho * lapS);
            const double res = std::hypot(re, im) / (std::abs(f.E) * d.rho);
            mx = std::max(mx, res);
            sumsq += res * res;
        }
        row_max[i] = mx;
        row_sumsq[i] = sumsq;
    });
    // pointwise |residual| / (|E||psi|) is already normalized
    ResidualReport rep =
        make_report(ResidualKind::schroedinger_like, grid, fd_step, 1.0,
                    row_max, row_sumsq, static_cast<long>(n_r) * n_phi);
    rep.normalization_scale = std::abs(f.E);
    return rep;
}

ResidualReport sle_residual(const OrbitParams& p, const PrincipalFunction& pf,
                            double C, const PolarGrid& grid, double fd_step_rel,
                            DerivSource source, Exec exec) {
    const TurningPoints& tp = pf.profile.turning();
    if (!(grid.r_lo() > tp.r_min && grid.r_hi() < tp.r_max))
        throw SingularBoundaryError(
            "singular boundary: grid touches a turning point");
    const double h = fd_step_rel * tp.width();
    if (!(grid.r_lo() - 2.0 * h > tp.r_min && grid.r_hi() + 2.0 * h < tp.r_max))
        throw SingularBoundaryError(
            "singular boundary: difference stencil leaves the annulus");

    StationaryFields f = fields_of(pf, C);
    if (source == DerivSource::interpolated) {
        f.d_radial_action = nullptr;  // force the centered-difference path
    } else {
        f.d_radial_action = [p](double r) {
            const double fr = radial_momentum_sq(p, r);
            return fr > 0.0 ? std::sqrt(fr) : 0.0;
        };
        f.d_rho = [p, C](double r) { return density_derivative(p, C, r); };
    }
    return sle_field_residual(f, grid, h, exec);
}

}  // namespace cwf
