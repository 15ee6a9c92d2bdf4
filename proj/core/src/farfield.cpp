#include "lemwedge/farfield.hpp"

#include <cmath>
#include <limits>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);
const double PI = 3.14159265358979323846;
const double QUARTER_PI = 0.78539816339744830962;

const std::array<double, 3> kLadder = {1e-2, 1e-3, 1e-4};

const cplx inv_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};

double wrap_angle(double x) { return std::remainder(x, 2.0 * PI); }

// Forcing phase with the displacement removed; the production path refuses
// eps = 0, but the limit itself is plain arithmetic on the unit circle.
cplx phase_at_zero(const Label& l, double theta_i) {
    const cplx a = std::exp(
        I * (double)l.sigma * (theta_i + (double)l.eps_w * QUARTER_PI));
    return (l.m % 2 == 0) ? a : 1.0 / a;
}

std::array<SpectralSolution, 3> build_ladder(const WedgeConfig& cfg) {
    std::array<SpectralSolution, 3> sols;
    for (int k = 0; k < 3; ++k) {
        WedgeConfig c = cfg;
        c.eps = kLadder[k];
        sols[k] = assemble(c);
    }
    return sols;
}

}  // namespace

// On the strip boundary both roots of the zeta quadratic sit on the unit
// circle; the physical one is the continuity limit of the |t| < 1 branch
// from just above the axis.
TorusPoint boundary_lift(double theta, const Tolerances& tol) {
    const cplx b = spectral_exponential(cplx(theta, 0.0));
    const cplx p = (b * b + 1.0) / (SQRT2 * b);
    const cplx d = std::sqrt(p * p - 4.0);
    const cplx r1 = 0.5 * (p + d), r2 = 0.5 * (p - d);
    const cplx t_ref = point_of_zeta({cplx(theta, 1e-4)}, tol.pole_guard).t;
    const cplx t = (std::abs(r1 - t_ref) < std::abs(r2 - t_ref)) ? r1 : r2;
    const cplx Y = 2.0 * b * t - SQRT2 * (t * t + 1.0);
    return lift_u({t, Y, classify(t, Y)}, tol.tol_curve, tol.pole_guard);
}

namespace {
// Boundary value of Q_scat at a real angle: evaluate at the boundary lift
// against each ladder solution and extrapolate the displacement to zero.
// The residual compares the three-node value with the secant through the
// two finest rungs; when check_stability is set it becomes a refusal.
cplx boundary_q(double theta, const WedgeConfig& cfg,
                const std::array<SpectralSolution, 3>& sols,
                const std::vector<double>& directions, bool check_stability,
                double* residual = nullptr) {
    double dist = std::numeric_limits<double>::infinity();
    for (double z : directions)
        dist = std::min(dist, std::abs(wrap_angle(theta - z)));
    if (dist < 10.0 * cfg.tol.pole_guard)
        raise(errc::near_pole_direction,
              "observation angle sits on a geometric-optics direction");
    const TorusPoint ub = boundary_lift(theta, cfg.tol);
    std::array<cplx, 3> q;
    for (int k = 0; k < 3; ++k) q[k] = Q_scat_u(ub.u, sols[k]);
    cplx e3 = 0.0;
    for (int k = 0; k < 3; ++k) {
        cplx term = q[k];
        for (int j = 0; j < 3; ++j)
            if (j != k) term *= -kLadder[j] / (kLadder[k] - kLadder[j]);
        e3 += term;
    }
    const cplx e2 = q[2] + (q[1] - q[2]) * (0.0 - kLadder[2]) /
                               (kLadder[1] - kLadder[2]);
    if (residual) *residual = std::abs(e3 - e2);
    if (check_stability && std::abs(e3 - e2) > 10.0 * cfg.tol.tol_eval)
        raise(errc::extrapolation_unstable,
              "absorption ladder does not settle at this angle");
    return e3;
}
}  // namespace

cplx diffraction_prefactor(double k0) {
    return std::polar(std::sqrt(2.0 / (PI * k0)), -0.75 * PI);
}

std::vector<double> go_directions(const WedgeConfig& cfg) {
    WedgeConfig ref = cfg;
    ref.eps = 1e-4;
    std::vector<double> out;
    out.reserve(15);
    for (const Label& l : scattered_labels()) {
        const cplx b = phase_at_zero(l, cfg.theta_i);
        // at eps = 0 both roots of the pole quadratic sit on the unit
        // circle; the physical one is the limit of the |t| < 1 root,
        // identified by proximity to its small-eps position
        const cplx p = (b * b + 1.0) / (SQRT2 * b);
        const cplx d = std::sqrt(p * p - 4.0);
        const cplx r1 = 0.5 * (p + d), r2 = 0.5 * (p - d);
        const cplx t_ref = pole_roots(forcing_phase(l, ref)).t_in;
        const cplx tq =
            (std::abs(r1 - t_ref) < std::abs(r2 - t_ref)) ? r1 : r2;
        const cplx Yq = 2.0 * b * tq - SQRT2 * (tq * tq + 1.0);
        const cplx t = inv_i_pow[l.m & 3] * tq;
        const cplx Y = (l.m % 2 == 0) ? Yq : -Yq;
        const cplx s = snell_s({t, Y, classify(t, Y)}, cfg.tol.pole_guard);
        const cplx zeta = QUARTER_PI - I * std::log(s);
        out.push_back(zeta.real());
    }
    return out;
}

cplx D_coefficient(double theta, const WedgeConfig& cfg) {
    const std::vector<double> dirs = go_directions(cfg);
    const std::array<SpectralSolution, 3> sols = build_ladder(cfg);
    return diffraction_prefactor(cfg.k0) *
           boundary_q(theta, cfg, sols, dirs, true);
}

FarFieldTable farfield_sweep(const std::vector<double>& grid,
                             const WedgeConfig& cfg) {
    FarFieldTable table;
    table.cfg = cfg;
    table.eps_ladder = kLadder;
    table.rows.reserve(grid.size());
    const std::vector<double> dirs = go_directions(cfg);
    const std::array<SpectralSolution, 3> sols = build_ladder(cfg);
    const cplx pref = diffraction_prefactor(cfg.k0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    table.max_residual = 0.0;
    for (double theta : grid) {
        FarFieldRow row{theta, cplx(nan, nan), ""};
        try {
            double resid = 0.0;
            row.D = pref * boundary_q(theta, cfg, sols, dirs, true, &resid);
            table.max_residual = std::max(table.max_residual, resid);
        } catch (const wedge_error& e) {
            row.flag = e.name();
        }
        table.rows.push_back(row);
    }
    return table;
}

ReciprocityReport reciprocity_report(const std::vector<double>& grid,
                                     const WedgeConfig& cfg) {
    const int n = (int)grid.size();
    // D(theta = grid[i]; theta_i = grid[j]); angles that land on a
    // geometric-optics direction of the partner angle stay unset
    std::vector<std::vector<cplx>> D(n, std::vector<cplx>(n));
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    for (int j = 0; j < n; ++j) {
        WedgeConfig c = cfg;
        c.theta_i = grid[j];
        const std::vector<double> dirs = go_directions(c);
        const std::array<SpectralSolution, 3> sols = build_ladder(c);
        const cplx pref = diffraction_prefactor(c.k0);
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            try {
                // the report measures the asymmetry wherever the angle is
                // not genuinely singular; ladder noise is part of the data
                D[i][j] = pref * boundary_q(grid[i], c, sols, dirs, false);
                ok[i][j] = true;
            } catch (const wedge_error&) {
            }
        }
    }
    ReciprocityReport rep;
    rep.grid = grid;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.delta.assign(n, std::vector<double>(n, 0.0));
    rep.max_delta = 0.0;
    rep.mean_delta = 0.0;
    rep.refused_pairs = 0;
    int valid = n;  // the diagonal is zero by definition
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!ok[i][j] || !ok[j][i]) {
                rep.delta[i][j] = nan;
                ++rep.refused_pairs;
                continue;
            }
            const double d = std::abs(D[i][j] - D[j][i]);
            rep.delta[i][j] = d;
            rep.max_delta = std::max(rep.max_delta, d);
            rep.mean_delta += d;
            ++valid;
        }
    rep.mean_delta /= (double)valid;
    return rep;
}

}  // namespace lemwedge
