#include "lemwedge/reconstruct.hpp"

#include <cmath>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const double SQRT2 = std::sqrt(2.0);
const cplx I(0.0, 1.0);

cplx basepoint() { return {0.0, omega_r}; }

// Value of R at the basepoint.  The quartic Taylor coefficient of A + p is
// -(1/8) sum alpha W0 W1 (and likewise for B + q), so the jet-cancelled
// quotients have the finite limits K4A/4 and K4B/4 there, combined with
// beta_ch -> i.
cplx gauge_constant(const std::vector<LabelData>& data) {
    cplx k4a = 0.0, k4b = 0.0;
    for (const LabelData& d : data) {
        const cplx w01 = d.shift.W0 * d.shift.W1;
        k4a += d.res.alpha * w01;
        k4b += d.res.beta * w01;
    }
    k4a *= -0.125;
    k4b *= -0.125;
    return (k4a - I * k4b) / 4.0;
}

SpectralSolution assemble_common(const WedgeConfig& cfg,
                                 std::vector<LabelData> data) {
    SpectralSolution sol;
    sol.cfg = cfg;
    sol.lattice = half_periods();
    sol.labels = std::move(data);
    sol.incident = pole_record(make_label(0, +1, -1), cfg);
    sol.jets = jet_coeffs(sol.labels);
    sol.r0 = gauge_constant(sol.labels);
    return sol;
}

// sum coef_l [zeta_w(u - u_l) - zeta_w(u0 - u_l)] with coef one of C, d.
enum class Coef { C, d };

cplx zeta_sum(cplx u, const SpectralSolution& sol, Coef which) {
    const double guard = sol.cfg.tol.pole_guard;
    for (const LabelData& d : sol.labels)
        if (lattice_distance(u - d.pole.u.u) < guard)
            raise(errc::evaluation_at_pole,
                  "spectral density evaluated at a forcing pole");
    cplx acc = 0.0;
    for (const LabelData& d : sol.labels) {
        const cplx coef = which == Coef::C ? d.res.C : d.res.d;
        acc += coef * (zeta_w(u - d.pole.u.u, guard) - d.zw_base);
    }
    return acc;
}
}  // namespace

SpectralSolution assemble(const WedgeConfig& cfg) {
    return assemble_common(cfg, label_data(cfg));
}

SpectralSolution assemble_from_modes(const WedgeConfig& cfg) {
    std::vector<LabelData> data = label_data(cfg);
    for (LabelData& d : data) {
        const ModeCoefficients mc =
            coeff_from_modes(d.pole.label, d.pole, cfg.tol.pole_guard);
        d.res.alpha = mc.alpha;
        d.res.beta = mc.beta;
        d.res.C = mc.C;
        const CurvePoint p{d.pole.t, d.pole.Y, classify(d.pole.t, d.pole.Y)};
        const cplx t4 = std::pow(d.pole.t, 4);
        d.res.d = (mc.alpha - beta_ch(p) * mc.beta) / (4.0 * t4);
    }
    return assemble_common(cfg, std::move(data));
}

cplx beta_ch(const CurvePoint& p) {
    return (I * p.Y / SQRT2) * (p.t * p.t - 1.0);
}

TorusCoords curve_of_u(cplx u, double pole_guard) {
    const cplx x = wp(u, pole_guard);
    const cplx y = wp_prime(u, pole_guard) / 2.0;
    if (std::abs(y) < pole_guard)
        raise(errc::division_near_zero,
              "curve coordinates degenerate at a branch point of the torus");
    if (std::abs(x - 1.0) < pole_guard)
        raise(errc::division_near_zero,
              "curve coordinates degenerate where wp = 1");
    const cplx t = -(x * x - 1.0) / (SQRT2 * y);
    const cplx Y = SQRT2 * t * t * (x + 1.0) / (x - 1.0) - SQRT2;
    return {t, Y};
}

cplx P13(cplx u, const SpectralSolution& sol) {
    const double guard = sol.cfg.tol.pole_guard;
    if (lattice_distance(u - basepoint()) < guard) return sol.r0;
    const TorusCoords tc = curve_of_u(u, guard);
    const cplx t = tc.t;
    const cplx t4 = t * t * t * t;
    const JetCoeffs& j = sol.jets;
    const cplx num_a =
        A_sum(u, sol.labels, guard) + j.p1 * t + j.p2 * t * t + j.p3 * t * t * t;
    const cplx num_b =
        B_sum(u, sol.labels, guard) + j.q1 * t + j.q2 * t * t + j.q3 * t * t * t;
    const CurvePoint p{t, tc.Y, classify(t, tc.Y)};
    return (num_a - beta_ch(p) * num_b) / (4.0 * t4);
}

cplx R_remainder(cplx u, const SpectralSolution& sol) {
    return P13(u, sol) - zeta_sum(u, sol, Coef::d);
}

cplx Q_scat_u(cplx u, const SpectralSolution& sol) {
    return zeta_sum(u, sol, Coef::C) + R_remainder(u, sol) - sol.r0;
}

cplx Q_scat_zeta(cplx zeta, const SpectralSolution& sol) {
    const TorusPoint tp = u_of_zeta({zeta}, sol.cfg.tol.tol_curve,
                                    sol.cfg.tol.pole_guard);
    return Q_scat_u(tp.u, sol);
}

cplx Q_total(cplx zeta, const SpectralSolution& sol) {
    const cplx zi(sol.cfg.theta_i, sol.cfg.eps);
    if (std::abs(zeta - zi) < sol.cfg.tol.pole_guard)
        raise(errc::incident_pole, "total density evaluated at zeta_i");
    return 1.0 / (zeta - zi) + Q_scat_zeta(zeta, sol);
}

FaceValues S_from_Q(int face, cplx z, const SpectralSolution& sol) {
    const double guard = sol.cfg.tol.pole_guard;
    const double theta_b = (face < 0 ? -1.0 : 1.0) * wedge_half_angle;
    const CurvePoint p = curve_lift(std::exp(I * z), -1);
    FaceValues f;
    f.w = -I * std::log(snell_s(p, guard));
    f.w_prime = g_prime(p, guard);
    f.Q_plus = Q_total(theta_b + f.w, sol);
    f.Q_minus = Q_total(theta_b - f.w, sol);
    f.S_plus = 0.5 * ((1.0 + f.w_prime) * f.Q_plus +
                      (1.0 - f.w_prime) * f.Q_minus);
    f.S_minus = 0.5 * ((1.0 - f.w_prime) * f.Q_plus +
                       (1.0 + f.w_prime) * f.Q_minus);
    return f;
}

}  // namespace lemwedge
