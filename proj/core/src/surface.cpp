#include "lemwedge/surface.hpp"

#include <cmath>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);
const double QUARTER_PI = 0.78539816339744830962;
}  // namespace

cplx spectral_exponential(cplx zeta) {
    return std::exp(I * (zeta - QUARTER_PI));
}

Component classify(cplx t, cplx Y) {
    if (std::abs(t) >= 1.0) return Component::other;
    const cplx Yp = -std::sqrt(2.0 * (t * t * t * t + 1.0));
    return (std::abs(Y - Yp) <= std::abs(Y + Yp)) ? Component::physical_plus
                                                  : Component::other;
}

double curve_residual(cplx t, cplx Y) {
    const cplx t4 = t * t * t * t;
    const double scale = std::max({1.0, std::abs(Y * Y), 2.0 * std::abs(t4)});
    return std::abs(Y * Y - 2.0 * (t4 + 1.0)) / scale;
}

CurvePoint curve_lift(cplx t, int branch) {
    const cplx w = 2.0 * (t * t * t * t + 1.0);
    cplx Y = std::sqrt(w);
    if (branch < 0) Y = -Y;
    return {t, Y, classify(t, Y)};
}

cplx snell_s(const CurvePoint& p, double pole_guard) {
    if (p.component == Component::physical_plus) {
        // conjugate-rationalized form, finite through t = 0
        return 2.0 * p.t / (SQRT2 * (p.t * p.t + 1.0) - p.Y);
    }
    if (std::abs(p.t) < pole_guard)
        raise(errc::division_near_zero,
              "Snell exponential has a pole at t = 0 off the physical branch");
    return (SQRT2 * (p.t * p.t + 1.0) + p.Y) / (2.0 * p.t);
}

cplx g_prime(const CurvePoint& p, double pole_guard) {
    if (std::abs(p.Y) < pole_guard)
        raise(errc::branch_point, "derivative g' undefined where Y = 0");
    return SQRT2 * (p.t * p.t - 1.0) / p.Y;
}

CurvePoint tau(const CurvePoint& p) {
    const cplx t = I * p.t;
    const cplx Y = -p.Y;
    return {t, Y, classify(t, Y)};
}

CubicPair uniformize(const CurvePoint& p, double pole_guard) {
    const cplx t = p.t;
    if (p.component == Component::physical_plus) {
        // with D = Y + sqrt2 = -sqrt2 t^4 / (1 + S), S = sqrt(1+t^4), the
        // factor t^2 shared by numerator and denominator cancels exactly
        const cplx P = 1.0 - p.Y / SQRT2;  // 1 + S on this branch
        const cplx den = P + t * t;
        if (std::abs(den) < pole_guard)
            raise(errc::uniformization_pole,
                  "uniformization denominator vanished");
        return {-(P - t * t) / den, 2.0 * SQRT2 * t * P / (den * den)};
    }
    const cplx D = p.Y + SQRT2;
    const cplx den = D - SQRT2 * t * t;
    if (std::abs(den) < pole_guard)
        raise(errc::uniformization_pole, "uniformization denominator vanished");
    return {(D + SQRT2 * t * t) / den, -4.0 * t * D / (den * den)};
}

TorusPoint lift_u(const CurvePoint& p, double tol_curve, double pole_guard) {
    const CubicPair c = uniformize(p, pole_guard);
    return invert_wp(c.x, c.y_half, tol_curve);
}

CurvePoint point_of_zeta(const SpectralPoint& z, double pole_guard) {
    const cplx b = spectral_exponential(z.zeta);
    const cplx pc = (b * b + 1.0) / (SQRT2 * b);
    const cplx disc = std::sqrt(pc * pc - 4.0);
    // the roots multiply to 1; form the large one without cancellation
    const cplx big = (std::abs(pc + disc) >= std::abs(pc - disc))
                         ? 0.5 * (pc + disc)
                         : 0.5 * (pc - disc);
    const cplx t = 1.0 / big;
    if (std::abs(std::abs(t) - 1.0) < pole_guard &&
        std::abs(std::abs(big) - 1.0) < pole_guard)
        raise(errc::unit_modulus_root,
              "both branch-map roots sit on the unit circle; displace zeta");
    const cplx Y = 2.0 * t * b - SQRT2 * (t * t + 1.0);
    return {t, Y, classify(t, Y)};
}

TorusPoint u_of_zeta(const SpectralPoint& z, double tol_curve,
                     double pole_guard) {
    return lift_u(point_of_zeta(z, pole_guard), tol_curve, pole_guard);
}

}  // namespace lemwedge
