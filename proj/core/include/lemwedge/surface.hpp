#pragma once

// The lemniscatic Snell surface Y^2 = 2(t^4 + 1), its physical component,
// the Snell exponential s(t, Y), the order-four automorphism tau, the
// birational map onto the Weierstrass cubic y^2 = x^3 - x, and the spectral
// branch map zeta -> (t, Y) -> u.

#include <complex>

#include "lemwedge/elliptic.hpp"

namespace lemwedge {

// A point lies on the physical component when |t| < 1 and Y sits on the
// branch of sqrt(2(t^4+1)) that continues to -sqrt(2) at t = 0.
enum class Component { physical_plus, other };

struct CurvePoint {
    cplx t;
    cplx Y;
    Component component;
};

struct SpectralPoint {
    cplx zeta;
};

// Sommerfeld spectral exponential s_zeta = exp(i(zeta - pi/4)).
cplx spectral_exponential(cplx zeta);

// Y on the continuation branch (branch = -1, approaches -sqrt(2) at t = 0)
// or its negative (branch = +1).  Branch points t^4 = -1 give Y = 0.
CurvePoint curve_lift(cplx t, int branch);

// Component tag for an arbitrary on-curve pair.
Component classify(cplx t, cplx Y);

// Residual of the defining equation, relative to max(1, |Y^2|, |2 t^4|).
double curve_residual(cplx t, cplx Y);

// s(t, Y) = (sqrt(2)(t^2+1) + Y) / (2t), computed through the
// cancellation-free equivalent on the physical component.
cplx snell_s(const CurvePoint& p, double pole_guard = 1e-8);

// g'(t, Y) = sqrt(2)(t^2 - 1) / Y.
cplx g_prime(const CurvePoint& p, double pole_guard = 1e-8);

// (t, Y) -> (i t, -Y); order four, stays on the curve.
CurvePoint tau(const CurvePoint& p);

struct CubicPair {
    cplx x;
    cplx y_half;
};

// x = (Y + sqrt2 + sqrt2 t^2) / (Y + sqrt2 - sqrt2 t^2) and
// y_half = -4 t (Y + sqrt2) / (Y + sqrt2 - sqrt2 t^2)^2.  On the physical
// component the common factor t^2 in numerator and denominator is cancelled
// analytically, which keeps the map finite and accurate through t = 0.
CubicPair uniformize(const CurvePoint& p, double pole_guard = 1e-8);

// invert_wp composed with uniformize.
TorusPoint lift_u(const CurvePoint& p, double tol_curve = 1e-12,
                  double pole_guard = 1e-8);

// Solve s(t, Y) = s_zeta with |t| < 1; Y is recovered from the same
// equation, which lands on the curve identically.
CurvePoint point_of_zeta(const SpectralPoint& z, double pole_guard = 1e-8);

TorusPoint u_of_zeta(const SpectralPoint& z, double tol_curve = 1e-12,
                     double pole_guard = 1e-8);

}  // namespace lemwedge
