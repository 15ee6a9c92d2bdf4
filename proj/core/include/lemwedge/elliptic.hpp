#pragma once

#include <complex>

#include "lemwedge/errors.hpp"

namespace lemwedge {

using cplx = std::complex<double>;

// Real half-period of the square lattice with invariants g2 = 4, g3 = 0:
//   omega_r = Gamma(1/4)^2 / (4 sqrt(2 pi)) = int_1^inf dx / sqrt(4x^3 - 4x).
inline constexpr double omega_r = 1.3110287771460598094;

// Quasi-period constant eta1 = zeta_w(omega_r); for this lattice it reduces
// to pi / (4 omega_r).  eta3 = zeta_w(i omega_r) = -i eta1.
inline constexpr double eta1 = 0.59907011736779613997;

struct TorusPoint {
    cplx u;
};

struct LatticeData {
    double omega_r;  // real half-period
    cplx omega_i;    // imaginary half-period, equals i * omega_r
    TorusPoint u0;   // half-period with wp(u0) = -1, the basepoint lift
};

LatticeData half_periods();

// Canonical representative with Re and Im in [0, 2 omega_r).  Adding one
// full period to the input leaves the result bit-for-bit unchanged.
cplx reduce(cplx u);
TorusPoint reduce(TorusPoint p);

// Nearest-lattice-point representative: the translate of u with Re and Im
// in [-omega_r, omega_r).  Used for pole distances and branch bookkeeping.
cplx reduce_centered(cplx u);

// Distance from u to the period lattice 2 omega_r (Z + iZ).
double lattice_distance(cplx u);

// Weierstrass functions for the fixed lattice.  wp and wp_prime have poles
// on the lattice and refuse evaluation within pole_guard of it.
cplx wp(cplx u, double pole_guard = 1e-8);
cplx wp_prime(cplx u, double pole_guard = 1e-8);
cplx wp_second(cplx u, double pole_guard = 1e-8);
cplx zeta_w(cplx u, double pole_guard = 1e-8);

inline cplx wp(TorusPoint p, double g = 1e-8) { return wp(p.u, g); }
inline cplx wp_prime(TorusPoint p, double g = 1e-8) { return wp_prime(p.u, g); }
inline cplx wp_second(TorusPoint p, double g = 1e-8) { return wp_second(p.u, g); }
inline cplx zeta_w(TorusPoint p, double g = 1e-8) { return zeta_w(p.u, g); }

// Inverse of u -> (wp(u), wp_prime(u)/2) on the cubic y^2 = x^3 - x.
// The point must satisfy the cubic to tol_curve; the result lies in the
// fundamental square [0, 2 omega_r)^2.
TorusPoint invert_wp(cplx x, cplx y_half, double tol_curve = 1e-12);

}  // namespace lemwedge
