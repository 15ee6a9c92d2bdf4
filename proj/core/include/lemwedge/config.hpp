#pragma once

namespace lemwedge {

struct Tolerances {
    double tol_ell = 1e-10;    // elliptic-function identities
    double tol_fd = 1e-6;      // finite-difference cross-checks
    double tol_curve = 1e-12;  // algebraic curve / cubic residuals
    double tol_tbl = 1e-9;     // coefficient-table comparisons
    double tol_eval = 1e-8;    // assembled-function evaluations
    double pole_guard = 1e-8;  // refusal distance from poles and branch points
};

// The geometry is fixed throughout: right-angle penetrable wedge with
// half-opening pi/4, refractive contrast sqrt(2), matched impedance.
inline constexpr double wedge_half_angle = 0.7853981633974483096;  // pi/4
inline constexpr double refractive_contrast = 1.4142135623730950488;  // sqrt(2)

struct WedgeConfig {
    double theta_i = 1.5707963267948966;  // incidence angle (radians)
    double eps = 1e-3;                    // spectral-pole displacement, > 0
    double k0 = 1.0;                      // exterior wavenumber, > 0
    Tolerances tol{};
};

}  // namespace lemwedge
