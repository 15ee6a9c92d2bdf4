#pragma once

// Assembly of the scattered spectral density: the singular channel P13,
// the remainder R, the gauged Q_scat, the total density with its incident
// pole, and the face coupling that reconstructs S from Q.

#include <vector>

#include "lemwedge/jet.hpp"

namespace lemwedge {

struct SpectralSolution {
    WedgeConfig cfg;
    LatticeData lattice;
    std::vector<LabelData> labels;  // the 15 scattered poles
    PoleRecord incident;
    JetCoeffs jets;
    cplx r0;  // value of the remainder at the basepoint
};

// Production assembly from the coefficient tables.
SpectralSolution assemble(const WedgeConfig& cfg);

// Same solution with every coefficient taken from the mode-matrix solve
// instead of the tables; used as an independent assembly order in tests.
SpectralSolution assemble_from_modes(const WedgeConfig& cfg);

// (i Y / sqrt2)(t^2 - 1).
cplx beta_ch(const CurvePoint& p);

// Rational inverse of the uniformization: t and Y as functions on the torus.
struct TorusCoords {
    cplx t;
    cplx Y;
};
TorusCoords curve_of_u(cplx u, double pole_guard = 1e-8);

// [A + p(t)]/(4 t^4) - beta_ch [B + q(t)]/(4 t^4); analytic at the
// basepoint, fourth-order pole at the companion zero of t.
cplx P13(cplx u, const SpectralSolution& sol);

// P13 minus the principal parts d_l zeta-differences; analytic at every
// scattered pole and at the basepoint.
cplx R_remainder(cplx u, const SpectralSolution& sol);

// sum C_l [zeta_w(u - u_l) - zeta_w(u0 - u_l)] + R(u) - R(u0).
cplx Q_scat_u(cplx u, const SpectralSolution& sol);

cplx Q_scat_zeta(cplx zeta, const SpectralSolution& sol);

// 1/(zeta - zeta_i) + Q_scat(zeta).
cplx Q_total(cplx zeta, const SpectralSolution& sol);

struct FaceValues {
    cplx S_plus;
    cplx S_minus;
    cplx Q_plus;
    cplx Q_minus;
    cplx w;
    cplx w_prime;
};

// Couple the two sides of the face theta_b = face * pi/4 through the Snell
// branch w(z): (S+, S-) = (1/2) [[1+w', 1-w'], [1-w', 1+w']] (Q+, Q-).
FaceValues S_from_Q(int face, cplx z, const SpectralSolution& sol);

}  // namespace lemwedge
