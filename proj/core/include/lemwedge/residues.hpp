#pragma once

// Per-label residue data for the spectral solution.  The closed-form tables
// are the production path; the mode-matrix linear algebra reproduces them
// and serves as an independent cross-check.

#include <array>
#include <complex>

#include "lemwedge/poles.hpp"

namespace lemwedge {

struct ResidueRecord {
    Label label;
    cplx r_I;
    cplx alpha;
    cplx beta;
    cplx C;
    cplx d;
};

// Orbit derivative w_m'(u) expressed through t: i sqrt2 (t - 1/t) for even
// m, -i sqrt2 (t + 1/t) for odd m.
cplx w_m_prime(int m, const CurvePoint& p, double pole_guard = 1e-8);

// r_I = eps_j / w_m'(u_l).
cplx r_I_of(const Label& l, const PoleRecord& rec, double pole_guard = 1e-8);

cplx alpha_table(const Label& l, const PoleRecord& rec);
cplx beta_table(const Label& l, const PoleRecord& rec);
cplx C_table(const Label& l, const PoleRecord& rec);
cplx d_table(const Label& l, const PoleRecord& rec);

ResidueRecord residue_record(const Label& l, const PoleRecord& rec);

using Vec2 = std::array<cplx, 2>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

struct ModeMatrices {
    int k;
    Mat2 M_U;
    Mat2 M_V;
    cplx det_U;
    cplx det_V;
    Mat2 M_U_inv;
    Mat2 M_V_inv;
};

// Matrices of the k-th mode pair at a surface point, with their closed-form
// inverses.
ModeMatrices mode_matrices(int k, const CurvePoint& p, double pole_guard = 1e-8);

// Residue of the forcing term in mode k at the pole of label l.
Vec2 forcing_residue_vector(int k, const Label& l, const CurvePoint& p,
                            double pole_guard = 1e-8);

struct ModeCoefficients {
    cplx alpha;
    cplx beta;
    cplx C;
};

// alpha, beta, C recovered by solving the 2x2 mode systems at the pole.
ModeCoefficients coeff_from_modes(const Label& l, const PoleRecord& rec,
                                  double pole_guard = 1e-8);

}  // namespace lemwedge
