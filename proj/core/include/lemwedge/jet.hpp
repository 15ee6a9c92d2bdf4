#pragma once

// Half-period shift data, the zeta-sums A and B over the scattered poles,
// and the polynomials p, q that cancel their jets at the basepoint.

#include <vector>

#include "lemwedge/poles.hpp"
#include "lemwedge/residues.hpp"

namespace lemwedge {

struct ShiftData {
    Label label;
    cplx W0;  // wp(u0 - u_l)
    cplx W1;  // wp'(u0 - u_l)
    cplx W2;  // wp''(u0 - u_l)
};

// Algebraic forms of the shifted values: W0 = -sqrt2 t^2/(Y+sqrt2),
// W1 = -4t/(Y+sqrt2), W2 = 12 t^4/(Y+sqrt2)^2 - 2.
ShiftData shift_data(const Label& l, const PoleRecord& rec,
                     double pole_guard = 1e-8);

// Everything the spectral sums need about one scattered pole.
struct LabelData {
    PoleRecord pole;
    ResidueRecord res;
    ShiftData shift;
    cplx zw_base;  // zeta_w(u0 - u_l)
};

std::vector<LabelData> label_data(const WedgeConfig& cfg);

struct JetCoeffs {
    cplx p1, p2, p3;
    cplx q1, q2, q3;
};

JetCoeffs jet_coeffs(const std::vector<LabelData>& data);

// A(u) = sum alpha_l [zeta_w(u - u_l) - zeta_w(u0 - u_l)]; B likewise
// with beta_l.
cplx A_sum(cplx u, const std::vector<LabelData>& data,
           double pole_guard = 1e-8);
cplx B_sum(cplx u, const std::vector<LabelData>& data,
           double pole_guard = 1e-8);

// u(t) - u0 along the physical component, unwrapped to the centered cell.
cplx delta_of_t(cplx t);

}  // namespace lemwedge
