#pragma once

// Forcing poles of the spectral system: the 16 labels (m, sigma, eps_w),
// their forcing phases, the pole quadratic on the Snell surface, transport
// to the base point, and the lift to the torus.

#include <array>
#include <complex>

#include "lemwedge/config.hpp"
#include "lemwedge/elliptic.hpp"
#include "lemwedge/surface.hpp"

namespace lemwedge {

struct Label {
    int m;      // orbit index, 0..3
    int sigma;  // +1 or -1
    int eps_w;  // +1 or -1
    int j;      // channel 1..4, derived from (sigma, eps_w)
    int eps_j;  // +1 for j in {1,3}, -1 for j in {2,4}
};

Label make_label(int m, int sigma, int eps_w);

// (m, sigma, eps_w) lexicographic, + before -.
std::array<Label, 16> all_labels();

// all labels except the incident one, (0, +, -).
std::array<Label, 15> scattered_labels();

bool is_incident(const Label& l);

// b = exp(i sigma (zeta_i + eps_w pi/4))^((-1)^m) with zeta_i = theta_i + i eps.
cplx forcing_phase(const Label& l, const WedgeConfig& cfg);

struct PoleRoots {
    cplx t_in;   // |t_in| < 1
    cplx t_out;  // reciprocal root
};

// Roots of t^2 - ((b^2+1)/(sqrt2 b)) t + 1 = 0.
PoleRoots pole_roots(cplx b, double pole_guard = 1e-8);

struct PoleRecord {
    Label label;
    cplx b;
    cplx t;
    cplx Y;
    TorusPoint u;
};

// Solve s(q) = b on the surface, transport by (t, Y) -> (i^-m t, (-1)^m Y),
// and lift to the torus.
PoleRecord pole_record(const Label& l, const WedgeConfig& cfg);

}  // namespace lemwedge
