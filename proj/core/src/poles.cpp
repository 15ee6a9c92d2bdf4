#include "lemwedge/poles.hpp"

#include <cmath>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);
const double QUARTER_PI = 0.78539816339744830962;

// i^(-m) for m = 0..3
const cplx inv_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
}  // namespace

Label make_label(int m, int sigma, int eps_w) {
    const int j = (sigma > 0) ? ((eps_w > 0) ? 3 : 1) : ((eps_w > 0) ? 4 : 2);
    const int eps_j = (j == 1 || j == 3) ? +1 : -1;
    return {m, sigma, eps_w, j, eps_j};
}

std::array<Label, 16> all_labels() {
    std::array<Label, 16> out{};
    int k = 0;
    for (int m = 0; m < 4; ++m)
        for (int sigma : {+1, -1})
            for (int eps_w : {+1, -1}) out[k++] = make_label(m, sigma, eps_w);
    return out;
}

bool is_incident(const Label& l) {
    return l.m == 0 && l.sigma == +1 && l.eps_w == -1;
}

std::array<Label, 15> scattered_labels() {
    std::array<Label, 15> out{};
    int k = 0;
    for (const Label& l : all_labels())
        if (!is_incident(l)) out[k++] = l;
    return out;
}

cplx forcing_phase(const Label& l, const WedgeConfig& cfg) {
    if (cfg.eps <= 0.0)
        raise(errc::degenerate_eps,
              "forcing phases require a positive displacement");
    const cplx zeta_i(cfg.theta_i, cfg.eps);
    const cplx a =
        std::exp(I * (double)l.sigma * (zeta_i + (double)l.eps_w * QUARTER_PI));
    return (l.m % 2 == 0) ? a : 1.0 / a;
}

PoleRoots pole_roots(cplx b, double pole_guard) {
    const cplx b2 = b * b;
    if (std::abs(b2 * b2 - 6.0 * b2 + 1.0) < pole_guard)
        raise(errc::double_root, "pole quadratic has a repeated root");
    const cplx p = (b2 + 1.0) / (SQRT2 * b);
    const cplx d = std::sqrt(p * p - 4.0);
    const cplx big =
        (std::abs(p + d) >= std::abs(p - d)) ? 0.5 * (p + d) : 0.5 * (p - d);
    const cplx small = 1.0 / big;
    if (std::abs(std::abs(small) - 1.0) < pole_guard)
        raise(errc::unit_modulus_root, "pole roots sit on the unit circle");
    return {small, big};
}

PoleRecord pole_record(const Label& l, const WedgeConfig& cfg) {
    const cplx b = forcing_phase(l, cfg);
    const PoleRoots roots = pole_roots(b, cfg.tol.pole_guard);
    const cplx tq = roots.t_in;
    const cplx Yq = 2.0 * b * tq - SQRT2 * (tq * tq + 1.0);
    const cplx t = inv_i_pow[l.m & 3] * tq;
    const cplx Y = (l.m % 2 == 0) ? Yq : -Yq;
    const CurvePoint p{t, Y, classify(t, Y)};
    return {l, b, t, Y, lift_u(p, cfg.tol.tol_curve, cfg.tol.pole_guard)};
}

}  // namespace lemwedge
