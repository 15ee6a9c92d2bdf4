#include "lemwedge/residues.hpp"

#include <cmath>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);

// i^m for m = 0..3
const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx chi(int m) { return i_pow[m & 3]; }
cplx psi(int m) { return i_pow[m & 3]; }
cplx kappa(int m) { return i_pow[(m + 1) & 3]; }

cplx omega_pow(int k) { return i_pow[((k % 4) + 4) & 3]; }
}  // namespace

cplx w_m_prime(int m, const CurvePoint& p, double pole_guard) {
    if (std::abs(p.t) < pole_guard)
        raise(errc::division_near_zero, "orbit derivative undefined at t = 0");
    const cplx t = p.t;
    return (m % 2 == 0) ? I * SQRT2 * (t - 1.0 / t)
                        : -I * SQRT2 * (t + 1.0 / t);
}

cplx r_I_of(const Label& l, const PoleRecord& rec, double pole_guard) {
    const cplx w = w_m_prime(l.m, {rec.t, rec.Y, classify(rec.t, rec.Y)},
                             pole_guard);
    if (std::abs(w) < pole_guard)
        raise(errc::zero_orbit_derivative,
              "orbit derivative vanishes at the pole");
    return (double)l.eps_j / w;
}

cplx alpha_table(const Label& l, const PoleRecord& rec) {
    const cplx t = rec.t, Y = rec.Y;
    const cplx t2 = t * t, t4 = t2 * t2;
    const cplx r = r_I_of(l, rec);
    if (l.m % 2 == 0) {
        const cplx c = chi(l.m) * r;
        switch (l.j) {
            case 1: return -c * t2;
            case 2: return -c * (t4 - t2 + 1.0);
            case 3: return 0.0;
            case 4: return -c * (I * Y / SQRT2) * (t2 - 1.0);
        }
    } else {
        switch (l.j) {
            case 1: return psi(l.m) * r * t4;
            case 2: return psi(l.m) * r;
            case 3: return kappa(l.m) * r * (Y / SQRT2) * t2;
            case 4: return -kappa(l.m) * r * (Y / SQRT2);
        }
    }
    return 0.0;
}

cplx beta_table(const Label& l, const PoleRecord& rec) {
    const cplx t = rec.t, Y = rec.Y;
    const cplx t2 = t * t, t4 = t2 * t2;
    const cplx r = r_I_of(l, rec);
    if (l.m % 2 == 0) {
        const cplx c = chi(l.m) * r;
        switch (l.j) {
            case 1: return c * (I / SQRT2) * Y * t2;
            case 2: return c * (I / SQRT2) * Y;
            case 3: return -c * t4;
            case 4: return -c;
        }
    } else {
        switch (l.j) {
            case 1: return 0.0;
            case 2: return kappa(l.m) * r * (Y / SQRT2) * (t2 + 1.0);
            case 3: return psi(l.m) * r * t2;
            case 4: return -psi(l.m) * r * (t4 + t2 + 1.0);
        }
    }
    return 0.0;
}

cplx C_table(const Label& l, const PoleRecord& rec) {
    const cplx t = rec.t, Y = rec.Y;
    const cplx t2 = t * t, t4 = t2 * t2;
    const cplx r = r_I_of(l, rec);
    if (l.m % 2 == 0) {
        switch (l.j) {
            case 1: return -chi(l.m) * r / (2.0 * t2);
            case 2:
                return (l.m == 0)
                           ? -(r / 2.0) * (2.0 * t4 - 2.0 * t2 + 1.0) / t4
                           : (r / 2.0) / t4;
            default: return 0.0;
        }
    } else {
        switch (l.j) {
            case 3:
                return (r / 2.0) * (1.0 + kappa(l.m) * Y / (SQRT2 * t2));
            case 4:
                return -(r / (2.0 * t2)) *
                       (1.0 + kappa(l.m) * Y / (SQRT2 * t2));
            default: return 0.0;
        }
    }
}

cplx d_table(const Label& l, const PoleRecord& rec) {
    const cplx t = rec.t, Y = rec.Y;
    const cplx t2 = t * t, t4 = t2 * t2, t6 = t4 * t2;
    const cplx r = r_I_of(l, rec);
    if (l.m % 2 == 0) {
        const cplx c = chi(l.m);
        switch (l.j) {
            case 1: return c * (r / (4.0 * t2)) * (t6 - t4 + t2 - 2.0);
            case 2: return c * (r / (4.0 * t4)) * (t6 - 2.0 * t4 + 2.0 * t2 - 2.0);
            case 3: return c * (r / 4.0) * (I * Y / SQRT2) * (t2 - 1.0);
            case 4: return 0.0;
        }
    } else {
        switch (l.j) {
            case 1: return psi(l.m) * r / 4.0;
            case 2: return psi(l.m) * (r / 4.0) * t4;
            case 3:
                return kappa(l.m) * (r / 4.0) * (Y / SQRT2) * (2.0 - t2) / t2;
            case 4:
                return kappa(l.m) * (r / 4.0) * (Y / SQRT2) * (t6 - 2.0) / t4;
        }
    }
    return 0.0;
}

ResidueRecord residue_record(const Label& l, const PoleRecord& rec) {
    return {l,          r_I_of(l, rec),   alpha_table(l, rec),
            beta_table(l, rec), C_table(l, rec), d_table(l, rec)};
}

ModeMatrices mode_matrices(int k, const CurvePoint& p, double pole_guard) {
    const cplx gp = g_prime(p, pole_guard);
    const cplx gpt = SQRT2 * (p.t * p.t + 1.0) / p.Y;  // g' after tau
    const cplx A0 = 0.5 * (1.0 + gp), B0 = 0.5 * (1.0 - gp);
    const cplx A1 = 0.5 * (1.0 - gpt), B1 = 0.5 * (1.0 + gpt);
    const cplx wk = omega_pow(k), wmk = omega_pow(-k);

    ModeMatrices mm;
    mm.k = k;
    mm.M_U = {{{-wmk * A1, A0}, {-wk * B1, B0}}};
    mm.M_V = {{{-wmk * B1, B0}, {-wk * A1, A0}}};
    mm.det_U = wk * A0 * B1 - wmk * A1 * B0;
    mm.det_V = wk * A1 * B0 - wmk * A0 * B1;
    if (std::abs(mm.det_U) < pole_guard || std::abs(mm.det_V) < pole_guard)
        raise(errc::singular_mode_matrix, "mode matrix is singular");
    mm.M_U_inv = {{{B0 / mm.det_U, -A0 / mm.det_U},
                   {wk * B1 / mm.det_U, -wmk * A1 / mm.det_U}}};
    mm.M_V_inv = {{{A0 / mm.det_V, -B0 / mm.det_V},
                   {wk * A1 / mm.det_V, -wmk * B1 / mm.det_V}}};
    return mm;
}

Vec2 forcing_residue_vector(int k, const Label& l, const CurvePoint& p,
                            double pole_guard) {
    const cplx gp = g_prime(p, pole_guard);
    const cplx gpt = SQRT2 * (p.t * p.t + 1.0) / p.Y;
    const cplx A0 = 0.5 * (1.0 + gp), B0 = 0.5 * (1.0 - gp);
    const cplx A1 = 0.5 * (1.0 - gpt), B1 = 0.5 * (1.0 + gpt);
    const cplx Am = (l.m % 2 == 0) ? A0 : A1;
    const cplx Bm = (l.m % 2 == 0) ? B0 : B1;
    const cplx wk = omega_pow(k), wmk = omega_pow(-k);

    const cplx w = w_m_prime(l.m, p, pole_guard);
    if (std::abs(w) < pole_guard)
        raise(errc::zero_orbit_derivative,
              "orbit derivative vanishes at the pole");
    const cplx r = (double)l.eps_j / w;

    Vec2 v{};
    switch (l.j) {
        case 1: v = {wmk * Am, wk * Bm}; break;
        case 2: v = {wmk * Bm, wk * Am}; break;
        case 3: v = {-Am, -Bm}; break;
        case 4: v = {-Bm, -Am}; break;
    }
    const cplx scale = omega_pow(-k * l.m) * r;
    return {scale * v[0], scale * v[1]};
}

ModeCoefficients coeff_from_modes(const Label& l, const PoleRecord& rec,
                                  double pole_guard) {
    const CurvePoint p{rec.t, rec.Y, classify(rec.t, rec.Y)};
    const cplx t4 = rec.t * rec.t * rec.t * rec.t;

    std::array<Vec2, 4> g{};
    for (int k = 0; k < 4; ++k) {
        const ModeMatrices mm = mode_matrices(k, p, pole_guard);
        const Vec2 res = forcing_residue_vector(k, l, p, pole_guard);
        g[k] = {mm.M_U_inv[0][0] * res[0] + mm.M_U_inv[0][1] * res[1],
                mm.M_U_inv[1][0] * res[0] + mm.M_U_inv[1][1] * res[1]};
    }
    return {t4 * g[1][0], t4 * g[3][1],
            0.25 * (g[0][0] + g[1][0] + g[2][0] + g[3][0])};
}

}  // namespace lemwedge
