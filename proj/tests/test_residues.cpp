#include "doctest.h"
#include "oracles.hpp"

#include <lemwedge/errors.hpp>
#include <lemwedge/poles.hpp>
#include <lemwedge/residues.hpp>

#include <cmath>
#include <complex>

using namespace lemwedge;

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);

WedgeConfig cfg_at(double theta_i, double eps) {
    WedgeConfig cfg;
    cfg.theta_i = theta_i;
    cfg.eps = eps;
    return cfg;
}

// residual channel combination entering the d identity
cplx beta_channel(cplx t, cplx Y) {
    return (I * Y / SQRT2) * (t * t - 1.0);
}
}  // namespace

TEST_CASE("orbit derivative") {
    const CurvePoint pi_point{I, curve_lift(I, -1).Y, Component::other};
    CHECK(std::abs(w_m_prime(0, pi_point) + 2.0 * SQRT2) < 1e-14);

    const CurvePoint one = curve_lift(1.0, +1);
    CHECK(std::abs(w_m_prime(1, one) + 2.0 * SQRT2 * I) < 1e-14);

    auto g = oracles::rng(64);
    for (int k = 0; k < 30; ++k) {
        const cplx t(oracles::uniform(g, -0.9, 0.9), oracles::uniform(g, -0.9, 0.9));
        if (std::abs(t) < 0.1) continue;
        const CurvePoint p = curve_lift(t, -1);
        const CurvePoint q = curve_lift(-t, -1);
        for (int m : {0, 1})
            CHECK(std::abs(w_m_prime(m + 2, q) + w_m_prime(m, p)) < 1e-13);
    }

    CHECK_THROWS_AS(w_m_prime(0, curve_lift(cplx(1e-12, 0.0), -1)), wedge_error);
}

TEST_CASE("residue prefactor") {
    const WedgeConfig cfg = cfg_at(1.9, 0.1);
    for (const Label& l : all_labels()) {
        const PoleRecord rec = pole_record(l, cfg);
        const cplx r = r_I_of(l, rec);
        const cplx t = rec.t;
        // the rationalized forms of eps_j / w_m'
        const cplx explicit_r =
            (l.m % 2 == 0)
                ? -(double)l.eps_j * I * t / (SQRT2 * (t * t - 1.0))
                : (double)l.eps_j * I * t / (SQRT2 * (t * t + 1.0));
        CHECK(std::abs(r - explicit_r) < 1e-13 * std::max(1.0, std::abs(r)));

        const Label lp = make_label((l.m + 2) % 4, l.sigma, l.eps_w);
        const PoleRecord rp = pole_record(lp, cfg);
        CHECK(std::abs(r_I_of(lp, rp) + r) < 1e-12 * std::max(1.0, std::abs(r)));
    }
}

TEST_CASE("structural zeros of the tables") {
    const WedgeConfig cfg = cfg_at(0.8, 0.05);
    for (const Label& l : all_labels()) {
        const PoleRecord rec = pole_record(l, cfg);
        if (l.m % 2 == 0) {
            if (l.j == 3) CHECK(alpha_table(l, rec) == cplx(0.0, 0.0));
            if (l.j == 3 || l.j == 4) CHECK(C_table(l, rec) == cplx(0.0, 0.0));
            if (l.j == 4) CHECK(d_table(l, rec) == cplx(0.0, 0.0));
        } else {
            if (l.j == 1) CHECK(beta_table(l, rec) == cplx(0.0, 0.0));
            if (l.j == 1 || l.j == 2) CHECK(C_table(l, rec) == cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("pairing compression of the coefficients") {
    const WedgeConfig cfg = cfg_at(2.4, 0.02);
    for (const Label& l : all_labels()) {
        const Label lp = make_label((l.m + 2) % 4, l.sigma, l.eps_w);
        const PoleRecord a = pole_record(l, cfg);
        const PoleRecord b = pole_record(lp, cfg);
        const double sa = std::max(1.0, std::abs(alpha_table(l, a)));
        CHECK(std::abs(alpha_table(lp, b) - alpha_table(l, a)) < 1e-12 * sa);
        const double sb = std::max(1.0, std::abs(beta_table(l, a)));
        CHECK(std::abs(beta_table(lp, b) - beta_table(l, a)) < 1e-12 * sb);
    }
}

TEST_CASE("table entries without Y are insensitive to the branch") {
    const WedgeConfig cfg = cfg_at(1.1, 0.07);
    for (const Label& l : all_labels()) {
        const PoleRecord rec = pole_record(l, cfg);
        PoleRecord flipped = rec;
        flipped.Y = -rec.Y;
        const bool alpha_has_Y =
            (l.m % 2 == 0) ? (l.j == 4) : (l.j == 3 || l.j == 4);
        if (!alpha_has_Y)
            CHECK(std::abs(alpha_table(l, flipped) - alpha_table(l, rec)) <
                  1e-13 * std::max(1.0, std::abs(alpha_table(l, rec))));
        const bool beta_has_Y =
            (l.m % 2 == 0) ? (l.j == 1 || l.j == 2) : (l.j == 2);
        if (!beta_has_Y)
            CHECK(std::abs(beta_table(l, flipped) - beta_table(l, rec)) <
                  1e-13 * std::max(1.0, std::abs(beta_table(l, rec))));
    }
}

TEST_CASE("residue record satisfies the channel identity") {
    for (double theta : {0.6, 1.9, 2.9}) {
        const WedgeConfig cfg = cfg_at(theta, 0.05);
        for (const Label& l : scattered_labels()) {
            const PoleRecord rec = pole_record(l, cfg);
            const ResidueRecord rr = residue_record(l, rec);
            const cplx t4 = rec.t * rec.t * rec.t * rec.t;
            const cplx want =
                (rr.alpha - beta_channel(rec.t, rec.Y) * rr.beta) / (4.0 * t4);
            CHECK(std::abs(rr.d - want) < 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("mode matrices") {
    const WedgeConfig cfg = cfg_at(1.3, 0.08);
    const PoleRecord rec = pole_record(make_label(1, +1, +1), cfg);
    const CurvePoint p{rec.t, rec.Y, classify(rec.t, rec.Y)};

    const cplx gp = g_prime(p);
    const cplx gpt = SQRT2 * (p.t * p.t + 1.0) / p.Y;
    const cplx A0 = 0.5 * (1.0 + gp), B0 = 0.5 * (1.0 - gp);
    const cplx A1 = 0.5 * (1.0 - gpt), B1 = 0.5 * (1.0 + gpt);
    CHECK(std::abs(A0 + B0 - 1.0) < 1e-14);
    CHECK(std::abs(A1 + B1 - 1.0) < 1e-14);

    for (int k = 0; k < 4; ++k) {
        const ModeMatrices mm = mode_matrices(k, p);
        // closed-form inverse really inverts
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const cplx e = mm.M_U_inv[a][0] * mm.M_U[0][b] +
                               mm.M_U_inv[a][1] * mm.M_U[1][b];
                CHECK(std::abs(e - ((a == b) ? 1.0 : 0.0)) < 1e-12);
                const cplx f = mm.M_V_inv[a][0] * mm.M_V[0][b] +
                               mm.M_V_inv[a][1] * mm.M_V[1][b];
                CHECK(std::abs(f - ((a == b) ? 1.0 : 0.0)) < 1e-12);
            }
        // determinant cross-relation between the U and V families
        const ModeMatrices mirror = mode_matrices((4 - k) % 4, p);
        CHECK(std::abs(mm.det_V + mirror.det_U) < 1e-13);
    }

    const CurvePoint bp{1.0, 1e-3, Component::other};
    CHECK_THROWS_AS(mode_matrices(0, bp, 1e-2), wedge_error);
}

TEST_CASE("table values match the mode-system solve") {
    auto g = oracles::rng(20250);
    int sweeps = 0;
    while (sweeps < 20) {
        const double theta = oracles::uniform(g, 0.2, 3.0);
        const double eps = std::pow(10.0, oracles::uniform(g, -3.0, -1.0));
        const WedgeConfig cfg = cfg_at(theta, eps);
        for (const Label& l : scattered_labels()) {
            PoleRecord rec;
            try {
                rec = pole_record(l, cfg);
            } catch (const wedge_error&) {
                goto next_sweep;  // degenerate sample; resample cfg
            }
            const ModeCoefficients mc = coeff_from_modes(l, rec);
            const cplx ta = alpha_table(l, rec);
            const cplx tb = beta_table(l, rec);
            const cplx tc = C_table(l, rec);
            CHECK(std::abs(mc.alpha - ta) < 1e-9 * std::max(1.0, std::abs(ta)));
            CHECK(std::abs(mc.beta - tb) < 1e-9 * std::max(1.0, std::abs(tb)));
            CHECK(std::abs(mc.C - tc) < 1e-9 * std::max(1.0, std::abs(tc)));

            // structural zeros come out of the linear algebra as zeros
            if (l.m % 2 == 0 && l.j == 3) CHECK(std::abs(mc.alpha) < 1e-12);
            if (l.m % 2 == 1 && l.j == 1) CHECK(std::abs(mc.beta) < 1e-12);
        }
        ++sweeps;
    next_sweep:;
    }
}
