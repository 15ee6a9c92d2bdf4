#include "lemwedge/elliptic.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace lemwedge {

namespace {

constexpr double two_w = 2.0 * omega_r;
const cplx iunit(0.0, 1.0);

// Laurent coefficients of wp at the origin for g2 = 4, g3 = 0:
//   wp(v) = 1/v^2 + sum_{k>=2} c_k v^(2k-2),
// c_2 = g2/20, c_3 = g3/28 = 0, and the standard recursion
//   c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.
// 26 coefficients keep the truncation error below 1e-16 for |v| up to
// omega_r/sqrt(2), the largest argument the reduction below produces.
constexpr int n_coeff = 26;

std::array<double, n_coeff + 1> make_coeffs() {
    std::array<double, n_coeff + 1> c{};
    c[2] = 4.0 / 20.0;
    c[3] = 0.0;
    for (int k = 4; k <= n_coeff; ++k) {
        double s = 0.0;
        for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
        c[k] = 3.0 * s / ((2 * k + 1) * (k - 3));
    }
    return c;
}

const std::array<double, n_coeff + 1> laurent = make_coeffs();

// Series evaluations, valid for |v| <= omega_r/sqrt(2) (about 0.93).
cplx wp_series(cplx v) {
    const cplx v2 = v * v;
    cplx acc = 0.0;
    for (int k = n_coeff; k >= 2; --k) acc = acc * v2 + laurent[k];
    return 1.0 / v2 + acc * v2;
}

cplx wp_prime_series(cplx v) {
    const cplx v2 = v * v;
    cplx acc = 0.0;
    for (int k = n_coeff; k >= 2; --k) acc = acc * v2 + (2 * k - 2) * laurent[k];
    return -2.0 / (v2 * v) + acc * v;
}

cplx zeta_series(cplx v) {
    const cplx v2 = v * v;
    cplx acc = 0.0;
    for (int k = n_coeff; k >= 2; --k) acc = acc * v2 + laurent[k] / (2 * k - 1);
    return 1.0 / v - acc * v2 * v;
}

// One evaluation pass shared by wp, wp_prime and zeta_w.  The argument is
// first reduced modulo the full period lattice, then shifted to the nearest
// quarter-lattice point h = omega_r (m1 + i m2).  For h in the half-period
// classes the shift identities
//   wp(v + w_j)  = e_j + M_j / (wp(v) - e_j)
//   wp'(v + w_j) = -M_j wp'(v) / (wp(v) - e_j)^2
//   zeta(v + w_j) = zeta(v) + eta_j + wp'(v) / (2 (wp(v) - e_j))
// finish the job, with M_j = (e_j - e_a)(e_j - e_b) = 2, 2, -1 for
// e_j = 1, -1, 0.  zeta picks up 2 eta per full period crossed.
struct EvalResult {
    cplx p;   // wp
    cplx pp;  // wp'
    cplx z;   // zeta_w
};

EvalResult eval_all(cplx u) {
    const cplx eta3 = -iunit * eta1;

    // centered reduction modulo 2 omega_r (Z + iZ)
    const double n1 = std::floor(u.real() / two_w + 0.5);
    const double n2 = std::floor(u.imag() / two_w + 0.5);
    cplx v(u.real() - two_w * n1, u.imag() - two_w * n2);
    cplx zshift = 2.0 * n1 * eta1 + 2.0 * n2 * eta3;

    // nearest quarter-lattice point within the centered square
    const int m1 = (int)std::floor(v.real() / omega_r + 0.5);
    const int m2 = (int)std::floor(v.imag() / omega_r + 0.5);
    const int d1 = ((m1 % 2) + 2) % 2;
    const int d2 = ((m2 % 2) + 2) % 2;
    const int q1 = (m1 - d1) / 2;  // -1 or 0
    const int q2 = (m2 - d2) / 2;
    v -= omega_r * cplx(m1, m2);
    zshift += 2.0 * q1 * eta1 + 2.0 * q2 * eta3;

    if (d1 == 0 && d2 == 0) {
        return {wp_series(v), wp_prime_series(v), zeta_series(v) + zshift};
    }

    double e;
    cplx eta_h;
    if (d1 == 1 && d2 == 0) {
        e = 1.0;
        eta_h = eta1;
    } else if (d1 == 0 && d2 == 1) {
        e = -1.0;
        eta_h = eta3;
    } else {
        e = 0.0;
        eta_h = eta1 + eta3;
    }
    const double M = (e == 0.0) ? -1.0 : 2.0;

    if (std::abs(v) < 1e-300) {
        // exactly on the half-lattice: wp = e_j, wp' = 0, zeta = eta_j
        return {e, 0.0, eta_h + zshift};
    }

    const cplx p0 = wp_series(v);
    const cplx pp0 = wp_prime_series(v);
    const cplx z0 = zeta_series(v);
    const cplx den = p0 - e;
    return {e + M / den,
            -M * pp0 / (den * den),
            z0 + eta_h + 0.5 * pp0 / den + zshift};
}

void check_off_lattice(cplx u, double pole_guard) {
    if (lattice_distance(u) < pole_guard)
        raise(errc::pole_at_lattice, "argument within pole_guard of a lattice point");
}

// Carlson symmetric integral R_F by the duplication algorithm, used as the
// Abel-map seed for invert_wp.  Principal square roots throughout.
cplx carlson_rf(cplx x, cplx y, cplx z) {
    for (int it = 0; it < 64; ++it) {
        const cplx sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const cplx lam = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        const cplx mu = (x + y + z) / 3.0;
        const double scale = std::abs(mu);
        if (scale > 0.0 &&
            std::abs(x - mu) < 1e-8 * scale &&
            std::abs(y - mu) < 1e-8 * scale &&
            std::abs(z - mu) < 1e-8 * scale)
            break;
    }
    const cplx mu = (x + y + z) / 3.0;
    const cplx X = 1.0 - x / mu, Y = 1.0 - y / mu, Z = 1.0 - z / mu;
    const cplx e2 = X * Y + Y * Z + Z * X;
    const cplx e3 = X * Y * Z;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0)
           / std::sqrt(mu);
}

bool newton_polish(cplx& u, cplx x, double tol) {
    for (int it = 0; it < 60; ++it) {
        if (lattice_distance(u) < 1e-12) return false;
        const EvalResult r = eval_all(u);
        const cplx f = r.p - x;
        if (std::abs(f) < tol) return true;
        if (std::abs(r.pp) < 1e-300) return false;
        cplx step = f / r.pp;
        const double cap = 0.5 * omega_r;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        u -= step;
    }
    return false;
}

// Refine against both curve coordinates.  Near branch points wp' degenerates
// and u is conditioned through wp' - 2y instead, whose derivative wp'' stays
// away from zero there; the two equations never degenerate simultaneously.
void newton_polish_xy(cplx& u, cplx x, cplx y_half) {
    const double sx = std::max(1.0, std::abs(x));
    const double sy = std::max(1.0, 2.0 * std::abs(y_half));
    cplx best = u;
    double best_err = std::numeric_limits<double>::infinity();
    cplx cur = u;
    for (int it = 0; it < 40; ++it) {
        if (lattice_distance(cur) < 1e-12) break;
        const EvalResult r = eval_all(cur);
        const cplx fx = r.p - x;
        const cplx fy = r.pp - 2.0 * y_half;
        const double err = std::abs(fx) / sx + std::abs(fy) / sy;
        if (err < best_err) {
            best_err = err;
            best = cur;
        }
        if (err < 1e-15) break;
        const cplx psec = 6.0 * r.p * r.p - 2.0;
        cplx step = (std::abs(r.pp) >= std::abs(psec)) ? fx / r.pp : fy / psec;
        const double cap = 0.25 * omega_r;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        if (!(std::abs(step) > 1e-17)) break;
        cur -= step;
    }
    u = best;
}

}  // namespace

LatticeData half_periods() {
    return {omega_r, cplx(0.0, omega_r), TorusPoint{cplx(0.0, omega_r)}};
}

cplx reduce(cplx u) {
    const double k1 = std::floor(u.real() / two_w);
    const double k2 = std::floor(u.imag() / two_w);
    double re = u.real() - two_w * k1;
    double im = u.imag() - two_w * k2;
    // rounding can leave a value outside the half-open square when the
    // argument sits just below a period multiple; fold those back
    if (re < 0.0) re += two_w;
    if (im < 0.0) im += two_w;
    if (re >= two_w) re -= two_w;
    if (im >= two_w) im -= two_w;
    return {re, im};
}

TorusPoint reduce(TorusPoint p) { return {reduce(p.u)}; }

cplx reduce_centered(cplx u) {
    const double n1 = std::floor(u.real() / two_w + 0.5);
    const double n2 = std::floor(u.imag() / two_w + 0.5);
    return {u.real() - two_w * n1, u.imag() - two_w * n2};
}

double lattice_distance(cplx u) { return std::abs(reduce_centered(u)); }

cplx wp(cplx u, double pole_guard) {
    check_off_lattice(u, pole_guard);
    return eval_all(u).p;
}

cplx wp_prime(cplx u, double pole_guard) {
    check_off_lattice(u, pole_guard);
    return eval_all(u).pp;
}

cplx wp_second(cplx u, double pole_guard) {
    const cplx p = wp(u, pole_guard);
    return 6.0 * p * p - 2.0;
}

cplx zeta_w(cplx u, double pole_guard) {
    check_off_lattice(u, pole_guard);
    return eval_all(u).z;
}

TorusPoint invert_wp(cplx x, cplx y_half, double tol_curve) {
    const cplx cubic = y_half * y_half - (x * x * x - x);
    const double scale =
        std::max({1.0, std::abs(x * x * x), std::abs(y_half * y_half)});
    if (std::abs(cubic) > tol_curve * scale)
        raise(errc::not_on_cubic, "(x, y_half) does not satisfy y^2 = x^3 - x");

    // exact branch points of the cubic map to the half-periods
    const double atol = 1e-13;
    if (std::abs(x + 1.0) < atol && std::abs(y_half) < atol)
        return {cplx(0.0, omega_r)};
    if (std::abs(x - 1.0) < atol && std::abs(y_half) < atol)
        return {cplx(omega_r, 0.0)};
    if (std::abs(x) < atol && std::abs(y_half) < atol)
        return {cplx(omega_r, omega_r)};

    // Abel-map seed: u = R_F(x - e1, x - e2, x - e3) = int_x^inf dw/(2 sqrt(w^3 - w))
    cplx u = carlson_rf(x - 1.0, x, x + 1.0);
    const double ftol = 1e-13 * std::max(1.0, std::abs(x));

    if (!newton_polish(u, x, ftol)) {
        // fall back to a coarse scan of the fundamental square
        double best = std::numeric_limits<double>::infinity();
        cplx best_u = u;
        const int n = 48;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const cplx cand(two_w * (a + 0.5) / n, two_w * (b + 0.5) / n);
                if (lattice_distance(cand) < 0.05) continue;
                const double err = std::abs(eval_all(cand).p - x);
                if (err < best) {
                    best = err;
                    best_u = cand;
                }
            }
        }
        u = best_u;
        if (!newton_polish(u, x, ftol))
            raise(errc::no_convergence, "Newton polish of the Abel map failed");
    }

    // the sign of wp' selects between u and -u
    const cplx half = eval_all(u).pp * 0.5;
    if (std::abs(half - y_half) > std::abs(-half - y_half)) u = -u;

    newton_polish_xy(u, x, y_half);
    u = reduce(u);
    const EvalResult fin = eval_all(u);
    if (std::abs(fin.p - x) > 1e-9 * std::max(1.0, std::abs(x)) ||
        std::abs(0.5 * fin.pp - y_half) > 1e-7 * std::max(1.0, std::abs(y_half)))
        raise(errc::no_convergence, "inversion verification failed");
    return {u};
}

}  // namespace lemwedge
