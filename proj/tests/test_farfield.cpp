#include "doctest.h"
#include "oracles.hpp"

#include <lemwedge/errors.hpp>
#include <lemwedge/farfield.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace lemwedge;

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);

double wrap(double x) { return std::remainder(x, 2.0 * M_PI); }

double dist_to(const std::vector<double>& dirs, double theta) {
    double d = 1e9;
    for (double z : dirs) d = std::min(d, std::abs(wrap(theta - z)));
    return d;
}

bool contains_angle(const std::vector<double>& dirs, double theta) {
    return dist_to(dirs, theta) < 1e-9;
}

// Boundary lift of a real angle, rebuilt from public pieces: both roots of
// the quadratic for t are unimodular there, and the physical one continues
// the |t| < 1 branch from just above the axis.
TorusPoint boundary_point(double theta) {
    const cplx b = spectral_exponential(cplx(theta, 0.0));
    const cplx p = (b * b + 1.0) / (SQRT2 * b);
    const cplx d = std::sqrt(p * p - 4.0);
    const cplx r1 = 0.5 * (p + d), r2 = 0.5 * (p - d);
    const cplx tr = point_of_zeta({cplx(theta, 1e-4)}).t;
    const cplx t = std::abs(r1 - tr) < std::abs(r2 - tr) ? r1 : r2;
    const cplx Y = 2.0 * b * t - SQRT2 * (t * t + 1.0);
    return lift_u({t, Y, classify(t, Y)});
}

// Ladder of solutions at the given displacements, theta_i fixed.
std::vector<SpectralSolution> solutions_at(double theta_i,
                                           const std::vector<double>& eps) {
    std::vector<SpectralSolution> sols;
    for (double e : eps) {
        WedgeConfig c;
        c.theta_i = theta_i;
        c.eps = e;
        sols.push_back(assemble(c));
    }
    return sols;
}

// Lagrange interpolation through (eps[k], q[k]) evaluated at x.
cplx lagrange(const std::vector<double>& eps, const std::vector<cplx>& q,
              double x) {
    cplx out = 0.0;
    for (size_t k = 0; k < eps.size(); ++k) {
        cplx term = q[k];
        for (size_t j = 0; j < eps.size(); ++j)
            if (j != k) term *= (x - eps[j]) / (eps[k] - eps[j]);
        out += term;
    }
    return out;
}
}  // namespace

TEST_CASE("prefactor and wavenumber scaling") {
    const cplx pref = diffraction_prefactor(1.0);
    CHECK(std::abs(pref - std::sqrt(2.0 / M_PI) *
                              cplx(std::cos(0.75 * M_PI),
                                   -std::sin(0.75 * M_PI))) < 1e-15);
    CHECK(std::abs(diffraction_prefactor(4.0) - pref / 2.0) < 1e-16);
    WedgeConfig cfg;
    const double th = cfg.theta_i + 0.3;
    const cplx D1 = D_coefficient(th, cfg);
    WedgeConfig c4 = cfg;
    c4.k0 = 4.0;
    CHECK(std::abs(D_coefficient(th, c4) - D1 / 2.0) < 1e-14);
    // the ratio D / Q-boundary-value is the same at every angle
    const std::vector<double> ladder = {1e-2, 1e-3, 1e-4};
    const std::vector<SpectralSolution> sols =
        solutions_at(cfg.theta_i, ladder);
    std::vector<cplx> ratios;
    for (double theta : {th, 2.2, 2.356}) {
        const TorusPoint ub = boundary_point(theta);
        std::vector<cplx> q;
        for (const SpectralSolution& s : sols) q.push_back(Q_scat_u(ub.u, s));
        ratios.push_back(D_coefficient(theta, cfg) / lagrange(ladder, q, 0.0));
    }
    CHECK(std::abs(ratios[0] - ratios[1]) < 1e-14);
    CHECK(std::abs(ratios[0] - ratios[2]) < 1e-14);
    CHECK(std::abs(ratios[0] - diffraction_prefactor(cfg.k0)) < 1e-14);
}

TEST_CASE("boundary value extrapolates to the frozen coefficient") {
    WedgeConfig cfg;  // theta_i = pi/2, k0 = 1
    const double th = cfg.theta_i + 0.3;
    const cplx D = D_coefficient(th, cfg);
    CHECK(std::abs(D - cplx(-0.023654080917365605, -0.051619769813116522)) <
          1e-12);
    // a single rung of the ladder, before extrapolation
    const std::vector<SpectralSolution> s3 = solutions_at(cfg.theta_i, {1e-3});
    const cplx D3 = diffraction_prefactor(cfg.k0) *
                    Q_scat_u(boundary_point(th).u, s3[0]);
    CHECK(std::abs(D3 - cplx(-0.024555208461659777, -0.051693521415768907)) <
          1e-12);
}

TEST_CASE("ladder interpolant agrees with direct small-displacement values") {
    const double theta_i = 1.9;
    WedgeConfig cfg;
    cfg.theta_i = theta_i;
    const std::vector<double> dirs = go_directions(cfg);
    const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5};
    const std::vector<SpectralSolution> sols = solutions_at(theta_i, eps);
    auto g = oracles::rng(113);
    int used = 0;
    double worst = 0.0;
    while (used < 20) {
        const double th = oracles::uniform(g, 0.0, 2.0 * M_PI);
        if (dist_to(dirs, th) < 0.4) continue;
        ++used;
        const TorusPoint ub = boundary_point(th);
        std::vector<cplx> q;
        for (const SpectralSolution& s : sols) q.push_back(Q_scat_u(ub.u, s));
        const cplx interp = lagrange({eps[0], eps[1], eps[2]},
                                     {q[0], q[1], q[2]}, eps[3]);
        worst = std::max(worst, std::abs(interp - q[3]));
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("observation angles of the collapsed poles") {
    WedgeConfig cfg;
    cfg.theta_i = 1.0;
    const std::vector<double> dirs = go_directions(cfg);
    CHECK(dirs.size() == 15);
    for (double z : dirs) CHECK(std::isfinite(z));
    // reflections and transmissions of the incident direction, plus the
    // face directions themselves
    CHECK(contains_angle(dirs, -1.0));
    CHECK(contains_angle(dirs, M_PI - 1.0));
    CHECK(contains_angle(dirs, M_PI_2 - 1.0));
    CHECK(contains_angle(dirs, M_PI_2 + 1.0));
    CHECK(contains_angle(dirs, 1.5 * M_PI - 1.0));
    CHECK(contains_angle(dirs, M_PI_4));
    CHECK(contains_angle(dirs, -0.75 * M_PI));
    // the forward direction belongs to the incident label and is excluded;
    // its nearest neighbour in the set is the pi/4 face direction
    CHECK(!contains_angle(dirs, 1.0));
    CHECK(dist_to(dirs, 1.0) > 0.2);
}

TEST_CASE("sweep flags singular directions and keeps grid order") {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    const std::vector<double> dirs = go_directions(cfg);
    const double singular = dirs[0];
    // the angle furthest from every singular direction is safely evaluable
    double far = 0.0, far_dist = 0.0;
    for (int k = 0; k < 6284; ++k)
        if (dist_to(dirs, 0.001 * k) > far_dist) {
            far = 0.001 * k;
            far_dist = dist_to(dirs, far);
        }
    std::vector<double> grid = {singular, far, far + 0.01};
    std::sort(grid.begin(), grid.end());
    const FarFieldTable table = farfield_sweep(grid, cfg);
    REQUIRE(table.rows.size() == 3);
    for (size_t k = 0; k < 3; ++k) CHECK(table.rows[k].theta == grid[k]);
    for (const FarFieldRow& row : table.rows) {
        if (row.theta == singular) {
            CHECK(row.flag == "NearPoleDirection");
            CHECK(!std::isfinite(row.D.real()));
        } else {
            CHECK(row.flag.empty());
            CHECK(std::isfinite(row.D.real()));
        }
    }
    CHECK(table.max_residual < 1e-7);

    // a dense sweep completes; the exact face directions are refused as
    // pole directions, shadow-adjacent rows as unstable ladders
    std::vector<double> dense;
    for (int k = 0; k < 361; ++k) dense.push_back(2.0 * M_PI * k / 360.0);
    const FarFieldTable big = farfield_sweep(dense, cfg);
    REQUIRE(big.rows.size() == 361);
    int near_pole = 0, unstable = 0, valued = 0;
    for (const FarFieldRow& row : big.rows) {
        if (row.flag.empty()) {
            CHECK(std::isfinite(row.D.real()));
            ++valued;
        } else if (row.flag == "NearPoleDirection") {
            ++near_pole;
        } else if (row.flag == "ExtrapolationUnstable") {
            ++unstable;
        }
    }
    CHECK(valued > 100);
    CHECK(unstable > 0);
    CHECK(near_pole == 2);  // the two face directions pi/4 and 5 pi/4
    CHECK(valued + near_pole + unstable == 361);

    // a flag on a row is exactly the error a direct call raises
    if (unstable > 0) {
        double th_unstable = 0.0;
        for (const FarFieldRow& row : big.rows)
            if (row.flag == "ExtrapolationUnstable") {
                th_unstable = row.theta;
                break;
            }
        try {
            D_coefficient(th_unstable, cfg);
            CHECK(false);
        } catch (const wedge_error& e) {
            CHECK(e.code() == errc::extrapolation_unstable);
        }
    }
    try {
        D_coefficient(singular, cfg);
        CHECK(false);
    } catch (const wedge_error& e) {
        CHECK(e.code() == errc::near_pole_direction);
    }
}

TEST_CASE("reciprocity is measured, not asserted") {
    WedgeConfig cfg;
    const std::vector<double> grid = {1.0, 2.2, 3.4, 4.6};
    const ReciprocityReport rep = reciprocity_report(grid, cfg);
    CHECK(rep.refused_pairs == 0);
    for (int i = 0; i < 4; ++i) CHECK(rep.delta[i][i] == 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(rep.delta[i][j] == doctest::Approx(rep.delta[j][i]).epsilon(1e-12));
    CHECK(rep.max_delta > 0.1);
    CHECK(std::abs(rep.max_delta - 3.070738) < 1e-4);
    CHECK(rep.mean_delta > 0.0);
    CHECK(rep.mean_delta < rep.max_delta);
}

TEST_CASE("coefficient is periodic in the observation angle") {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    const double th = 2.027;  // far from every singular direction
    CHECK(std::abs(D_coefficient(th + 2.0 * M_PI, cfg) -
                   D_coefficient(th, cfg)) < 1e-10);
}
