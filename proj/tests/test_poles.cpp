#include "doctest.h"
#include "oracles.hpp"

#include <lemwedge/errors.hpp>
#include <lemwedge/poles.hpp>

#include <cmath>
#include <complex>
#include <vector>

#if HAVE_EIGEN
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#endif

using namespace lemwedge;

namespace {
const cplx I(0.0, 1.0);
const double SQRT2 = std::sqrt(2.0);

WedgeConfig test_cfg() {
    WedgeConfig cfg;
    cfg.theta_i = 1.9;
    cfg.eps = 0.1;
    return cfg;
}

// roots of t^2 - p t + q via companion-matrix eigenvalues
std::array<cplx, 2> quadratic_eigen(cplx p, cplx q) {
#if HAVE_EIGEN
    Eigen::Matrix2cd C;
    C << 0.0, -q, 1.0, p;
    const Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(C);
    return {es.eigenvalues()(0), es.eigenvalues()(1)};
#else
    return oracles::companion_roots(p, q);
#endif
}
}  // namespace

TEST_CASE("label bookkeeping") {
    const auto labels = all_labels();
    CHECK(labels.size() == 16);

    // lexicographic in (m, sigma, eps_w) with + before -
    CHECK(labels[0].m == 0);
    CHECK(labels[0].sigma == +1);
    CHECK(labels[0].eps_w == +1);
    CHECK(labels[1].eps_w == -1);
    CHECK(labels[2].sigma == -1);
    CHECK(labels[4].m == 1);
    CHECK(labels[15].m == 3);
    CHECK(labels[15].sigma == -1);
    CHECK(labels[15].eps_w == -1);

    CHECK(make_label(0, +1, -1).j == 1);
    CHECK(make_label(0, +1, +1).j == 3);
    CHECK(make_label(0, -1, +1).j == 4);
    CHECK(make_label(0, -1, -1).j == 2);
    CHECK(make_label(1, -1, +1).eps_j == -1);
    CHECK(make_label(2, +1, +1).eps_j == +1);

    const auto scat = scattered_labels();
    CHECK(scat.size() == 15);
    for (const Label& l : scat) CHECK_FALSE(is_incident(l));
    bool has_broken_partner = false;
    for (const Label& l : scat)
        if (l.m == 2 && l.sigma == +1 && l.eps_w == -1) has_broken_partner = true;
    CHECK(has_broken_partner);
}

TEST_CASE("forcing phases") {
    WedgeConfig cfg;
    cfg.theta_i = 0.0;
    cfg.eps = 0.1;
    const cplx b0 = forcing_phase(make_label(0, +1, +1), cfg);
    CHECK(std::abs(b0 - std::exp(-0.1) * std::exp(I * (M_PI / 4.0))) < 1e-15);

    const WedgeConfig c2 = test_cfg();
    for (int sigma : {+1, -1})
        for (int eps_w : {+1, -1}) {
            const cplx a = forcing_phase(make_label(0, sigma, eps_w), c2);
            CHECK(std::abs(forcing_phase(make_label(2, sigma, eps_w), c2) - a) <
                  1e-15);
            const cplx ai = forcing_phase(make_label(1, sigma, eps_w), c2);
            CHECK(std::abs(ai - 1.0 / a) < 1e-15);
            CHECK(std::abs(forcing_phase(make_label(3, sigma, eps_w), c2) - ai) <
                  1e-15);
            CHECK(std::abs(std::abs(a) - 1.0) > 1e-3);
        }

    WedgeConfig bad = c2;
    bad.eps = 0.0;
    CHECK_THROWS_AS(forcing_phase(make_label(0, +1, +1), bad), wedge_error);
}

TEST_CASE("pole quadratic") {
    auto g = oracles::rng(8080);
    for (int k = 0; k < 50; ++k) {
        const cplx b = std::exp(cplx(oracles::uniform(g, -0.5, 0.5),
                                     oracles::uniform(g, -3.0, 3.0)) *
                                I);
        PoleRoots r;
        try {
            r = pole_roots(b);
        } catch (const wedge_error&) {
            continue;  // unimodular or degenerate sample
        }
        CHECK(std::abs(r.t_in * r.t_out - 1.0) < 1e-14);
        CHECK(std::abs(r.t_in) < 1.0);
        CHECK(std::abs(r.t_out) > 1.0);
        const cplx p = (b * b + 1.0) / (SQRT2 * b);
        for (const cplx t : {r.t_in, r.t_out})
            CHECK(std::abs(t * t - p * t + 1.0) < 1e-13);
    }

    // reference roots from an eigenvalue solve of the companion matrix
    const cplx b = std::exp(-0.1) * std::exp(I * (M_PI / 4.0));
    const cplx p = (b * b + 1.0) / (SQRT2 * b);
    const auto ev = quadratic_eigen(p, 1.0);
    const cplx ref = (std::abs(ev[0]) < std::abs(ev[1])) ? ev[0] : ev[1];
    CHECK(std::abs(pole_roots(b).t_in - ref) < 1e-13);

    // repeated root at b = 1 + sqrt2, where b^4 - 6 b^2 + 1 = 0
    CHECK_THROWS_AS(pole_roots(cplx(1.0 + SQRT2, 0.0)), wedge_error);
    try {
        pole_roots(cplx(1.0 + SQRT2, 0.0));
    } catch (const wedge_error& e) {
        CHECK(std::string(e.name()) == "DoubleRoot");
    }

    // unimodular b forces both roots onto the unit circle
    CHECK_THROWS_AS(pole_roots(std::exp(0.3 * I)), wedge_error);
}

TEST_CASE("pole records") {
    const WedgeConfig cfg = test_cfg();
    std::vector<PoleRecord> recs;
    for (const Label& l : all_labels()) recs.push_back(pole_record(l, cfg));

    for (const PoleRecord& r : recs) {
        CHECK(std::abs(r.t) < 1.0);
        CHECK(curve_residual(r.t, r.Y) < 1e-12);
        // the lift reproduces the uniformized coordinates
        const CubicPair c = uniformize({r.t, r.Y, classify(r.t, r.Y)});
        CHECK(std::abs(wp(r.u.u) - c.x) < 1e-9 * std::max(1.0, std::abs(c.x)));
        CHECK(std::abs(0.5 * wp_prime(r.u.u) - c.y_half) <
              1e-7 * std::max(1.0, std::abs(c.y_half)));
    }

    // s(q) = b at the untransported point
    for (const Label& l : all_labels()) {
        const cplx b = forcing_phase(l, cfg);
        const cplx tq = pole_roots(b).t_in;
        const cplx Yq = 2.0 * b * tq - SQRT2 * (tq * tq + 1.0);
        const cplx s = snell_s({tq, Yq, classify(tq, Yq)});
        CHECK(std::abs(s - b) < 1e-12 * std::max(1.0, std::abs(b)));
    }

    // half-turn pairing (m -> m+2): t flips sign, Y is fixed, u negates
    for (int idx = 0; idx < 16; ++idx) {
        const Label l = all_labels()[idx];
        const Label lp = make_label((l.m + 2) % 4, l.sigma, l.eps_w);
        const PoleRecord a = pole_record(l, cfg);
        const PoleRecord b = pole_record(lp, cfg);
        CHECK(std::abs(b.t + a.t) < 1e-13);
        CHECK(std::abs(b.Y - a.Y) < 1e-13);
        CHECK(lattice_distance(a.u.u + b.u.u) < 1e-9);
    }

    // all sixteen torus points are distinct; the incident one in particular
    for (size_t i = 0; i < recs.size(); ++i)
        for (size_t k = i + 1; k < recs.size(); ++k)
            CHECK(lattice_distance(recs[i].u.u - recs[k].u.u) > 1e-4);
}

TEST_CASE("pole records match reference points") {
    // frozen from a high-precision solve of the quadratic, transport, and
    // torus lift at theta_i = 1.9, eps = 0.1
    const WedgeConfig cfg = test_cfg();

    const PoleRecord inc = pole_record(make_label(0, +1, -1), cfg);
    CHECK(std::abs(inc.t - cplx(0.29215604980668845, 0.88850243395367475)) < 1e-11);
    CHECK(std::abs(inc.Y - cplx(-1.6290472366155186, 0.44876884794709154)) < 1e-11);
    CHECK(std::abs(inc.u.u - cplx(0.16369069619859093, 1.929366551960761)) < 1e-10);

    const PoleRecord pair = pole_record(make_label(2, +1, -1), cfg);
    CHECK(std::abs(pair.t + inc.t) < 1e-15);
    CHECK(std::abs(pair.u.u - cplx(2.4583668580935289, 0.69269100233135882)) < 1e-10);

    const PoleRecord odd = pole_record(make_label(1, -1, +1), cfg);
    CHECK(std::abs(odd.t - cplx(0.73992165906610407, 0.61215681650347554)) < 1e-11);
    CHECK(std::abs(odd.Y - cplx(0.76527930587819409, 0.40897966511892129)) < 1e-11);
    CHECK(std::abs(odd.u.u - cplx(0.70128491319678691, 2.1884157190507262)) < 1e-10);
}
