#pragma once

// Diffraction coefficient in the vanishing-absorption limit, angle sweeps,
// and the reciprocity-asymmetry report.

#include <array>
#include <string>
#include <vector>

#include "lemwedge/reconstruct.hpp"

namespace lemwedge {

// e^{-i 3pi/4} sqrt(2 / (pi k0)).
cplx diffraction_prefactor(double k0);

// Real observation angles onto which the scattered poles collapse as
// eps -> 0+; directions where D is genuinely singular.
std::vector<double> go_directions(const WedgeConfig& cfg);

// Lift of a real observation angle to the torus by continuity from the
// upper half-strip.
TorusPoint boundary_lift(double theta, const Tolerances& tol = Tolerances{});

// D(theta) = prefactor * Q_scat(theta), the boundary value obtained by
// evaluating at eps in {1e-2, 1e-3, 1e-4} and extrapolating to eps = 0.
// cfg.eps is ignored here; the ladder supplies the absorption.
cplx D_coefficient(double theta, const WedgeConfig& cfg);

struct FarFieldRow {
    double theta;
    cplx D;
    std::string flag;  // empty, or the error name for a refused direction
};

struct FarFieldTable {
    WedgeConfig cfg;
    std::array<double, 3> eps_ladder;
    double max_residual;  // worst ladder residual among unflagged rows
    std::vector<FarFieldRow> rows;
};

// One row per grid angle, in grid order; refused rows are flagged with the
// error name and carry a NaN coefficient instead of being dropped.
FarFieldTable farfield_sweep(const std::vector<double>& grid,
                             const WedgeConfig& cfg);

struct ReciprocityReport {
    std::vector<double> grid;
    std::vector<std::vector<double>> delta;  // |D(a;b) - D(b;a)|, NaN if refused
    double max_delta;
    double mean_delta;
    int refused_pairs;  // entries hitting a geometric-optics direction
};

// Measures |D(theta; theta') - D(theta'; theta)| over the grid square; the
// report records the asymmetry, it does not postulate one.
ReciprocityReport reciprocity_report(const std::vector<double>& grid,
                                     const WedgeConfig& cfg);

}  // namespace lemwedge
