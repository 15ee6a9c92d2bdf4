#include "lemwedge/errors.hpp"

namespace lemwedge {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::pole_at_lattice:        return "PoleAtLattice";
        case errc::not_on_cubic:           return "NotOnCubic";
        case errc::no_convergence:         return "NoConvergence";
        case errc::division_near_zero:     return "DivisionNearZero";
        case errc::branch_point:           return "BranchPoint";
        case errc::uniformization_pole:    return "UniformizationPole";
        case errc::unit_modulus_root:      return "UnitModulusRoot";
        case errc::degenerate_eps:         return "DegenerateEps";
        case errc::double_root:            return "DoubleRoot";
        case errc::zero_orbit_derivative:  return "ZeroOrbitDerivative";
        case errc::singular_mode_matrix:   return "SingularModeMatrix";
        case errc::shift_singularity:      return "ShiftSingularity";
        case errc::evaluation_at_pole:     return "EvaluationAtPole";
        case errc::incident_pole:          return "IncidentPole";
        case errc::near_pole_direction:    return "NearPoleDirection";
        case errc::extrapolation_unstable: return "ExtrapolationUnstable";
    }
    return "UnknownError";
}

void raise(errc code, const std::string& what) {
    throw wedge_error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace lemwedge
