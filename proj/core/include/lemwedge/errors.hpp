#pragma once

#include <stdexcept>
#include <string>

namespace lemwedge {

// Every failure mode the library reports, by name.  The CLI prints these
// names verbatim, so they are part of the external contract.
enum class errc {
    pole_at_lattice,
    not_on_cubic,
    no_convergence,
    division_near_zero,
    branch_point,
    uniformization_pole,
    unit_modulus_root,
    degenerate_eps,
    double_root,
    zero_orbit_derivative,
    singular_mode_matrix,
    shift_singularity,
    evaluation_at_pole,
    incident_pole,
    near_pole_direction,
    extrapolation_unstable,
};

const char* errc_name(errc code) noexcept;

class wedge_error : public std::runtime_error {
public:
    wedge_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

}  // namespace lemwedge
