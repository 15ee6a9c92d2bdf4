#include "lemwedge/jet.hpp"

#include <cmath>

#include "lemwedge/errors.hpp"

namespace lemwedge {

namespace {
const double SQRT2 = std::sqrt(2.0);

cplx basepoint() { return {0.0, omega_r}; }
}  // namespace

ShiftData shift_data(const Label& l, const PoleRecord& rec, double pole_guard) {
    const cplx D = rec.Y + SQRT2;
    if (std::abs(D) < pole_guard)
        raise(errc::shift_singularity, "shift data undefined where Y = -sqrt2");
    const cplx t = rec.t;
    const cplx W0 = -SQRT2 * t * t / D;
    return {l, W0, -4.0 * t / D, 12.0 * t * t * t * t / (D * D) - 2.0};
}

std::vector<LabelData> label_data(const WedgeConfig& cfg) {
    std::vector<LabelData> out;
    out.reserve(15);
    for (const Label& l : scattered_labels()) {
        const PoleRecord rec = pole_record(l, cfg);
        out.push_back({rec, residue_record(l, rec),
                       shift_data(l, rec, cfg.tol.pole_guard),
                       zeta_w(basepoint() - rec.u.u, cfg.tol.pole_guard)});
    }
    return out;
}

JetCoeffs jet_coeffs(const std::vector<LabelData>& data) {
    JetCoeffs j{};
    for (const LabelData& d : data) {
        j.p1 += d.res.alpha * d.shift.W0;
        j.p2 += d.res.alpha * d.shift.W1;
        j.p3 += d.res.alpha * d.shift.W2;
        j.q1 += d.res.beta * d.shift.W0;
        j.q2 += d.res.beta * d.shift.W1;
        j.q3 += d.res.beta * d.shift.W2;
    }
    j.p1 /= SQRT2;
    j.p2 /= 4.0;
    j.p3 /= 12.0 * SQRT2;
    j.q1 /= SQRT2;
    j.q2 /= 4.0;
    j.q3 /= 12.0 * SQRT2;
    return j;
}

namespace {
cplx zeta_sum(cplx u, const std::vector<LabelData>& data, bool use_beta,
              double pole_guard) {
    for (const LabelData& d : data)
        if (lattice_distance(u - d.pole.u.u) < pole_guard)
            raise(errc::evaluation_at_pole,
                  "zeta sum evaluated at a forcing pole");
    cplx acc = 0.0;
    for (const LabelData& d : data) {
        const cplx coef = use_beta ? d.res.beta : d.res.alpha;
        acc += coef * (zeta_w(u - d.pole.u.u, pole_guard) - d.zw_base);
    }
    return acc;
}
}  // namespace

cplx A_sum(cplx u, const std::vector<LabelData>& data, double pole_guard) {
    return zeta_sum(u, data, false, pole_guard);
}

cplx B_sum(cplx u, const std::vector<LabelData>& data, double pole_guard) {
    return zeta_sum(u, data, true, pole_guard);
}

cplx delta_of_t(cplx t) {
    const TorusPoint u = lift_u(curve_lift(t, -1));
    return reduce_centered(u.u - basepoint());
}

}  // namespace lemwedge
