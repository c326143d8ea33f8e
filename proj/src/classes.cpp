#include "toricc/classes.hpp"

#include "toricc/errors.hpp"

namespace toricc {

static CycleClass ray_cap_product(const FanPtr& fan, SeriesKind kind) {
    require_smooth_complete(*fan);
    TruncSeries s = series_coefficients(kind, fan->rank());
    CycleClass c = CycleClass::fundamental(fan);
    for (int rho = 0; rho < fan->num_rays(); ++rho)
        c = cap_series(s, TDivisor::ray_divisor(fan, rho), c);
    return c;
}

CycleClass todd_class(const FanPtr& fan) { return ray_cap_product(fan, SeriesKind::todd); }

CycleClass omega_todd_class(const FanPtr& fan) {
    return ray_cap_product(fan, SeriesKind::todd_dual);
}

CycleClass chern_class_ehler(const FanPtr& fan) {
    require_valid(*fan);
    CycleClass c(fan);
    for (ConeId id = 0; id < fan->num_cones(); ++id) c.add_term(id, CoeffElem::one());
    return canonical_form(c);
}

CycleClass hirzebruch_unnormalized(const FanPtr& fan) {
    require_smooth_complete(*fan);
    const int n = fan->rank();
    CycleClass total(fan);
    for (ConeId sigma = 0; sigma < fan->num_cones(); ++sigma) {
        StarData star = star_fan(fan, sigma);
        CycleClass local = omega_todd_class(star.quotient);
        CycleClass pushed = pushforward_from_star(star, local);
        int orbit_dim = n - fan->cone_dim(sigma);
        total = total + pushed.scale(CoeffElem::one_plus_y_pow(orbit_dim));
    }
    return canonical_form(total);
}

CycleClass hirzebruch_via_cotangent(const FanPtr& fan) {
    CycleClass c = ray_cap_product(fan, SeriesKind::qy);
    int trivial_rank = fan->num_rays() - fan->rank();
    return canonical_form(c.scale(CoeffElem::one_plus_y_pow(-trivial_rank)));
}

CycleClass normalize_class(const CycleClass& c) {
    CycleClass out(c.fan());
    for (const auto& [id, coeff] : c.terms())
        out.add_term(id, coeff.mul_one_plus_y_pow(-c.grading(id)));
    return out;
}

CycleClass specialize(const CycleClass& c, const Rat& y0) {
    CycleClass out(c.fan());
    for (const auto& [id, coeff] : c.terms())
        out.add_term(id, CoeffElem(coeff.eval(y0)));
    return out;
}

bool all_coefficients_polynomial(const CycleClass& c) {
    for (const auto& [id, coeff] : c.terms())
        if (!coeff.is_polynomial()) return false;
    return true;
}

} // namespace toricc
