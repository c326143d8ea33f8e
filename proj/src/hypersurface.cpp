#include "toricc/hypersurface.hpp"

#include "toricc/errors.hpp"

namespace toricc {

CycleClass virtual_class_pushforward(const HypersurfaceSpec& h) {
    const FanPtr& fan = h.ambient;
    require_smooth_complete(*fan);
    const int n = fan->rank();

    // T_y(T_M) ∩ [M] via the cotangent normalization, then cap with the
    // series a/qy(a) evaluated on D.
    CycleClass c = hirzebruch_via_cotangent(fan);
    c = cap_series(alpha_over_qy_series(n), h.divisor, c);
    c = canonical_form(c);
    if (!all_coefficients_polynomial(c))
        throw consistency_error(
            "virtual class kept a (1+y) denominator after canonical reduction");
    return c;
}

CycleClass milnor_correction_class(const FanPtr& ambient,
                                   const std::vector<StratumDatum>& strata) {
    CycleClass total(ambient);
    for (const auto& s : strata) {
        if (!s.closure_class)
            throw precondition_error("stratum '" + s.label + "' has no class data");
        CycleClass piece = *s.closure_class;
        if (!piece.fan()->same_as(*ambient))
            throw precondition_error("stratum '" + s.label + "' lives on a different ambient");
        if (s.boundary_class) {
            if (!s.boundary_class->fan()->same_as(*ambient))
                throw precondition_error("stratum '" + s.label +
                                         "' boundary lives on a different ambient");
            piece = piece - *s.boundary_class;
        }
        total = total + piece.scale(CoeffElem(qpoly_from_genus(s.milnor)));
    }
    return canonical_form(total);
}

GenusPoly milnor_correction_genus(const std::vector<StratumDatum>& strata) {
    GenusPoly total;
    for (const auto& s : strata) {
        if (!s.closure_genus)
            throw precondition_error("stratum '" + s.label + "' has no genus data");
        GenusPoly piece = *s.closure_genus;
        if (s.boundary_genus) piece = piece - *s.boundary_genus;
        total = total + piece * s.milnor;
    }
    return total;
}

DifferenceReport hirzebruch_milnor_difference_class(const HypersurfaceSpec& h,
                                                    const CycleClass& actual,
                                                    const std::vector<StratumDatum>& strata) {
    DifferenceReport report;
    report.mode = "class";
    CycleClass virt = normalize_class(virtual_class_pushforward(h));
    CycleClass diff = canonical_form(virt - actual);
    CycleClass corr = milnor_correction_class(h.ambient, strata);
    report.consistent = cycles_equal(diff, corr);
    report.class_difference = std::move(diff);
    report.class_correction = std::move(corr);
    report.virtual_genus = genus_from_coeff(degree(virt));
    return report;
}

DifferenceReport hirzebruch_milnor_difference_genus(const HypersurfaceSpec& h,
                                                    const GenusPoly& actual_chi,
                                                    const std::vector<StratumDatum>& strata) {
    DifferenceReport report;
    report.mode = "genus";
    report.virtual_genus = genus_from_coeff(degree(virtual_class_pushforward(h)));
    report.difference = report.virtual_genus - actual_chi;
    report.correction = milnor_correction_genus(strata);
    report.consistent = report.difference == report.correction;
    return report;
}

} // namespace toricc
