#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricc/classes.hpp"
#include "toricc/genera.hpp"

namespace toricc {

// A hypersurface cut out of the smooth complete toric ambient by a section
// of the line bundle O(D). The virtual-class formula below extends the
// trivial-bundle case of a global function f = 0 to arbitrary O(D); that
// generalization lives entirely in this module.
struct HypersurfaceSpec {
    FanPtr ambient;
    TDivisor divisor;
};

// Pushforward to the ambient of the virtual Hirzebruch class:
//   i_* T^vir_y(X) = T_y(T_M) . (D / qy(D)) ∩ [M],  using i_*[X] = D ∩ [M].
// Every coefficient of the canonical result must clear its (1+y)
// denominators; a failure raises consistency_error.
CycleClass virtual_class_pushforward(const HypersurfaceSpec& h);

// User-supplied stratification input for the Milnor correction: classes (or
// degree-zero genus polynomials) of the stratum closure and its boundary,
// plus the chi_y polynomial of the reduced Milnor-fiber cohomology at a
// point of the stratum. Monodromy triviality along each stratum is the
// caller's responsibility.
struct StratumDatum {
    std::string label;
    std::optional<CycleClass> closure_class;
    std::optional<CycleClass> boundary_class;
    std::optional<GenusPoly> closure_genus;
    std::optional<GenusPoly> boundary_genus;
    GenusPoly milnor; // chi_y([reduced H^*(F_s)])
};

// sum over strata of (class(closure) - class(boundary)) * milnor.
CycleClass milnor_correction_class(const FanPtr& ambient,
                                   const std::vector<StratumDatum>& strata);
GenusPoly milnor_correction_genus(const std::vector<StratumDatum>& strata);

struct DifferenceReport {
    bool consistent = false;
    std::string mode; // "class" or "genus"
    // genus mode payloads
    GenusPoly virtual_genus;
    GenusPoly difference; // chi^vir - actual
    GenusPoly correction;
    // class mode payloads
    std::optional<CycleClass> class_difference;
    std::optional<CycleClass> class_correction;
};

// Does normalize(virtual) - actual equal the Milnor correction?
DifferenceReport hirzebruch_milnor_difference_class(const HypersurfaceSpec& h,
                                                    const CycleClass& actual,
                                                    const std::vector<StratumDatum>& strata);

// Degree-zero check: chi^vir - chi_y(X) against the genus-level correction.
DifferenceReport hirzebruch_milnor_difference_genus(const HypersurfaceSpec& h,
                                                    const GenusPoly& actual_chi,
                                                    const std::vector<StratumDatum>& strata);

} // namespace toricc
