#pragma once

#include "toricc/cycles.hpp"

namespace toricc {

// Todd class td_*(X): product of Todd caps over all rays applied to the
// fundamental class.
CycleClass todd_class(const FanPtr& fan);

// td_*([omega_X]): product of dual-Todd caps over all rays; degree zero is
// the Euler characteristic of the canonical sheaf.
CycleClass omega_todd_class(const FanPtr& fan);

// MacPherson Chern class via the orbit sum: sum over all cones of the
// orbit-closure class, in canonical form.
CycleClass chern_class_ehler(const FanPtr& fan);

// Un-normalized Hirzebruch class by the orbit sum:
//   sum over cones sigma of (1+y)^(rank - dim sigma) times the pushforward
//   of td_*([omega]) of the star fan of sigma.
CycleClass hirzebruch_unnormalized(const FanPtr& fan);

// The same class by the cotangent normalization: the multiplicative qy
// series evaluated on the tangent bundle. The toric Euler sequence
//   0 -> O^(r-n) -> sum_rho O(D_rho) -> T_X -> 0
// turns this into the product of qy(D_rho) caps over all r rays divided by
// qy(0)^(r-n) = (1+y)^(r-n).
CycleClass hirzebruch_via_cotangent(const FanPtr& fan);

// Multiply the grading-k part by (1+y)^-k. For variety classes the result
// clears to polynomial coefficients; callers assert that where required.
CycleClass normalize_class(const CycleClass& c);

// Exact substitution y = y0. At y0 = -1 every coefficient must already be
// polynomial, otherwise a precondition_error is raised.
CycleClass specialize(const CycleClass& c, const Rat& y0);

// True iff every coefficient is polynomial (no (1+y) denominator).
bool all_coefficients_polynomial(const CycleClass& c);

} // namespace toricc
