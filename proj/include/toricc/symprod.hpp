#pragma once

#include <vector>

#include "toricc/genera.hpp"

namespace toricc {

// Cycle type of a permutation of n letters: mult[r-1] = number of r-cycles,
// so sum r * mult[r-1] = n.
struct CycleType {
    std::vector<long long> mult;
    bool operator==(const CycleType&) const = default;
};

// All cycle types of Sigma_n in a deterministic (lexicographic) order.
std::vector<CycleType> cycle_types(int n);

// Number of permutations of the given type: n! / prod_r r^{k_r} k_r!.
Int permutation_count(const CycleType& t);

// Adams substitution y -> y^r, x -> x^r (trace of an r-cycle on a tensor
// power, at the E-polynomial level).
EPolynomial adams(const EPolynomial& e, int r);

// Generating series of symmetric-product E-polynomials:
//   sum_n e(M^(n)) t^n = exp( sum_r e(M; y^r, x^r) t^r / r ),
// truncated at t^N; entry n of the result is the coefficient of t^n.
std::vector<EPolynomial> symprod_e_series(const EPolynomial& e, int n_max);

// Refined product form over the Hodge table, keeping the bookkeeping
// variable z:  prod_{p,q,k} (1 - y^p x^q z^k t)^{-(-1)^k h^{p,q,k}}.
// Setting z = 1 recovers symprod_e_series of the table's E-polynomial; the
// coefficient of t^n matches the oracle below through (-z)^k.
std::vector<ZPolynomial> symprod_product_form(const HodgeTable& t, int n_max);

// Independent brute-force oracle: dimensions of the Sigma_n-invariant
// subspace of the n-fold graded tensor power with Koszul signs (transposing
// factors of degrees k1, k2 carries (-1)^{k1 k2}), computed by explicit
// basis enumeration and symmetrization. Guards: total dimension <= 6, n <= 5.
HodgeTable signed_sym_power_oracle(const HodgeTable& t, int n);

// Molien averaging over Sigma_n: (1/n!) sum over cycle types of
// #permutations * prod_r adams(e, r)^{k_r}. Equals the t^n coefficient of
// symprod_e_series(e, .).
//
// Pitfall, unit-tested: a chi_y-level trace of an r-cycle must be computed
// as chi_from_e(adams(e, r)) - substitute y -> y^r, x -> x^r first and only
// then pass to chi_y. Substituting y -> y^r directly inside chi_y flips
// signs for even r.
EPolynomial average_over_cycle_types(const EPolynomial& e, int n);

} // namespace toricc
