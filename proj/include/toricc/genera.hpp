#pragma once

#include <map>
#include <tuple>

#include "toricc/coeff.hpp"
#include "toricc/fan.hpp"
#include "toricc/laurent.hpp"

namespace toricc {

// Tri-graded dimension table h^{p,q,k}: Hodge bigrading (p,q) plus the
// cohomological degree k.
class HodgeTable {
public:
    HodgeTable() = default;

    void add(int p, int q, int k, long long mult);
    long long dim(int p, int q, int k) const;
    const std::map<std::tuple<int, int, int>, long long>& entries() const { return h_; }
    long long total_dimension() const;
    bool operator==(const HodgeTable&) const = default;

private:
    std::map<std::tuple<int, int, int>, long long> h_;
};

// e^{p,q} = sum_k (-1)^k h^{p,q,k}, assembled as sum e^{p,q} y^p x^q.
EPolynomial e_from_table(const HodgeTable& t);

// chi_y = e(-y, 1): substitute y -> -y and x -> 1.
GenusPoly chi_from_e(const EPolynomial& e);

// chi_y genus of the toric variety of the fan, by cone counting:
//
//   chi_y(X_Sigma) = sum over cones sigma of (-1-y)^(rank - dim sigma).
//
// Derivation: X is the disjoint union of its torus orbits O_sigma, an
// orbit is a torus (C*)^d with compactly supported E-polynomial (yx-1)^d,
// chi_y is additive over such decompositions, and specializing y -> -y,
// x -> 1 sends (yx-1)^d to (-1-y)^d. For complete fans this agrees with
// the ordinary-cohomology convention.
GenusPoly chi_y_of_toric(const Fan& fan);

// Scissor addition models a decomposition into disjoint locally closed
// pieces; the product models products of varieties.
EPolynomial scissor_add(const EPolynomial& a, const EPolynomial& b);
EPolynomial e_product(const EPolynomial& a, const EPolynomial& b);

// degree of the un-normalized Hirzebruch class == cone-counting chi_y.
bool genus_degree_bridge(const FanPtr& fan);

// Conversions between the univariate worlds.
GenusPoly genus_from_qpoly(const QPoly& p);
QPoly qpoly_from_genus(const GenusPoly& g); // rejects negative powers
GenusPoly genus_from_coeff(const CoeffElem& c); // requires polynomial

} // namespace toricc
