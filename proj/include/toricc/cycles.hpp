#pragma once

#include <map>

#include "toricc/coeff.hpp"
#include "toricc/fan.hpp"
#include "toricc/series.hpp"

namespace toricc {

// Torus-invariant Q-divisor: one exact rational coefficient per ray.
class TDivisor {
public:
    TDivisor(FanPtr fan, std::vector<Rat> coeffs);
    static TDivisor ray_divisor(FanPtr fan, int ray); // D_rho
    static TDivisor zero(FanPtr fan);

    const FanPtr& fan() const { return fan_; }
    const Rat& coeff(int ray) const { return a_[ray]; }
    const std::vector<Rat>& coeffs() const { return a_; }

    TDivisor operator+(const TDivisor&) const;
    TDivisor scale(const Rat&) const;

private:
    FanPtr fan_;
    std::vector<Rat> a_;
};

// Formal sum of orbit closures [V_sigma] with CoeffElem coefficients.
// The complex dimension (grading) of [V_sigma] is rank - dim sigma.
// Coefficient maps are representatives of rational-equivalence classes;
// compare through canonical_form / cycles_equal, never directly.
class CycleClass {
public:
    explicit CycleClass(FanPtr fan) : fan_(std::move(fan)) {}

    static CycleClass orbit_closure(FanPtr fan, ConeId sigma);
    static CycleClass fundamental(FanPtr fan); // class of the zero cone

    const FanPtr& fan() const { return fan_; }
    const std::map<ConeId, CoeffElem>& terms() const { return c_; }
    CoeffElem coeff(ConeId id) const;
    int grading(ConeId id) const { return fan_->rank() - fan_->cone_dim(id); }
    bool empty() const { return c_.empty(); } // all-zero representative

    void add_term(ConeId id, const CoeffElem& c);

    CycleClass operator+(const CycleClass&) const;
    CycleClass operator-(const CycleClass&) const;
    CycleClass operator-() const;
    CycleClass scale(const CoeffElem&) const;
    CycleClass scale(const Rat&) const;

private:
    FanPtr fan_;
    std::map<ConeId, CoeffElem> c_;
};

// Rational-equivalence relations in grading k: for every cone tau of
// dimension rank-k-1 and every basis vector m of tau^perp ∩ Z^rank, the sum
// over cones sigma ⊃ tau of <m, u_{sigma,tau}> [V_sigma] is equivalent to
// zero. Requires a smooth complete fan, where the quotient image of the
// extra ray is already primitive.
using Relation = std::map<ConeId, Int>;
std::vector<Relation> relation_basis(const Fan& fan, int k);

// Canonical coset representative: per grading, the coefficient vector is
// reduced against the row-reduced relation matrix (fixed cone ordering,
// lexicographic pivoting). Idempotent and linear.
CycleClass canonical_form(const CycleClass& c);

bool cycles_equal(const CycleClass& a, const CycleClass& b);

// D . c via the standard local-potential algorithm: on each [V_sigma] pick
// m_sigma with <m_sigma, u_rho> = a_rho for rho in sigma, then
// D . [V_sigma] = sum over gamma = sigma + rho_gamma of
// (a_{rho_gamma} - <m_sigma, u_{rho_gamma}>) [V_gamma]. Result canonical.
CycleClass intersect_divisor(const TDivisor& d, const CycleClass& c);

// sum_j s_j D^j . c. Terminates by nilpotency (D lowers the grading);
// throws if the series is truncated too early to cover a nonzero power.
CycleClass cap_series(const TruncSeries& s, const TDivisor& d, const CycleClass& c);

// Bilinear external product: [V_sigma] x [V_tau] = [V_{sigma x tau}] on
// fan_product. The _on variant checks the supplied fan matches the product.
CycleClass external_product(const CycleClass& a, const CycleClass& b);
CycleClass external_product_on(const FanPtr& product, const CycleClass& a,
                               const CycleClass& b);

// Relabel a class on star.quotient through star.ambient_cone.
CycleClass pushforward_from_star(const StarData& star, const CycleClass& c);

// Sum of the grading-zero coefficients: every maximal cone of a smooth
// complete fan is a reduced point of degree one.
CoeffElem degree(const CycleClass& c);

} // namespace toricc
