#include "toricc/genera.hpp"

#include "toricc/classes.hpp"
#include "toricc/errors.hpp"

namespace toricc {

void HodgeTable::add(int p, int q, int k, long long mult) {
    if (mult < 0) throw precondition_error("negative Hodge number");
    if (mult == 0) return;
    h_[{p, q, k}] += mult;
}

long long HodgeTable::dim(int p, int q, int k) const {
    auto it = h_.find({p, q, k});
    return it == h_.end() ? 0 : it->second;
}

long long HodgeTable::total_dimension() const {
    long long total = 0;
    for (const auto& [key, mult] : h_) total += mult;
    return total;
}

EPolynomial e_from_table(const HodgeTable& t) {
    EPolynomial e;
    for (const auto& [key, mult] : t.entries()) {
        auto [p, q, k] = key;
        Rat sign = (k % 2 == 0) ? 1 : -1;
        e.add_term({p, q}, sign * mult);
    }
    return e;
}

GenusPoly chi_from_e(const EPolynomial& e) {
    GenusPoly g;
    for (const auto& [exps, c] : e.terms()) {
        int p = exps[0];
        // y^p x^q -> (-y)^p * 1^q.
        Rat sign = (((p % 2) + 2) % 2 == 0) ? 1 : -1;
        g.add_term({p}, sign * c);
    }
    return g;
}

GenusPoly chi_y_of_toric(const Fan& fan) {
    require_valid(fan);
    GenusPoly total;
    GenusPoly torus_factor; // -1 - y
    torus_factor.add_term({0}, Rat(-1));
    torus_factor.add_term({1}, Rat(-1));
    for (ConeId id = 0; id < fan.num_cones(); ++id) {
        int orbit_dim = fan.rank() - fan.cone_dim(id);
        total = total + torus_factor.pow(orbit_dim);
    }
    return total;
}

EPolynomial scissor_add(const EPolynomial& a, const EPolynomial& b) { return a + b; }

EPolynomial e_product(const EPolynomial& a, const EPolynomial& b) { return a * b; }

bool genus_degree_bridge(const FanPtr& fan) {
    CoeffElem deg = degree(hirzebruch_unnormalized(fan));
    return genus_from_coeff(deg) == chi_y_of_toric(*fan);
}

GenusPoly genus_from_qpoly(const QPoly& p) {
    GenusPoly g;
    for (int i = 0; i <= p.degree(); ++i) g.add_term({i}, p.coeff(i));
    return g;
}

QPoly qpoly_from_genus(const GenusPoly& g) {
    int deg = 0;
    for (const auto& [exps, c] : g.terms()) {
        if (exps[0] < 0)
            throw precondition_error("genus polynomial has negative powers of y");
        deg = std::max(deg, exps[0]);
    }
    std::vector<Rat> coeffs(deg + 1, Rat(0));
    for (const auto& [exps, c] : g.terms()) coeffs[exps[0]] = c;
    return QPoly(std::move(coeffs));
}

GenusPoly genus_from_coeff(const CoeffElem& c) { return genus_from_qpoly(c.poly()); }

} // namespace toricc
