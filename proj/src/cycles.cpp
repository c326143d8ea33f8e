#include "toricc/cycles.hpp"

#include <algorithm>
#include <cassert>

#include "toricc/errors.hpp"

namespace toricc {

static void require_same_fan(const FanPtr& a, const FanPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (!a->same_as(*b)) throw precondition_error(std::string("fan mismatch in ") + what);
}

TDivisor::TDivisor(FanPtr fan, std::vector<Rat> coeffs)
    : fan_(std::move(fan)), a_(std::move(coeffs)) {
    if (static_cast<int>(a_.size()) != fan_->num_rays())
        throw precondition_error("divisor coefficient count does not match fan rays");
}

TDivisor TDivisor::ray_divisor(FanPtr fan, int ray) {
    if (ray < 0 || ray >= fan->num_rays())
        throw precondition_error("ray index out of range");
    std::vector<Rat> a(fan->num_rays(), Rat(0));
    a[ray] = 1;
    return TDivisor(std::move(fan), std::move(a));
}

TDivisor TDivisor::zero(FanPtr fan) {
    std::vector<Rat> a(fan->num_rays(), Rat(0));
    return TDivisor(std::move(fan), std::move(a));
}

TDivisor TDivisor::operator+(const TDivisor& rhs) const {
    require_same_fan(fan_, rhs.fan_, "divisor sum");
    std::vector<Rat> a(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) a[i] = a_[i] + rhs.a_[i];
    return TDivisor(fan_, std::move(a));
}

TDivisor TDivisor::scale(const Rat& f) const {
    std::vector<Rat> a(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) a[i] = a_[i] * f;
    return TDivisor(fan_, std::move(a));
}

CycleClass CycleClass::orbit_closure(FanPtr fan, ConeId sigma) {
    if (sigma < 0 || sigma >= fan->num_cones())
        throw precondition_error("orbit_closure: cone not in fan");
    CycleClass c(std::move(fan));
    c.add_term(sigma, CoeffElem::one());
    return c;
}

CycleClass CycleClass::fundamental(FanPtr fan) {
    ConeId zero = fan->zero_cone();
    return orbit_closure(std::move(fan), zero);
}

CoeffElem CycleClass::coeff(ConeId id) const {
    auto it = c_.find(id);
    return it == c_.end() ? CoeffElem() : it->second;
}

void CycleClass::add_term(ConeId id, const CoeffElem& c) {
    if (c.is_zero()) return;
    auto it = c_.find(id);
    if (it == c_.end()) {
        c_.emplace(id, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

CycleClass CycleClass::operator+(const CycleClass& rhs) const {
    require_same_fan(fan_, rhs.fan_, "cycle sum");
    CycleClass r = *this;
    for (const auto& [id, c] : rhs.c_) r.add_term(id, c);
    return r;
}

CycleClass CycleClass::operator-(const CycleClass& rhs) const { return *this + (-rhs); }

CycleClass CycleClass::operator-() const {
    CycleClass r(fan_);
    for (const auto& [id, c] : c_) r.c_.emplace(id, -c);
    return r;
}

CycleClass CycleClass::scale(const CoeffElem& f) const {
    CycleClass r(fan_);
    if (f.is_zero()) return r;
    for (const auto& [id, c] : c_) r.add_term(id, c * f);
    return r;
}

CycleClass CycleClass::scale(const Rat& f) const { return scale(CoeffElem(f)); }

std::vector<Relation> relation_basis(const Fan& fan, int k) {
    require_smooth_complete(fan);
    const int n = fan.rank();
    if (k < 0 || k > n) throw precondition_error("relation grading out of range");

    std::vector<Relation> rels;
    if (n - k - 1 < 0) return rels;
    for (ConeId tau : fan.cones_of_dim(n - k - 1)) {
        const auto& trays = fan.cone(tau).rays;
        IntMatrix m(static_cast<int>(trays.size()), n);
        for (size_t i = 0; i < trays.size(); ++i)
            for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = fan.ray(trays[i])[j];
        // tau^perp ∩ Z^n: saturated kernel, so its pairings with the
        // primitive quotient rays are computed on any ambient lift.
        std::vector<std::vector<Int>> characters = integer_kernel(m);
        for (const auto& chi : characters) {
            Relation rel;
            for (ConeId sigma : fan.cones_containing(tau, n - k)) {
                const auto& srays = fan.cone(sigma).rays;
                int extra = -1;
                for (int r : srays)
                    if (!std::binary_search(trays.begin(), trays.end(), r)) extra = r;
                assert(extra >= 0);
                Int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += chi[j] * fan.ray(extra)[j];
                if (pairing != 0) rel[sigma] = pairing;
            }
            if (!rel.empty()) rels.push_back(std::move(rel));
        }
    }
    return rels;
}

CycleClass canonical_form(const CycleClass& c) {
    const Fan& fan = *c.fan();
    require_smooth_complete(fan);
    const int n = fan.rank();

    CycleClass out(c.fan());
    for (int d = 0; d <= n; ++d) {
        std::vector<ConeId> cols = fan.cones_of_dim(d);
        std::map<ConeId, int> col_of;
        for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);

        std::vector<CoeffElem> v(cols.size());
        bool any = false;
        for (const auto& [id, coeff] : c.terms()) {
            if (fan.cone_dim(id) != d) continue;
            v[col_of[id]] = coeff;
            any = true;
        }
        if (!any) continue;

        RatMat rows;
        for (const Relation& rel : relation_basis(fan, n - d)) {
            RatVec row(cols.size(), Rat(0));
            for (const auto& [id, coeff] : rel) row[col_of[id]] = Rat(coeff);
            rows.push_back(std::move(row));
        }
        std::vector<int> pivots = rref(rows);
        for (size_t r = 0; r < pivots.size(); ++r) {
            CoeffElem lead = v[pivots[r]];
            if (lead.is_zero()) continue;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (rows[r][j] == 0) continue;
                v[j] = v[j] - lead.scale(rows[r][j]);
            }
        }
        for (size_t j = 0; j < cols.size(); ++j)
            if (!v[j].is_zero()) out.add_term(cols[j], v[j]);
    }
    return out;
}

bool cycles_equal(const CycleClass& a, const CycleClass& b) {
    require_same_fan(a.fan(), b.fan(), "cycle comparison");
    return canonical_form(a - b).empty();
}

CycleClass intersect_divisor(const TDivisor& d, const CycleClass& c) {
    require_same_fan(d.fan(), c.fan(), "divisor intersection");
    const Fan& fan = *c.fan();
    require_smooth_complete(fan);
    const int n = fan.rank();

    CycleClass out(c.fan());
    for (const auto& [sigma, coeff] : c.terms()) {
        const auto& srays = fan.cone(sigma).rays;
        // Local potential: <m, u_rho> = a_rho on sigma's rays (solvable on a
        // smooth cone; the choice drops out modulo rational equivalence).
        RatVec m(n, Rat(0));
        if (!srays.empty()) {
            RatMat a;
            RatVec b;
            for (int r : srays) {
                RatVec row(n);
                for (int j = 0; j < n; ++j) row[j] = Rat(fan.ray(r)[j]);
                a.push_back(std::move(row));
                b.push_back(d.coeff(r));
            }
            auto sol = solve_linear(a, b);
            if (!sol) throw precondition_error("no divisor potential on cone; fan not smooth?");
            m = std::move(*sol);
        }
        for (ConeId gamma : fan.cones_containing(sigma, fan.cone_dim(sigma) + 1)) {
            const auto& grays = fan.cone(gamma).rays;
            int extra = -1;
            for (int r : grays)
                if (!std::binary_search(srays.begin(), srays.end(), r)) extra = r;
            Rat pairing = 0;
            for (int j = 0; j < n; ++j) pairing += m[j] * Rat(fan.ray(extra)[j]);
            Rat factor = d.coeff(extra) - pairing;
            if (factor != 0) out.add_term(gamma, coeff.scale(factor));
        }
    }
    return canonical_form(out);
}

CycleClass cap_series(const TruncSeries& s, const TDivisor& d, const CycleClass& c) {
    require_same_fan(d.fan(), c.fan(), "cap product");
    CycleClass acc(c.fan());
    CycleClass cur = canonical_form(c);
    int j = 0;
    while (!cur.empty()) {
        if (j > s.order()) {
            if (s.exact_tail()) break; // higher coefficients are exactly zero
            throw precondition_error("series truncation insufficient for cap product");
        }
        acc = acc + cur.scale(s.coeff(j));
        cur = intersect_divisor(d, cur);
        ++j;
    }
    return canonical_form(acc);
}

CycleClass external_product_on(const FanPtr& product, const CycleClass& a,
                               const CycleClass& b) {
    FanPtr expected = fan_product(a.fan(), b.fan());
    if (!product->same_as(*expected))
        throw precondition_error("fan mismatch with stored product");
    const Fan& fa = *a.fan();
    CycleClass out(product);
    for (const auto& [ca, xa] : a.terms())
        for (const auto& [cb, xb] : b.terms()) {
            std::vector<int> rays = fa.cone(ca).rays;
            for (int r : b.fan()->cone(cb).rays) rays.push_back(product_ray_index(fa, r));
            auto id = product->find_cone(std::move(rays));
            if (!id) throw precondition_error("product cone missing");
            out.add_term(*id, xa * xb);
        }
    return canonical_form(out);
}

CycleClass external_product(const CycleClass& a, const CycleClass& b) {
    return external_product_on(fan_product(a.fan(), b.fan()), a, b);
}

CycleClass pushforward_from_star(const StarData& star, const CycleClass& c) {
    if (!c.fan()->same_as(*star.quotient))
        throw precondition_error("class does not live on the star's quotient fan");
    CycleClass out(star.ambient);
    for (const auto& [qid, coeff] : c.terms()) {
        if (qid < 0 || qid >= static_cast<ConeId>(star.ambient_cone.size()) ||
            star.ambient_cone[qid] < 0)
            throw precondition_error("cone map miss in pushforward");
        out.add_term(star.ambient_cone[qid], coeff);
    }
    return out;
}

CoeffElem degree(const CycleClass& c) {
    const Fan& fan = *c.fan();
    require_smooth_complete(fan);
    CoeffElem total;
    for (const auto& [id, coeff] : c.terms())
        if (fan.cone_dim(id) == fan.rank()) total = total + coeff;
    return total;
}

} // namespace toricc
