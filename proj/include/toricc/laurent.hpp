#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>

#include "toricc/errors.hpp"
#include "toricc/rational.hpp"

namespace toricc {

// Sparse Laurent polynomial in NV variables over Q. Terms are kept in
// lexicographic exponent order, which makes printing and comparison
// deterministic.
template <int NV>
class Laurent {
public:
    using Exps = std::array<int, NV>;

    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) t_[Exps{}] = c;
    }

    static Laurent monomial(const Exps& e, const Rat& c) {
        Laurent p;
        if (c != 0) p.t_[e] = c;
        return p;
    }
    static Laurent variable(int i) {
        Exps e{};
        e[i] = 1;
        return monomial(e, Rat(1));
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exps, Rat>& terms() const { return t_; }
    Rat coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }

    Laurent operator+(const Laurent& rhs) const {
        Laurent r = *this;
        for (const auto& [e, c] : rhs.t_) r.add_term(e, c);
        return r;
    }
    Laurent operator-(const Laurent& rhs) const {
        Laurent r = *this;
        for (const auto& [e, c] : rhs.t_) r.add_term(e, -c);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    Laurent operator*(const Laurent& rhs) const {
        Laurent r;
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : rhs.t_) {
                Exps e;
                for (int i = 0; i < NV; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    Laurent scale(const Rat& f) const {
        Laurent r;
        if (f == 0) return r;
        for (const auto& [e, c] : t_) r.t_[e] = c * f;
        return r;
    }
    Laurent pow(int e) const {
        if (e < 0) throw precondition_error("negative power of a Laurent polynomial");
        Laurent r(Rat(1));
        Laurent b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Exponent substitution v_i -> v_i^r for every variable.
    Laurent scale_exponents(int r) const {
        Laurent out;
        for (const auto& [e, c] : t_) {
            Exps f;
            for (int i = 0; i < NV; ++i) f[i] = e[i] * r;
            out.t_[f] = c;
        }
        return out;
    }

    void add_term(const Exps& e, const Rat& c) {
        if (c == 0) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    bool is_integral() const {
        for (const auto& [e, c] : t_)
            if (rat_den(c) != 1) return false;
        return true;
    }

    bool operator==(const Laurent&) const = default;

    std::string to_string(const std::array<std::string, NV>& vars) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            bool any_var = false;
            std::ostringstream mono;
            for (int i = 0; i < NV; ++i) {
                if (e[i] == 0) continue;
                if (any_var) mono << "*";
                mono << vars[i];
                if (e[i] != 1) mono << "^" << e[i];
                any_var = true;
            }
            if (!any_var) {
                os << rat_to_string(a);
            } else {
                if (a != 1) os << rat_to_string(a) << "*";
                os << mono.str();
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<Exps, Rat> t_;
};

// Genus polynomials live in y; E-polynomials in (y, x); the refined
// symmetric-product series keeps a third bookkeeping variable z.
using GenusPoly = Laurent<1>;
using EPolynomial = Laurent<2>;
using ZPolynomial = Laurent<3>;

inline std::string genus_to_string(const GenusPoly& g) { return g.to_string({"y"}); }
inline std::string epoly_to_string(const EPolynomial& e) { return e.to_string({"y", "x"}); }
inline std::string zpoly_to_string(const ZPolynomial& z) { return z.to_string({"y", "x", "z"}); }

inline ZPolynomial embed_z(const EPolynomial& e) {
    ZPolynomial out;
    for (const auto& [exps, c] : e.terms()) out.add_term({exps[0], exps[1], 0}, c);
    return out;
}

// Specialize the bookkeeping variable z to an integer value.
inline EPolynomial set_z(const ZPolynomial& p, int z0) {
    EPolynomial out;
    for (const auto& [exps, c] : p.terms()) {
        Rat f = c;
        int e = exps[2];
        if (e < 0) throw precondition_error("negative z-exponent cannot be specialized");
        for (int i = 0; i < e; ++i) f *= z0;
        out.add_term({exps[0], exps[1]}, f);
    }
    return out;
}

} // namespace toricc
