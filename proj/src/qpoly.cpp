#include "toricc/qpoly.hpp"

#include <sstream>

#include "toricc/errors.hpp"

namespace toricc {

QPoly QPoly::variable() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

QPoly QPoly::one_plus_var() { return QPoly(std::vector<Rat>{Rat(1), Rat(1)}); }

QPoly QPoly::monomial(int e, Rat c) {
    if (e < 0) throw precondition_error("negative exponent in polynomial monomial");
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = std::move(c);
    return QPoly(std::move(v));
}

std::optional<Rat> QPoly::as_constant() const {
    if (c_.empty()) return Rat(0);
    if (c_.size() == 1) return c_[0];
    return std::nullopt;
}

QPoly QPoly::operator+(const QPoly& rhs) const {
    std::vector<Rat> v(std::max(c_.size(), rhs.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) v[i] += rhs.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& rhs) const { return *this + (-rhs); }

QPoly QPoly::operator-() const {
    std::vector<Rat> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + rhs.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] += c_[i] * rhs.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::scale(const Rat& f) const {
    if (f == 0) return QPoly();
    std::vector<Rat> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * f;
    return QPoly(std::move(v));
}

QPoly QPoly::pow(int e) const {
    if (e < 0) throw precondition_error("negative polynomial power");
    QPoly r(Rat(1));
    QPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rat QPoly::eval(const Rat& y0) const {
    Rat v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * y0 + c_[i];
    return v;
}

std::optional<QPoly> QPoly::div_one_plus_var() const {
    if (is_zero()) return QPoly();
    if (eval(Rat(-1)) != 0) return std::nullopt; // remainder at the root y = -1
    // p = (1+y) q  =>  q_k = p_{k+1} - q_{k+1}, from the top down.
    std::vector<Rat> q(c_.size() - 1, Rat(0));
    for (size_t i = c_.size() - 1; i-- > 0;) {
        Rat next = (i + 1 < q.size()) ? q[i + 1] : Rat(0);
        q[i] = c_[i + 1] - next;
    }
    return QPoly(std::move(q));
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace toricc
