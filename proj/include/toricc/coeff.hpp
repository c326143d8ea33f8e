#pragma once

#include <string>

#include "toricc/qpoly.hpp"

namespace toricc {

// Element of Q[y] localized at (1+y): num / (1+y)^k. Canonical form has
// k == 0 or (1+y) not dividing num; maintained by every operation.
class CoeffElem {
public:
    CoeffElem() : k_(0) {}
    explicit CoeffElem(const Rat& c) : num_(c), k_(0) {}
    explicit CoeffElem(QPoly num, int denom_pow = 0) : num_(std::move(num)), k_(denom_pow) {
        canonicalize();
    }

    static CoeffElem one() { return CoeffElem(Rat(1)); }
    // (1+y)^e for any integer e.
    static CoeffElem one_plus_y_pow(int e);

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& numerator() const { return num_; }
    int denominator_exponent() const { return k_; }
    bool is_polynomial() const { return k_ == 0; }

    // Numerator as a plain polynomial; throws unless k == 0.
    const QPoly& poly() const;

    CoeffElem operator+(const CoeffElem&) const;
    CoeffElem operator-(const CoeffElem&) const;
    CoeffElem operator-() const;
    CoeffElem operator*(const CoeffElem&) const;
    CoeffElem scale(const Rat&) const;
    CoeffElem mul_poly(const QPoly&) const;
    CoeffElem mul_one_plus_y_pow(int e) const; // multiply by (1+y)^e, e in Z

    // Multiplicative inverse; defined only for units c*(1+y)^j.
    CoeffElem inverse() const;

    // Exact evaluation at y = y0. For y0 = -1 the element must be
    // polynomial; otherwise throws precondition_error.
    Rat eval(const Rat& y0) const;

    bool operator==(const CoeffElem&) const = default;

    std::string to_string() const;

private:
    void canonicalize();
    QPoly num_;
    int k_;
};

} // namespace toricc
