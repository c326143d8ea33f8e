#include "toricc/coeff.hpp"

#include <sstream>

#include "toricc/errors.hpp"

namespace toricc {

void CoeffElem::canonicalize() {
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0) {
        auto q = num_.div_one_plus_var();
        if (!q) break;
        num_ = std::move(*q);
        --k_;
    }
}

CoeffElem CoeffElem::one_plus_y_pow(int e) {
    if (e >= 0) return CoeffElem(QPoly::one_plus_var().pow(e));
    return CoeffElem(QPoly(Rat(1)), -e);
}

const QPoly& CoeffElem::poly() const {
    if (k_ != 0)
        throw precondition_error("coefficient is not polynomial: " + to_string());
    return num_;
}

CoeffElem CoeffElem::operator+(const CoeffElem& rhs) const {
    int k = std::max(k_, rhs.k_);
    QPoly a = num_ * QPoly::one_plus_var().pow(k - k_);
    QPoly b = rhs.num_ * QPoly::one_plus_var().pow(k - rhs.k_);
    return CoeffElem(a + b, k);
}

CoeffElem CoeffElem::operator-(const CoeffElem& rhs) const { return *this + (-rhs); }

CoeffElem CoeffElem::operator-() const {
    CoeffElem r;
    r.num_ = -num_;
    r.k_ = k_;
    return r;
}

CoeffElem CoeffElem::operator*(const CoeffElem& rhs) const {
    return CoeffElem(num_ * rhs.num_, k_ + rhs.k_);
}

CoeffElem CoeffElem::scale(const Rat& f) const { return CoeffElem(num_.scale(f), k_); }

CoeffElem CoeffElem::mul_poly(const QPoly& p) const { return CoeffElem(num_ * p, k_); }

CoeffElem CoeffElem::mul_one_plus_y_pow(int e) const {
    if (e >= 0) return CoeffElem(num_ * QPoly::one_plus_var().pow(e), k_);
    return CoeffElem(num_, k_ - e);
}

CoeffElem CoeffElem::inverse() const {
    // Units of the localized ring are exactly c * (1+y)^j.
    QPoly n = num_;
    int j = 0;
    while (true) {
        auto q = n.div_one_plus_var();
        if (!q) break;
        n = std::move(*q);
        ++j;
    }
    auto c = n.as_constant();
    if (!c || *c == 0)
        throw precondition_error("coefficient is not a unit: " + to_string());
    // (c (1+y)^j / (1+y)^k)^-1 = (1/c) (1+y)^(k-j).
    return CoeffElem(QPoly(Rat(1) / *c), 0).mul_one_plus_y_pow(k_ - j);
}

Rat CoeffElem::eval(const Rat& y0) const {
    if (y0 == -1 && k_ != 0)
        throw precondition_error(
            "class not polynomial; normalize or clear first (evaluation at y = -1)");
    Rat num = num_.eval(y0);
    if (k_ == 0) return num;
    Rat den = 1;
    Rat base = y0 + 1;
    for (int i = 0; i < k_; ++i) den *= base;
    return num / den;
}

std::string CoeffElem::to_string() const {
    if (k_ == 0) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(1+y)^" << k_;
    return os.str();
}

} // namespace toricc
