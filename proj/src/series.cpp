#include "toricc/series.hpp"

#include <algorithm>

#include "toricc/errors.hpp"

namespace toricc {

TruncSeries TruncSeries::add(const TruncSeries& rhs) const {
    int n = std::min(order(), rhs.order());
    std::vector<CoeffElem> v(n + 1);
    for (int j = 0; j <= n; ++j) v[j] = c_[j] + rhs.c_[j];
    return TruncSeries(std::move(v), exact_tail_ && rhs.exact_tail_);
}

TruncSeries TruncSeries::sub(const TruncSeries& rhs) const {
    int n = std::min(order(), rhs.order());
    std::vector<CoeffElem> v(n + 1);
    for (int j = 0; j <= n; ++j) v[j] = c_[j] - rhs.c_[j];
    return TruncSeries(std::move(v), exact_tail_ && rhs.exact_tail_);
}

TruncSeries TruncSeries::mul(const TruncSeries& rhs) const {
    int n = std::min(order(), rhs.order());
    std::vector<CoeffElem> v(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n && j <= rhs.order(); ++j)
            v[i + j] = v[i + j] + c_[i] * rhs.c_[j];
    }
    // The product of exact polynomials is exact only if no term spills past
    // the kept order; be conservative.
    bool exact = exact_tail_ && rhs.exact_tail_ && order() + rhs.order() <= n;
    return TruncSeries(std::move(v), exact);
}

TruncSeries TruncSeries::scale(const CoeffElem& f) const {
    std::vector<CoeffElem> v(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) v[j] = c_[j] * f;
    return TruncSeries(std::move(v), exact_tail_);
}

TruncSeries TruncSeries::divide(const TruncSeries& den) const {
    int n = std::min(order(), den.order());
    CoeffElem lead_inv = den.coeff(0).inverse();
    std::vector<CoeffElem> q(n + 1);
    for (int j = 0; j <= n; ++j) {
        CoeffElem acc = c_[j];
        for (int i = 0; i < j; ++i) acc = acc - q[i] * den.coeff(j - i);
        q[j] = acc * lead_inv;
    }
    return TruncSeries(std::move(q), false);
}

TruncSeries TruncSeries::compose_linear(const CoeffElem& c) const {
    std::vector<CoeffElem> v(c_.size());
    CoeffElem p = CoeffElem::one();
    for (size_t j = 0; j < c_.size(); ++j) {
        v[j] = c_[j] * p;
        p = p * c;
    }
    return TruncSeries(std::move(v), exact_tail_);
}

TruncSeries TruncSeries::shift_up() const {
    std::vector<CoeffElem> v(c_.size() + 1);
    for (size_t j = 0; j < c_.size(); ++j) v[j + 1] = c_[j];
    return TruncSeries(std::move(v), exact_tail_);
}

namespace {

Rat factorial(int n) {
    Rat f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (1 - e^-ca)/(ca) = sum_j (-1)^j (ca)^j / (j+1)!, a unit series; the scale
// c is a polynomial in y (c = 1 for qy/todd, c = 1+y for qy_hat).
TruncSeries unit_denominator(const QPoly& c, int order) {
    std::vector<CoeffElem> v(order + 1);
    QPoly cp(Rat(1));
    for (int j = 0; j <= order; ++j) {
        Rat coeff = Rat((j % 2 == 0) ? 1 : -1) / factorial(j + 1);
        v[j] = CoeffElem(cp.scale(coeff));
        cp = cp * c;
    }
    return TruncSeries(std::move(v), false);
}

// 1 + y e^-ca.
TruncSeries lambda_numerator(const QPoly& c, int order) {
    std::vector<CoeffElem> v(order + 1);
    QPoly y = QPoly::variable();
    QPoly cp(Rat(1));
    for (int j = 0; j <= order; ++j) {
        Rat f = Rat((j % 2 == 0) ? 1 : -1) / factorial(j);
        QPoly term = (y * cp).scale(f);
        if (j == 0) term = term + QPoly(Rat(1));
        v[j] = CoeffElem(term);
        cp = cp * c;
    }
    return TruncSeries(std::move(v), false);
}

TruncSeries exp_series(const Rat& scale, int order) {
    std::vector<CoeffElem> v(order + 1);
    Rat p = 1;
    for (int j = 0; j <= order; ++j) {
        v[j] = CoeffElem(p / factorial(j));
        p *= scale;
    }
    return TruncSeries(std::move(v), false);
}

} // namespace

TruncSeries series_coefficients(SeriesKind kind, int order) {
    if (order < 0) throw precondition_error("negative series order");
    const QPoly one(Rat(1));
    const QPoly opy = QPoly::one_plus_var();
    switch (kind) {
    case SeriesKind::qy:
        return lambda_numerator(one, order).divide(unit_denominator(one, order));
    case SeriesKind::qy_hat: {
        // a(1 + y e^-a(1+y)) / (1 - e^-a(1+y)); factoring a(1+y) out of the
        // denominator leaves a unit with constant term (1+y).
        TruncSeries den = unit_denominator(opy, order).scale(CoeffElem(opy));
        return lambda_numerator(opy, order).divide(den);
    }
    case SeriesKind::todd:
        return TruncSeries::constant(CoeffElem::one()).divide(unit_denominator(one, order));
    case SeriesKind::todd_dual: {
        // e^-a / ((1 - e^-a)/a).
        return exp_series(Rat(-1), order).divide(unit_denominator(one, order));
    }
    case SeriesKind::exp:
        return exp_series(Rat(1), order);
    case SeriesKind::lambda_y_factor:
        return lambda_numerator(one, order);
    }
    throw precondition_error("unknown series kind");
}

bool relation_check_qy_hat(int order) {
    TruncSeries lhs = series_coefficients(SeriesKind::qy_hat, order);
    TruncSeries rhs = series_coefficients(SeriesKind::qy, order)
                          .compose_linear(CoeffElem(QPoly::one_plus_var()))
                          .scale(CoeffElem::one_plus_y_pow(-1));
    for (int j = 0; j <= order; ++j)
        if (!(lhs.coeff(j) == rhs.coeff(j))) return false;
    return true;
}

TruncSeries alpha_over_qy_series(int order) {
    const QPoly one(Rat(1));
    // (1 - e^-a) = a * unit_denominator(1); dividing by (1 + y e^-a) keeps
    // exactness since the latter has unit constant term 1+y.
    TruncSeries numer = unit_denominator(one, order).shift_up();
    TruncSeries denom = lambda_numerator(one, order + 1);
    return numer.divide(denom);
}

} // namespace toricc
