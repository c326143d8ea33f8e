#pragma once

#include <vector>

#include "toricc/coeff.hpp"

namespace toricc {

// The multiplicative characteristic-class series used throughout:
//   qy              a(1 + y e^-a) / (1 - e^-a)        (un-normalized)
//   qy_hat          a(1 + y e^-a(1+y)) / (1 - e^-a(1+y))   (normalized)
//   todd            a / (1 - e^-a)
//   todd_dual       a e^-a / (1 - e^-a)   (Todd of the dual line, for omega)
//   exp             e^a
//   lambda_y_factor 1 + y e^-a            (the numerator factor of qy)
enum class SeriesKind { qy, qy_hat, todd, todd_dual, exp, lambda_y_factor };

// Truncated power series in one formal variable with CoeffElem
// coefficients. exact_tail() distinguishes an exact polynomial (all higher
// coefficients are zero) from a truncated expansion of a longer series.
class TruncSeries {
public:
    explicit TruncSeries(std::vector<CoeffElem> coeffs, bool exact_tail = true)
        : c_(std::move(coeffs)), exact_tail_(exact_tail) {}

    static TruncSeries constant(const CoeffElem& c) { return TruncSeries({c}, true); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool exact_tail() const { return exact_tail_; }
    const CoeffElem& coeff(int j) const { return c_[j]; }
    const std::vector<CoeffElem>& coeffs() const { return c_; }

    TruncSeries add(const TruncSeries&) const;      // order = min
    TruncSeries sub(const TruncSeries&) const;
    TruncSeries mul(const TruncSeries&) const;      // truncated at min order
    TruncSeries scale(const CoeffElem&) const;
    // Division by a series whose constant term is a unit of the coefficient
    // ring; truncated at min order.
    TruncSeries divide(const TruncSeries&) const;
    // Substitution a -> c*a: coefficient j picks up c^j.
    TruncSeries compose_linear(const CoeffElem& c) const;
    TruncSeries shift_up() const; // multiply by the formal variable

private:
    std::vector<CoeffElem> c_;
    bool exact_tail_;
};

// Exact truncated expansion of the named series.
TruncSeries series_coefficients(SeriesKind kind, int order);

// Checks the displayed relation between the normalized and un-normalized
// series: qy_hat(a) = (1+y)^-1 * qy(a(1+y)), coefficientwise to the order.
bool relation_check_qy_hat(int order);

// a / qy(a) = (1 - e^-a)/(1 + y e^-a); constant term 0, linear term
// 1/(1+y). Used for the virtual class of a hypersurface.
TruncSeries alpha_over_qy_series(int order);

} // namespace toricc
