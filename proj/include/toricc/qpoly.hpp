#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricc/rational.hpp"

namespace toricc {

// Dense polynomial in one variable over Q, trimmed of trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly variable();               // y
    static QPoly one_plus_var();           // 1 + y
    static QPoly monomial(int e, Rat c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    std::optional<Rat> as_constant() const;

    QPoly operator+(const QPoly&) const;
    QPoly operator-(const QPoly&) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly&) const;
    QPoly scale(const Rat&) const;
    QPoly pow(int e) const; // e >= 0

    Rat eval(const Rat& y0) const;

    // Exact division by (1 + y); nullopt if the remainder is nonzero.
    std::optional<QPoly> div_one_plus_var() const;

    bool operator==(const QPoly&) const = default;

    std::string to_string(const std::string& var = "y") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

} // namespace toricc
