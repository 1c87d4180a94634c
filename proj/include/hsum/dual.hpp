#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "hsum/binomial.hpp"
#include "hsum/errors.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// Dual number (value, slope) = value + slope*eps with eps^2 = 0.  Evaluating
// an expression over duals with x = (0, 1) substituted yields the expression's
// value at 0 in .value and its derivative at 0 in .slope — this is the
// derivative operator used to turn each identity into its harmonic-weighted
// companion, with no symbolic algebra involved.
class dual {
  public:
    dual() = default;
    explicit dual(rational value) : value_(std::move(value)) {}
    dual(rational value, rational slope)
        : value_(std::move(value)), slope_(std::move(slope)) {}

    const rational& value() const { return value_; }
    const rational& slope() const { return slope_; }

    dual operator-() const { return dual(-value_, -slope_); }

    friend dual operator+(const dual& x, const dual& y) {
        return dual(x.value_ + y.value_, x.slope_ + y.slope_);
    }

    friend dual operator-(const dual& x, const dual& y) {
        return dual(x.value_ - y.value_, x.slope_ - y.slope_);
    }

    // Product rule in the slope component.
    friend dual operator*(const dual& x, const dual& y) {
        return dual(x.value_ * y.value_,
                    x.slope_ * y.value_ + x.value_ * y.slope_);
    }

    // Quotient rule; requires an invertible (value part nonzero) divisor.
    friend dual operator/(const dual& x, const dual& y) {
        if (y.value_.is_zero()) {
            throw non_invertible_error("division by dual with zero value part");
        }
        rational v = x.value_ / y.value_;
        rational s = (x.slope_ * y.value_ - x.value_ * y.slope_) /
                     (y.value_ * y.value_);
        return dual(std::move(v), std::move(s));
    }

    friend bool operator==(const dual& x, const dual& y) = default;

    std::string to_string() const {
        return value_.to_string() + "+" + slope_.to_string() + "*eps";
    }

    friend std::ostream& operator<<(std::ostream& os, const dual& d) {
        return os << d.to_string();
    }

  private:
    rational value_{0};
    rational slope_{0};
};

inline bool is_invertible(const dual& x) { return !x.value().is_zero(); }

// The affine substitution c0 + c1*x as a dual: its value at x = 0 and its
// x-derivative.  affine(0, 1) is x itself.
inline dual affine(rational c0, rational c1) {
    return dual(std::move(c0), std::move(c1));
}

// d/dx C(q + slope*x, k) at x = 0, mechanically via duals.
inline rational derivative_of_binomial(const rational& q, const rational& slope,
                                       long long k) {
    return gen_binom(affine(q, slope), k).slope();
}

}  // namespace hsum
