#pragma once

#include <concepts>

#include "hsum/errors.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// A scalar domain is a commutative ring with partial division that embeds the
// rationals.  Both `rational` itself and `dual` model it, which is what lets
// one kernel implementation serve the identity checks and their mechanical
// differentiation.
template <typename S>
concept scalar_domain =
    std::regular<S> &&
    std::constructible_from<S, rational> &&
    requires(const S& x, const S& y) {
        { x + y } -> std::same_as<S>;
        { x - y } -> std::same_as<S>;
        { x * y } -> std::same_as<S>;
        { x / y } -> std::same_as<S>;
        { -x } -> std::same_as<S>;
        { is_invertible(x) } -> std::convertible_to<bool>;
    };

// Exponentiation by squaring.  pow_scalar(x, 0) == 1 for every x (empty
// product), matching the k^t = 1 convention at k = t = 0 in the weighted sums.
template <scalar_domain S>
S pow_scalar(S base, long long exponent) {
    if (exponent < 0) {
        if (!is_invertible(base)) {
            throw zero_to_negative_power_error("zero base with negative exponent");
        }
        return S(rational(1)) / pow_scalar(std::move(base), -exponent);
    }
    S acc{rational(1)};
    while (exponent != 0) {
        if (exponent & 1) acc = acc * base;
        exponent >>= 1;
        if (exponent != 0) base = base * base;
    }
    return acc;
}

}  // namespace hsum
