#pragma once

#include <stdexcept>
#include <string>

namespace hsum {

// Every failure mode surfaced by the library is a named exception type so
// callers (and the report driver) can react to the *kind* of failure rather
// than parsing message text.

// Construction of a rational with denominator zero, or a harmonic offset
// c hitting c + i = 0 inside the summation range.
struct zero_denominator_error : std::domain_error {
    explicit zero_denominator_error(const std::string& what)
        : std::domain_error(what) {}
};

// Division by a scalar that has no multiplicative inverse in its domain
// (zero rational, or a dual number with value part zero).
struct non_invertible_error : std::domain_error {
    explicit non_invertible_error(const std::string& what)
        : std::domain_error(what) {}
};

// pow with negative exponent on a non-invertible base.
struct zero_to_negative_power_error : std::domain_error {
    explicit zero_to_negative_power_error(const std::string& what)
        : std::domain_error(what) {}
};

// A kernel closed form evaluated at parameters where one of its denominator
// factors vanishes.  `factor` names the offending factor, e.g. "a+1-b-n".
struct pole_error : std::domain_error {
    std::string factor;
    explicit pole_error(std::string factor_name)
        : std::domain_error("pole: " + factor_name), factor(std::move(factor_name)) {}
};

}  // namespace hsum
