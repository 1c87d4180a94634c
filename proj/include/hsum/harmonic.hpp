#pragma once

#include <map>
#include <vector>

#include "hsum/errors.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// H_n = sum_{i=1..n} 1/i, H_0 = 0.  Prefix table is memoized per thread so
// the report driver can sweep families concurrently without locking.  Values
// are returned by copy: extending the table reallocates it, so a reference
// from one call would not survive the next (e.g. harmonic(n) - harmonic(m)).
inline rational harmonic(long long n) {
    thread_local std::vector<rational> table{rational(0)};
    while (static_cast<long long>(table.size()) <= n) {
        long long i = static_cast<long long>(table.size());
        table.push_back(table.back() + rational(1, i));
    }
    return table[static_cast<std::size_t>(n)];
}

// sum_{i=1..n} 1/(c+i) for rational offset c.  Undefined when c = -i for some
// i in 1..n; that is the one way a zero denominator can arise downstream of
// canonical rationals, so it gets its own check and error.
inline rational harmonic_offset(long long n, const rational& c) {
    if (c.is_integer() && c.numerator() <= -1 && c.numerator() >= -n) {
        throw zero_denominator_error("harmonic offset hits zero at i = " +
                                     bigint(-c.numerator()).str());
    }
    thread_local std::map<rational, std::vector<rational>> tables;
    auto& table = tables[c];
    if (table.empty()) table.push_back(rational(0));
    while (static_cast<long long>(table.size()) <= n) {
        long long i = static_cast<long long>(table.size());
        table.push_back(table.back() + rational(1) / (c + rational(i)));
    }
    return table[static_cast<std::size_t>(n)];
}

}  // namespace hsum
