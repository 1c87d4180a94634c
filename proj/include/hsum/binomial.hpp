#pragma once

#include <stdexcept>
#include <vector>

#include "hsum/rational.hpp"
#include "hsum/scalar.hpp"

namespace hsum {

// Returned by value: the memo table may reallocate on a later call, so
// references into it must never escape.
inline bigint factorial(long long k) {
    thread_local std::vector<bigint> table{bigint(1)};
    while (static_cast<long long>(table.size()) <= k) {
        long long i = static_cast<long long>(table.size());
        table.push_back(table.back() * i);
    }
    return table[static_cast<std::size_t>(k)];
}

// C(n, k) over the integers, exact; 0 outside 0 <= k <= n.  Returned as a
// rational (denominator 1) since every consumer mixes it into rational sums.
inline rational binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return rational(0);
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return rational(std::move(r));
}

// Generalized binomial C(q, k) = q(q-1)...(q-k+1)/k! for q in any scalar
// domain.  The falling product keeps all division out of the domain: the
// single 1/k! scaling is a rational embed.
template <scalar_domain S>
S gen_binom(const S& top, long long k) {
    if (k < 0) throw std::invalid_argument("gen_binom: negative k");
    S prod{rational(1)};
    for (long long i = 0; i < k; ++i) {
        prod = prod * (top - S(rational(i)));
    }
    return prod * S(rational(bigint(1), factorial(k)));
}

// Prefix table v[m] = C(top, m) for m = 0..m_max, one domain multiplication
// per entry (falling product, rational 1/m! scalings).
template <scalar_domain S>
std::vector<S> gen_binom_prefix(const S& top, long long m_max) {
    std::vector<S> v;
    v.reserve(static_cast<std::size_t>(m_max) + 1);
    v.emplace_back(rational(1));
    S falling{rational(1)};
    for (long long m = 1; m <= m_max; ++m) {
        falling = falling * (top - S(rational(m - 1)));
        v.push_back(falling * S(rational(bigint(1), factorial(m))));
    }
    return v;
}

}  // namespace hsum
