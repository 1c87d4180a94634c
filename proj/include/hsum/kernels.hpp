#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsum/binomial.hpp"
#include "hsum/errors.hpp"
#include "hsum/rational.hpp"
#include "hsum/record.hpp"
#include "hsum/scalar.hpp"

namespace hsum {

// The base convolution identity
//     sum_{k=0..n} C(x, k) * C(y, n-k) = C(x+y, n)
// and its nine weighted alternating variants
//     sum_{k=0..n} (-1)^k w(k) C(a+k, k) C(b+n-k, n-k) = closed form
// with weights w(k) = k^t and k^t*(1+k) and k^t/(1+k) for t = 0, 1, 2.
enum class weight_kind {
    W1,        // 1
    Wk,        // k
    Wk2,       // k^2
    W1pk,      // 1+k
    Wk1pk,     // k(1+k)
    Wk21pk,    // k^2(1+k)
    Winv1pk,   // 1/(1+k)
    Wkinv1pk,  // k/(1+k)
    Wk2inv1pk, // k^2/(1+k)
};

inline constexpr std::array<weight_kind, 9> all_weight_kinds = {
    weight_kind::W1,      weight_kind::Wk,       weight_kind::Wk2,
    weight_kind::W1pk,    weight_kind::Wk1pk,    weight_kind::Wk21pk,
    weight_kind::Winv1pk, weight_kind::Wkinv1pk, weight_kind::Wk2inv1pk,
};

inline std::string to_string(weight_kind kind) {
    switch (kind) {
        case weight_kind::W1: return "W1";
        case weight_kind::Wk: return "Wk";
        case weight_kind::Wk2: return "Wk2";
        case weight_kind::W1pk: return "W1pk";
        case weight_kind::Wk1pk: return "Wk1pk";
        case weight_kind::Wk21pk: return "Wk21pk";
        case weight_kind::Winv1pk: return "Winv1pk";
        case weight_kind::Wkinv1pk: return "Wkinv1pk";
        case weight_kind::Wk2inv1pk: return "Wk2inv1pk";
    }
    return "unknown";
}

// Exponent t of the k^t factor in w(k).
inline int weight_k_power(weight_kind kind) {
    switch (kind) {
        case weight_kind::W1:
        case weight_kind::W1pk:
        case weight_kind::Winv1pk: return 0;
        case weight_kind::Wk:
        case weight_kind::Wk1pk:
        case weight_kind::Wkinv1pk: return 1;
        default: return 2;
    }
}

inline rational weight_value(weight_kind kind, long long k) {
    rational kt(1);
    for (int t = 0; t < weight_k_power(kind); ++t) kt *= rational(k);
    switch (kind) {
        case weight_kind::W1:
        case weight_kind::Wk:
        case weight_kind::Wk2: return kt;
        case weight_kind::W1pk:
        case weight_kind::Wk1pk:
        case weight_kind::Wk21pk: return kt * rational(1 + k);
        default: return kt / rational(1 + k);
    }
}

template <scalar_domain S>
struct kernel_params {
    S a;
    S b;
    long long n = 0;
};

// (-1)^k w(k) C(a+k, k) C(b+n, n-k); note the fixed top b+n in the second
// binomial.  Only rational divisions appear (k!, (n-k)!, 1+k).
template <scalar_domain S>
S kernel_summand(weight_kind kind, const kernel_params<S>& p, long long k) {
    rational w = weight_value(kind, k);
    if (k & 1) w = -w;
    return S(w) * gen_binom(p.a + S(rational(k)), k) *
           gen_binom(p.b + S(rational(p.n)), p.n - k);
}

// All n+1 summands in O(n) domain multiplications: C(a+k, k) via the rising
// product (a+1)...(a+k), C(b+n, m) via the falling-product prefix table.
template <scalar_domain S>
std::vector<S> kernel_summands(weight_kind kind, const kernel_params<S>& p) {
    const long long n = p.n;
    const std::vector<S> cb = gen_binom_prefix(p.b + S(rational(n)), n);
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    S ra{rational(1)};
    for (long long k = 0; k <= n; ++k) {
        if (k > 0) ra = ra * (p.a + S(rational(k)));
        S ca = ra * S(rational(bigint(1), factorial(k)));
        rational w = weight_value(kind, k);
        if (k & 1) w = -w;
        out.push_back(S(w) * ca * cb[static_cast<std::size_t>(n - k)]);
    }
    return out;
}

template <scalar_domain S>
S kernel_lhs(weight_kind kind, const kernel_params<S>& p) {
    S acc{rational(0)};
    for (const S& term : kernel_summands(kind, p)) acc = acc + term;
    return acc;
}

namespace detail {

// Denominator factor of a closed form; throws if it vanishes.  The factor
// names are fixed strings used verbatim in pole-skip records.
template <scalar_domain S>
void require_invertible(const S& factor, const char* name) {
    if (!is_invertible(factor)) throw pole_error(name);
}

}  // namespace detail

// Closed form of the weighted sum.  Throws pole_error at parameters where a
// denominator factor vanishes (the identity itself still holds in the limit,
// but the printed form does not evaluate there).
template <scalar_domain S>
S kernel_rhs(weight_kind kind, const kernel_params<S>& p) {
    const S one{rational(1)};
    const S& a = p.a;
    const S& b = p.b;
    const S N{rational(p.n)};
    const long long n = p.n;
    const S a1 = a + one;
    // C(b-a-1+n, n), the common binomial of the polynomial-weight forms.
    auto d1 = [&] { return gen_binom(b - a - one + N, n); };

    switch (kind) {
        case weight_kind::W1:
            return d1();
        case weight_kind::Wk: {
            S f = a1 - b - N;
            detail::require_invertible(f, "a+1-b-n");
            return a1 * N / f * d1();
        }
        case weight_kind::Wk2: {
            S f2 = b - a - S(rational(2)) + N;
            S f1 = b - a - one + N;
            detail::require_invertible(f2, "b-a-2+n");
            detail::require_invertible(f1, "b-a-1+n");
            return N * a1 * (a * N + N - b) / (f2 * f1) * d1();
        }
        case weight_kind::W1pk: {
            S f1 = b - a - one + N;
            detail::require_invertible(f1, "b-a-1+n");
            return (b - a - one - a * N) / f1 * d1();
        }
        case weight_kind::Wk1pk: {
            S f2 = b - a - S(rational(2)) + N;
            S f1 = b - a - one + N;
            detail::require_invertible(f2, "b-a-2+n");
            detail::require_invertible(f1, "b-a-1+n");
            return a1 * (a + S(rational(2)) - b - b + a * N) * N / (f2 * f1) * d1();
        }
        case weight_kind::Wk21pk: {
            S f3 = b - a - S(rational(3)) + N;
            S f2 = b - a - S(rational(2)) + N;
            S f1 = b - a - one + N;
            detail::require_invertible(f3, "b-a-3+n");
            detail::require_invertible(f2, "b-a-2+n");
            detail::require_invertible(f1, "b-a-1+n");
            S num = b * (one - b) * S(rational(2)) -
                    a1 * (S(rational(4)) + a - S(rational(4)) * b) * N -
                    a * a1 * N * N;
            return N * a1 * num / (f3 * f2 * f1) * d1();
        }
        case weight_kind::Winv1pk: {
            detail::require_invertible(a, "a");
            return (gen_binom(b + N, n + 1) - gen_binom(b - a + N, n + 1)) / a;
        }
        case weight_kind::Wkinv1pk: {
            detail::require_invertible(a, "a");
            return (a1 * N + b) / (a * S(rational(n + 1))) * d1() -
                   gen_binom(b + N, n + 1) / a;
        }
        case weight_kind::Wk2inv1pk: {
            S f = one + a - b - N;
            detail::require_invertible(a, "a");
            detail::require_invertible(f, "1+a-b-n");
            S num = a1 * (a * N + N - one) * N -
                    (one + a - N - N - a * N) * b + b * b;
            return gen_binom(b + N, n + 1) / a +
                   num / (a * S(rational(n + 1)) * f) * d1();
        }
    }
    throw std::invalid_argument("kernel_rhs: bad weight kind");
}

// Names the first vanishing denominator factor of the closed form at the
// given parameters, if any; cheap pre-check used by the sampling driver.
template <scalar_domain S>
std::optional<std::string> kernel_pole(weight_kind kind, const kernel_params<S>& p) {
    const S one{rational(1)};
    const S N{rational(p.n)};
    auto gone = [&](const S& x) { return !is_invertible(x); };
    auto diff = [&](int c) { return p.b - p.a - S(rational(c)) + N; };
    switch (kind) {
        case weight_kind::W1:
            return std::nullopt;
        case weight_kind::Wk:
            if (gone(p.a + one - p.b - N)) return "a+1-b-n";
            return std::nullopt;
        case weight_kind::Wk2:
        case weight_kind::Wk1pk:
            if (gone(diff(2))) return "b-a-2+n";
            if (gone(diff(1))) return "b-a-1+n";
            return std::nullopt;
        case weight_kind::W1pk:
            if (gone(diff(1))) return "b-a-1+n";
            return std::nullopt;
        case weight_kind::Wk21pk:
            if (gone(diff(3))) return "b-a-3+n";
            if (gone(diff(2))) return "b-a-2+n";
            if (gone(diff(1))) return "b-a-1+n";
            return std::nullopt;
        case weight_kind::Winv1pk:
        case weight_kind::Wkinv1pk:
            if (gone(p.a)) return "a";
            return std::nullopt;
        case weight_kind::Wk2inv1pk:
            if (gone(p.a)) return "a";
            if (gone(one + p.a - p.b - N)) return "1+a-b-n";
            return std::nullopt;
    }
    return std::nullopt;
}

// Both sides of the base convolution at rational (x, y); no poles exist.
inline std::pair<rational, rational> cv_base(const rational& x, const rational& y,
                                             long long n) {
    std::vector<rational> cx = gen_binom_prefix(x, n);
    std::vector<rational> cy = gen_binom_prefix(y, n);
    rational lhs(0);
    for (long long k = 0; k <= n; ++k) {
        lhs += cx[static_cast<std::size_t>(k)] * cy[static_cast<std::size_t>(n - k)];
    }
    return {lhs, gen_binom(x + y, n)};
}

template <scalar_domain S>
verification_record make_kernel_record(check_kind check, std::string id,
                                       weight_kind kind, const kernel_params<S>& p) {
    verification_record r;
    r.check = check;
    r.id = std::move(id);
    r.n = p.n;
    S lhs = kernel_lhs(kind, p);
    r.lhs = make_repr(lhs);
    try {
        S rhs = kernel_rhs(kind, p);
        r.rhs = make_repr(rhs);
        r.equal = (lhs == rhs);
    } catch (const pole_error& e) {
        r.rhs.value = "pole:" + e.factor;
        r.equal = false;
        r.status = check_status::pole_skipped;
    }
    return r;
}

// Record ids carry the sampled parameters; ';' keeps them csv-safe.
inline std::string kernel_record_id(weight_kind kind, const kernel_params<rational>& p) {
    return to_string(kind) + "(a=" + p.a.to_string() + ";b=" + p.b.to_string() + ")";
}

inline verification_record kernel_verify(weight_kind kind,
                                         const kernel_params<rational>& p) {
    return make_kernel_record(check_kind::kernel, kernel_record_id(kind, p), kind, p);
}

inline verification_record cv_check(const rational& x, const rational& y, long long n) {
    verification_record r;
    r.check = check_kind::cv_base;
    r.id = "cv(x=" + x.to_string() + ";y=" + y.to_string() + ")";
    r.n = n;
    auto [lhs, rhs] = cv_base(x, y, n);
    r.lhs = make_repr(lhs);
    r.rhs = make_repr(rhs);
    r.equal = (lhs == rhs);
    return r;
}

}  // namespace hsum
