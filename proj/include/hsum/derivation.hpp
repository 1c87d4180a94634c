#pragma once

#include <stdexcept>
#include <string>

#include "hsum/dual.hpp"
#include "hsum/harmonic.hpp"
#include "hsum/kernels.hpp"
#include "hsum/record.hpp"
#include "hsum/theorems.hpp"

namespace hsum {

// Each theorem family is obtained by substituting a fixed affine pair
// (a, b) = (c0 + c1*x, d0 + d1*x) into a kernel identity and applying the
// derivative operator at x = 0 — i.e. evaluating the kernel over duals.
// Substitution s<f> feeds family f.
enum class substitution { s1, s2, s3, s4 };

inline std::string to_string(substitution sub) {
    switch (sub) {
        case substitution::s1: return "s1";
        case substitution::s2: return "s2";
        case substitution::s3: return "s3";
        case substitution::s4: return "s4";
    }
    return "unknown";
}

inline substitution substitution_for_family(int family) {
    switch (family) {
        case 1: return substitution::s1;
        case 2: return substitution::s2;
        case 3: return substitution::s3;
        case 4: return substitution::s4;
    }
    throw std::invalid_argument("substitution_for_family: family out of range");
}

// The affine (a, b) pairs:
//   s1: a = x/2,       b = -(x+1)/2  ->  ((0, 1/2), (-1/2, -1/2))
//   s2: a = x/2,       b = (1-x)/2   ->  ((0, 1/2), ( 1/2, -1/2))
//   s3: a = (x-1)/2,   b = -x/2      ->  ((-1/2, 1/2), (0, -1/2))
//   s4: a = (x+1)/2,   b = -x/2      ->  (( 1/2, 1/2), (0, -1/2))
inline kernel_params<dual> substitution_params(substitution sub, long long n) {
    const rational half(1, 2);
    switch (sub) {
        case substitution::s1:
            return {affine(rational(0), half), affine(-half, -half), n};
        case substitution::s2:
            return {affine(rational(0), half), affine(half, -half), n};
        case substitution::s3:
            return {affine(-half, half), affine(rational(0), -half), n};
        case substitution::s4:
            return {affine(half, half), affine(rational(0), -half), n};
    }
    throw std::invalid_argument("substitution_params: bad substitution");
}

// Weight kind whose kernel identity family f's theorem with weight t is
// derived from: t raises the k-power within the family's weight shape.
inline weight_kind kind_for_theorem(theorem_id id) {
    static constexpr weight_kind table[4][3] = {
        {weight_kind::W1, weight_kind::Wk, weight_kind::Wk2},
        {weight_kind::W1pk, weight_kind::Wk1pk, weight_kind::Wk21pk},
        {weight_kind::W1, weight_kind::Wk, weight_kind::Wk2},
        {weight_kind::Winv1pk, weight_kind::Wkinv1pk, weight_kind::Wk2inv1pk},
    };
    return table[id.family - 1][id.t];
}

// Weight w(k) of the family's base (t = 0) kernel under this substitution.
inline rational substitution_base_weight(substitution sub, long long k) {
    switch (sub) {
        case substitution::s2: return rational(1 + k);
        case substitution::s4: return rational(1, 1 + k);
        default: return rational(1);
    }
}

// Harmonic-form rewrite of the slope of the k-th base-kernel summand under
// the substitution, built from the bridge relations (RelA..RelF):
//   s1: (-1)^k 4^(k-n) C(n,k) (C(2n,n)/C(2k,k))     {H_2k - H_2n + H_n/2}
//   s2: (-1)^k (1+n) 4^(k-n) C(n,k)
//                     (C(1+2n,n)/C(1+2k,k))         {H_1+2k - H_1+2n + H_n/2}
//   s3: (-1)^k C(n,k) 4^(-k) C(2k,k)                {H_2k - H_n/2}
//   s4: (-1)^k C(n,k) 4^(-k) C(1+2k,k)              {H_1+2k - 1 - H_n/2}
inline rational base_term_rewrite(substitution sub, long long n, long long k) {
    const rational half(1, 2);
    rational coeff = binom(n, k);
    if (k & 1) coeff = -coeff;
    rational brace;
    switch (sub) {
        case substitution::s1:
            coeff *= pow_scalar(rational(4), k - n) * binom(2 * n, n) /
                     binom(2 * k, k);
            brace = harmonic(2 * k) - harmonic(2 * n) + half * harmonic(n);
            break;
        case substitution::s2:
            coeff *= rational(1 + n) * pow_scalar(rational(4), k - n) *
                     binom(2 * n + 1, n) / binom(2 * k + 1, k);
            brace = harmonic(2 * k + 1) - harmonic(2 * n + 1) + half * harmonic(n);
            break;
        case substitution::s3:
            coeff *= pow_scalar(rational(4), -k) * binom(2 * k, k);
            brace = harmonic(2 * k) - half * harmonic(n);
            break;
        case substitution::s4:
            coeff *= pow_scalar(rational(4), -k) * binom(2 * k + 1, k);
            brace = harmonic(2 * k + 1) - rational(1) - half * harmonic(n);
            break;
    }
    return coeff * brace;
}

// Evaluates the kernel identity over duals: equality requires both the value
// parts (the identity at x = 0) and the slope parts (its x-derivative — the
// harmonic-weighted companion identity) to agree.
inline verification_record dual_identity_check(weight_kind kind, substitution sub,
                                               long long n) {
    return make_kernel_record(check_kind::derivation,
                              to_string(sub) + ":" + to_string(kind), kind,
                              substitution_params(sub, n));
}

// Confirms that the slope of the k-th dual summand equals its harmonic-form
// rewrite.  For weights other than the substitution's base weight the rewrite
// scales by the rational ratio w(k)/w_base(k) (the extra k^t factor for the
// paired kinds).
inline verification_record term_rewrite_check(substitution sub, weight_kind kind,
                                              long long n, long long k) {
    if (k > n) throw std::invalid_argument("term_rewrite_check: k > n");
    verification_record r;
    r.check = check_kind::derivation;
    r.id = to_string(sub) + ":" + to_string(kind) + ":k=" + std::to_string(k);
    r.n = n;
    dual summand = kernel_summand(kind, substitution_params(sub, n), k);
    rational ratio = weight_value(kind, k) / substitution_base_weight(sub, k);
    rational rewrite = ratio * base_term_rewrite(sub, n, k);
    r.lhs = make_repr(summand.slope());
    r.rhs = make_repr(rewrite);
    r.equal = (summand.slope() == rewrite);
    return r;
}

// Composite replay of one theorem's proof at a given n:
//   (i)  the specialized kernel identity holds over duals,
//   (ii) every summand's slope rewrites into the harmonic form,
//   (iii) the published closed form matches the direct sum.
// No independent logic: equal is the conjunction of the three parts.
inline verification_record derivation_verify(theorem_id id, long long n) {
    const substitution sub = substitution_for_family(id.family);
    const weight_kind kind = kind_for_theorem(id);

    const verification_record identity = dual_identity_check(kind, sub, n);
    bool ok = identity.equal && identity.status == check_status::ok;

    if (ok) {
        const kernel_params<dual> params = substitution_params(sub, n);
        const std::vector<dual> summands = kernel_summands(kind, params);
        for (long long k = 0; k <= n && ok; ++k) {
            rational ratio =
                weight_value(kind, k) / substitution_base_weight(sub, k);
            ok = summands[static_cast<std::size_t>(k)].slope() ==
                 ratio * base_term_rewrite(sub, n, k);
        }
    }

    verification_record theorem = theorem_verify(id, n);
    verification_record r;
    r.check = check_kind::derivation;
    r.id = to_string(id);
    r.n = n;
    r.lhs = theorem.lhs;
    r.rhs = theorem.rhs;
    r.equal = ok && theorem.equal;
    return r;
}

}  // namespace hsum
