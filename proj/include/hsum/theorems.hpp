#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "hsum/binomial.hpp"
#include "hsum/harmonic.hpp"
#include "hsum/rational.hpp"
#include "hsum/record.hpp"
#include "hsum/scalar.hpp"

namespace hsum {

// The twelve summation formulas form four families (indexed 1..4) of three
// weights k^t (t = 0, 1, 2):
//   family 1:  sum_k (-4)^k  C(n,k)/C(2k,k)   * k^t * H_{2k}
//   family 2:  sum_k (-4)^k  C(n,k)/C(1+2k,k) * k^t * H_{1+2k}
//   family 3:  sum_k (-1/4)^k C(n,k)*C(2k,k)   * k^t * H_{2k}
//   family 4:  sum_k (-1/4)^k C(n,k)*C(1+2k,k) * k^t * H_{1+2k}
struct theorem_id {
    int family = 1;  // 1..4
    int t = 0;       // 0..2

    bool operator==(const theorem_id&) const = default;
};

inline std::string to_string(theorem_id id) {
    return "f" + std::to_string(id.family) + "t" + std::to_string(id.t);
}

inline constexpr std::array<theorem_id, 12> all_theorem_ids = {{
    {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2},
    {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2},
}};

// Accepts exactly the strings "f1t0".."f4t2".
inline std::optional<theorem_id> parse_theorem_id(const std::string& s) {
    if (s.size() != 4 || s[0] != 'f' || s[2] != 't') return std::nullopt;
    int family = s[1] - '0';
    int t = s[3] - '0';
    if (family < 1 || family > 4 || t < 0 || t > 2) return std::nullopt;
    return theorem_id{family, t};
}

namespace detail {

inline void check_family(int family, int t) {
    if (family < 1 || family > 4 || t < 0 || t > 2) {
        throw std::invalid_argument("theorem family/t out of range");
    }
}

// Iterator over the signed binomial coefficients c_k of a family's summand
// (everything except the k^t weight and the harmonic factor):
//   family 1: c_k = (-4)^k C(n,k)/C(2k,k)
//   family 2: c_k = (-4)^k C(n,k)/C(1+2k,k)
//   family 3: c_k = (-1/4)^k C(n,k) C(2k,k)
//   family 4: c_k = (-1/4)^k C(n,k) C(1+2k,k)
// advanced by one exact rational multiplication per step.
struct family_coefficients {
    int family;
    long long n;
    long long k = 0;
    rational c{1};

    family_coefficients(int family_, long long n_) : family(family_), n(n_) {}

    void advance() {
        ++k;
        switch (family) {
            case 1:
                c *= rational(-2 * (n - k + 1), 2 * k - 1);
                break;
            case 2:
                c *= rational(-2 * (n - k + 1) * (k + 1), k * (2 * k + 1));
                break;
            case 3:
                c *= rational(-(n - k + 1) * (2 * k - 1), 2 * k * k);
                break;
            default:
                c *= rational(-(n - k + 1) * (2 * k + 1), 2 * k * (k + 1));
                break;
        }
    }
};

// Harmonic subscript of the family's summand: 2k for families 1 and 3,
// 1+2k for families 2 and 4.
inline long long family_h_index(int family, long long k) {
    return (family == 1 || family == 3) ? 2 * k : 2 * k + 1;
}

}  // namespace detail

// Left-hand side of the (family, t) formula at n, by direct summation.
inline rational family_lhs(int family, int t, long long n) {
    detail::check_family(family, t);
    harmonic(2 * n + 1);  // one cache extension instead of n+1 on the fly
    rational acc(0);
    detail::family_coefficients coeff(family, n);
    for (long long k = 0; k <= n; ++k) {
        if (k > 0) coeff.advance();
        rational term = coeff.c;
        for (int i = 0; i < t; ++i) term *= rational(k);
        acc += term * harmonic(detail::family_h_index(family, k));
    }
    return acc;
}

// Published closed form of the (family, t) formula.  Forms whose printed
// shape has a removable factor 1/n (families 3 and 4 at t = 2, family 4 at
// t = 1) are algebraically distributed so that every denominator is nonzero
// for all n >= 0; the value is unchanged where both shapes are defined.
inline rational theorem_rhs(theorem_id id, long long n) {
    detail::check_family(id.family, id.t);
    const rational N(n);
    const rational Hn = harmonic(n);

    if (id.family == 1) {
        const rational H2n = harmonic(2 * n);
        // common building blocks: 2H_{2n} - H_n and the odd factors 2n-1, ...
        const rational G = rational(2) * H2n - Hn;
        const rational d1(2 * n - 1), d3(2 * n - 3), d5(2 * n - 5);
        switch (id.t) {
            case 0:
                return G / (rational(2) * d1) - rational(4 * n) / (d1 * d1);
            case 1:
                return N * (Hn - rational(2) * H2n) / (d1 * d3) +
                       N * rational(20 * n * n - 24 * n - 1) / (d1 * d1 * d3 * d3);
            default: {
                rational p = rational(96) * N * N * N * N -
                             rational(280) * N * N * N + rational(60) * N * N +
                             rational(182) * N - rational(13);
                return N * rational(2 * n + 1) * G / (d1 * d3 * d5) -
                       N * p / (d1 * d1 * d3 * d3 * d5 * d5);
            }
        }
    }

    if (id.family == 2) {
        const rational H2n1 = harmonic(2 * n + 1);
        const rational G = rational(2) * H2n1 - Hn;
        const rational q(4 * n * n - 1), d3(2 * n - 3), d5(2 * n - 5);
        switch (id.t) {
            case 0: {
                rational p = rational(4) * N * N * N + rational(8) * N * N +
                             rational(7) * N - rational(2);
                return G / (rational(2) * q) - p / (q * q);
            }
            case 1: {
                rational p = rational(8) * N * N * N * N +
                             rational(20) * N * N * N - rational(2) * N * N -
                             rational(53) * N + rational(8);
                return rational(2) * N * (Hn - rational(2) * H2n1) / (q * d3) +
                       rational(2) * N * p / (q * q * d3 * d3);
            }
            default: {
                rational p = rational(32) * pow_scalar(N, 6) +
                             rational(160) * pow_scalar(N, 5) -
                             rational(544) * pow_scalar(N, 4) -
                             rational(560) * N * N * N +
                             rational(1482) * N * N - rational(382) * N -
                             rational(17);
                return rational(2) * N * rational(4 * n - 1) * G / (q * d3 * d5) -
                       rational(2) * N * p / (q * q * d3 * d3 * d5 * d5);
            }
        }
    }

    const rational pow4n = pow_scalar(rational(4), n);

    if (id.family == 3) {
        const rational H2n = harmonic(2 * n);
        const rational C = binom(2 * n, n);
        const rational d1(2 * n - 1), d3(2 * n - 3);
        switch (id.t) {
            case 0:
                return C * (rational(3) * Hn - rational(4) * H2n) /
                       (rational(2) * pow4n);
            case 1:
                return N * C /
                       ((rational(1) - rational(2) * N) * rational(2) * pow4n) *
                       (rational(3) * Hn - rational(4) * H2n -
                        rational(2 + 4 * n) / (rational(1) - rational(2) * N));
            default: {
                // n^2/( ... ) * { 3/2 H_n - 2 H_2n + p/(n(2n-1)(2n-3)) } with
                // the 1/n term distributed into the prefactor.
                rational p = rational(8) * N * N * N - rational(4) * N * N -
                             rational(10) * N + rational(3);
                return N * N * C / (pow4n * d1 * d3) *
                           (rational(3, 2) * Hn - rational(2) * H2n) +
                       N * p * C / (pow4n * d1 * d1 * d3 * d3);
            }
        }
    }

    const rational H2n1 = harmonic(2 * n + 1);
    const rational C = binom(2 * n + 1, n);
    const rational inv1pn = rational(1, n + 1);
    switch (id.t) {
        case 0: {
            const rational d(1 + 2 * n);
            return C / (rational(2) * pow4n * d) *
                       (rational(8 + 8 * n) / d + rational(3) * Hn -
                        rational(4) * H2n1) -
                   inv1pn;
        }
        case 1: {
            // 3n/(2*4^n(1-4n^2)) * { 3H_n - 4H_{1+2n} - 16n/(1-4n^2) - (2-14n)/(3n) }
            // with the 3n distributed across the brace.
            const rational q = rational(1) - rational(4) * N * N;
            return C / (rational(2) * pow4n * q) *
                       (rational(3) * N * (rational(3) * Hn - rational(4) * H2n1) -
                        rational(48) * N * N / q - rational(2) + rational(14) * N) +
                   inv1pn;
        }
        default: {
            // 3n(2-3n)/((3-2n)(1-4n^2)4^n) * { 2H_{1+2n} - 3/2 H_n
            //   - (3-8n-12n^2)/(1-4n^2) + p/(3n(3-2n)(2-3n)) } - 1/(1+n),
            // last brace term cancelled against the prefactor.
            const rational q = rational(1) - rational(4) * N * N;
            const rational d3(3 - 2 * n);
            rational p = rational(9) +
                         N * (rational(3) - rational(25) * N + rational(6) * N * N);
            rational brace = rational(2) * H2n1 - rational(3, 2) * Hn -
                             (rational(3) - rational(8) * N -
                              rational(12) * N * N) / q;
            return C * rational(3) * N * (rational(2) - rational(3) * N) /
                       (d3 * q * pow4n) * brace +
                   C * p / (d3 * d3 * q * pow4n) - inv1pn;
        }
    }
}

inline verification_record theorem_verify(theorem_id id, long long n) {
    verification_record r;
    r.check = check_kind::theorem;
    r.id = to_string(id);
    r.n = n;
    rational lhs = family_lhs(id.family, id.t, n);
    rational rhs = theorem_rhs(id, n);
    r.lhs = make_repr(lhs);
    r.rhs = make_repr(rhs);
    r.equal = (lhs == rhs);
    return r;
}

// The six bridge relations used to rewrite the differentiated kernels into
// harmonic-number form.  RelA/RelC relate shifted binomials over 0<=k<=n;
// RelB/RelD/RelE/RelF are single-index identities (n ignored).
enum class relation { RelA, RelB, RelC, RelD, RelE, RelF };

inline constexpr std::array<relation, 6> all_relations = {
    relation::RelA, relation::RelB, relation::RelC,
    relation::RelD, relation::RelE, relation::RelF,
};

inline std::string to_string(relation rel) {
    switch (rel) {
        case relation::RelA: return "RelA";
        case relation::RelB: return "RelB";
        case relation::RelC: return "RelC";
        case relation::RelD: return "RelD";
        case relation::RelE: return "RelE";
        case relation::RelF: return "RelF";
    }
    return "unknown";
}

inline verification_record relation_check(relation rel, long long k, long long n) {
    const bool uses_n = (rel == relation::RelA || rel == relation::RelC);
    if (uses_n && k > n) {
        throw std::invalid_argument("relation_check: k > n");
    }
    rational lhs, rhs;
    const rational half(1, 2);
    switch (rel) {
        case relation::RelA:
            lhs = gen_binom(rational(n) - half, n - k);
            rhs = pow_scalar(rational(4), k - n) * binom(n, k) * binom(2 * n, n) /
                  binom(2 * k, k);
            break;
        case relation::RelB:
            lhs = half * harmonic(k) + half * harmonic_offset(k, -half);
            rhs = harmonic(2 * k);
            break;
        case relation::RelC:
            lhs = rational(1 + k) * gen_binom(rational(n) + half, n - k);
            rhs = rational(1 + n) * pow_scalar(rational(4), k - n) * binom(n, k) *
                  binom(2 * n + 1, n) / binom(2 * k + 1, k);
            break;
        case relation::RelD:
            lhs = half * harmonic(k) + half * harmonic_offset(k, half);
            rhs = harmonic(2 * k + 1) - rational(1);
            break;
        case relation::RelE:
            lhs = gen_binom(rational(k) - half, k);
            rhs = pow_scalar(rational(4), -k) * binom(2 * k, k);
            break;
        case relation::RelF:
            lhs = gen_binom(rational(k) + half, k) / rational(1 + k);
            rhs = pow_scalar(rational(4), -k) * binom(2 * k + 1, k);
            break;
    }
    verification_record r;
    r.check = check_kind::relation;
    r.id = to_string(rel) + (uses_n ? "(k=" + std::to_string(k) + ")" : "");
    r.n = uses_n ? n : k;
    r.lhs = make_repr(lhs);
    r.rhs = make_repr(rhs);
    r.equal = (lhs == rhs);
    return r;
}

}  // namespace hsum
