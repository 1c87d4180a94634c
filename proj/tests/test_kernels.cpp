#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hsum/dual.hpp>
#include <hsum/kernels.hpp>

#include "oracle.hpp"

using hsum::affine;
using hsum::check_status;
using hsum::cv_base;
using hsum::cv_check;
using hsum::dual;
using hsum::kernel_lhs;
using hsum::kernel_params;
using hsum::kernel_pole;
using hsum::kernel_rhs;
using hsum::kernel_summand;
using hsum::kernel_summands;
using hsum::kernel_verify;
using hsum::rational;
using hsum::weight_kind;
using hsum::weight_value;

namespace {

// Small deterministic parameter source for the sampling tests.
struct param_source {
    std::mt19937_64 rng{20260814};

    long long draw(long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    kernel_params<rational> next(long long n_max) {
        rational a(draw(-8, 8), draw(1, 6));
        rational b(draw(-8, 8), draw(1, 6));
        return {a, b, draw(0, n_max)};
    }
};

}  // namespace

TEST_CASE("weight values: frozen table") {
    CHECK(weight_value(weight_kind::W1, 0) == rational(1));
    CHECK(weight_value(weight_kind::Wk, 0) == rational(0));
    CHECK(weight_value(weight_kind::Wk2, 3) == rational(9));
    CHECK(weight_value(weight_kind::W1pk, 4) == rational(5));
    CHECK(weight_value(weight_kind::Wk1pk, 3) == rational(12));
    CHECK(weight_value(weight_kind::Wk21pk, 2) == rational(12));
    CHECK(weight_value(weight_kind::Winv1pk, 0) == rational(1));
    CHECK(weight_value(weight_kind::Winv1pk, 3) == rational(1, 4));
    CHECK(weight_value(weight_kind::Wkinv1pk, 3) == rational(3, 4));
    CHECK(weight_value(weight_kind::Wk2inv1pk, 3) == rational(9, 4));
    for (weight_kind kind : hsum::all_weight_kinds) {
        for (long long k = 0; k <= 12; ++k) {
            CHECK(weight_value(kind, k) == oracle::weight(kind, k));
        }
    }
}

TEST_CASE("base convolution: frozen values and oracle agreement") {
    {
        auto [lhs, rhs] = cv_base(rational(1, 2), rational(1, 2), 1);
        CHECK(lhs == rational(1));
        CHECK(rhs == rational(1));
    }
    {
        auto [lhs, rhs] = cv_base(rational(3), rational(4), 2);
        CHECK(lhs == rational(21));
        CHECK(rhs == rational(21));
    }
    param_source src;
    for (int trial = 0; trial < 40; ++trial) {
        auto p = src.next(10);
        auto [lhs, rhs] = cv_base(p.a, p.b, p.n);
        CHECK(lhs == rhs);
        CHECK(lhs == oracle::cv_sum(p.a, p.b, p.n));
    }
    hsum::verification_record r = cv_check(rational(-2, 3), rational(5), 4);
    CHECK(r.check == hsum::check_kind::cv_base);
    CHECK(r.id == "cv(x=-2/3;y=5/1)");
    CHECK(r.n == 4);
    CHECK(r.equal);
}

TEST_CASE("kernel summands match the naive summand and sum to the lhs") {
    param_source src;
    for (weight_kind kind : hsum::all_weight_kinds) {
        auto p = src.next(9);
        auto terms = kernel_summands(kind, p);
        REQUIRE(terms.size() == static_cast<std::size_t>(p.n) + 1);
        rational total(0);
        for (long long k = 0; k <= p.n; ++k) {
            CHECK(terms[static_cast<std::size_t>(k)] == kernel_summand(kind, p, k));
            total += terms[static_cast<std::size_t>(k)];
        }
        CHECK(total == kernel_lhs(kind, p));
        CHECK(total == oracle::kernel_sum(kind, p.a, p.b, p.n));
    }
}

TEST_CASE("kernel identities hold at sampled non-pole parameters") {
    param_source src;
    for (weight_kind kind : hsum::all_weight_kinds) {
        int verified = 0;
        while (verified < 50) {
            auto p = src.next(12);
            auto record = kernel_verify(kind, p);
            if (kernel_pole(kind, p)) {
                CHECK(record.status == check_status::pole_skipped);
                CHECK_FALSE(record.equal);
                CHECK(record.rhs.value.starts_with("pole:"));
            } else {
                CHECK(record.status == check_status::ok);
                CHECK(record.equal);
                ++verified;
            }
        }
    }
}

TEST_CASE("kernel identities hold exhaustively at small integer parameters") {
    for (weight_kind kind : hsum::all_weight_kinds) {
        for (long long a = -3; a <= 3; ++a) {
            for (long long b = -3; b <= 3; ++b) {
                for (long long n = 0; n <= 5; ++n) {
                    kernel_params<rational> p{rational(a), rational(b), n};
                    if (kernel_pole(kind, p)) continue;
                    CHECK(kernel_lhs(kind, p) == kernel_rhs(kind, p));
                }
            }
        }
    }
}

TEST_CASE("pole detection names the vanishing factor") {
    // a+1-b-n = 0
    kernel_params<rational> p1{rational(0), rational(1), 0};
    REQUIRE(kernel_pole(weight_kind::Wk, p1).has_value());
    CHECK(*kernel_pole(weight_kind::Wk, p1) == "a+1-b-n");
    auto record = kernel_verify(weight_kind::Wk, p1);
    CHECK(record.status == check_status::pole_skipped);
    CHECK(record.rhs.value == "pole:a+1-b-n");
    CHECK_FALSE(record.equal);
    CHECK(record.id == "Wk(a=0/1;b=1/1)");

    // a = 0 poles every inverse-weight form
    kernel_params<rational> p2{rational(0), rational(1, 3), 2};
    CHECK(*kernel_pole(weight_kind::Winv1pk, p2) == "a");
    CHECK(*kernel_pole(weight_kind::Wkinv1pk, p2) == "a");
    CHECK(*kernel_pole(weight_kind::Wk2inv1pk, p2) == "a");

    // b-a-2+n = 0 outranks b-a-1+n in the two-factor forms
    kernel_params<rational> p3{rational(1), rational(2), 1};
    CHECK(*kernel_pole(weight_kind::Wk2, p3) == "b-a-2+n");
    CHECK(*kernel_pole(weight_kind::Wk1pk, p3) == "b-a-2+n");

    // W1 never poles
    CHECK_FALSE(kernel_pole(weight_kind::W1, p1).has_value());
    CHECK_FALSE(kernel_pole(weight_kind::W1, p3).has_value());

    // kernel_rhs throws the same factor name the pre-check reports
    try {
        kernel_rhs(weight_kind::Wk21pk, kernel_params<rational>{rational(0), rational(1), 2});
        FAIL("expected pole_error");
    } catch (const hsum::pole_error& e) {
        CHECK(e.factor == "b-a-3+n");
    }
}

TEST_CASE("pole pre-check agrees with closed-form evaluation") {
    param_source src;
    for (weight_kind kind : hsum::all_weight_kinds) {
        for (int trial = 0; trial < 60; ++trial) {
            auto p = src.next(8);
            auto pole = kernel_pole(kind, p);
            if (pole) {
                CHECK_THROWS_AS(kernel_rhs(kind, p), hsum::pole_error);
            } else {
                CHECK_NOTHROW(kernel_rhs(kind, p));
            }
        }
    }
}

TEST_CASE("inverse-weight kernel at a zero-valued edge case") {
    // lhs and rhs are both 0 here; guards against sign slips in the split form
    kernel_params<rational> p{rational(1), rational(0), 1};
    REQUIRE_FALSE(kernel_pole(weight_kind::Winv1pk, p).has_value());
    CHECK(kernel_lhs(weight_kind::Winv1pk, p) == rational(0));
    CHECK(kernel_rhs(weight_kind::Winv1pk, p) == rational(0));
}

TEST_CASE("pointwise weight ladders") {
    // w-additivity carries from summands to sums: (1+k) = 1 + k, etc.
    param_source src;
    for (int trial = 0; trial < 30; ++trial) {
        auto p = src.next(10);
        rational w1 = kernel_lhs(weight_kind::W1, p);
        rational wk = kernel_lhs(weight_kind::Wk, p);
        rational wk2 = kernel_lhs(weight_kind::Wk2, p);
        rational winv = kernel_lhs(weight_kind::Winv1pk, p);
        CHECK(kernel_lhs(weight_kind::W1pk, p) == w1 + wk);
        CHECK(kernel_lhs(weight_kind::Wk1pk, p) == wk + wk2);
        CHECK(kernel_lhs(weight_kind::Wkinv1pk, p) == w1 - winv);
        CHECK(kernel_lhs(weight_kind::Wk2inv1pk, p) == wk - w1 + winv);
    }
}

TEST_CASE("index-shift ladders") {
    // Reindexing k -> k+1 turns the k-weighted sum into a shifted plain sum:
    //   L(Wk; a, b, n) = -(a+1) L(W1; a+1, b+1, n-1)              for n >= 1
    //   L(Wk21pk; a, b, n)
    //     = -(a+1) [2 L(W1) + 3 L(Wk) + L(Wk2)](a+1, b+1, n-1)    for n >= 1
    param_source src;
    for (int trial = 0; trial < 25; ++trial) {
        auto p = src.next(9);
        if (p.n == 0) p.n = 1;
        kernel_params<rational> q{p.a + rational(1), p.b + rational(1), p.n - 1};
        rational a1 = p.a + rational(1);
        CHECK(kernel_lhs(weight_kind::Wk, p) == -a1 * kernel_lhs(weight_kind::W1, q));
        CHECK(kernel_lhs(weight_kind::Wk21pk, p) ==
              -a1 * (rational(2) * kernel_lhs(weight_kind::W1, q) +
                     rational(3) * kernel_lhs(weight_kind::Wk, q) +
                     kernel_lhs(weight_kind::Wk2, q)));
    }
}

TEST_CASE("kernel evaluation is transparent to dual lifting") {
    // Duals with zero slope must reproduce the rational computation exactly.
    param_source src;
    for (weight_kind kind : hsum::all_weight_kinds) {
        auto p = src.next(8);
        kernel_params<dual> lifted{dual{p.a}, dual{p.b}, p.n};
        dual lhs = kernel_lhs(kind, lifted);
        CHECK(lhs.value() == kernel_lhs(kind, p));
        CHECK(lhs.slope() == rational(0));
        if (!kernel_pole(kind, p)) {
            dual rhs = kernel_rhs(kind, lifted);
            CHECK(rhs.value() == kernel_rhs(kind, p));
            CHECK(rhs.slope() == rational(0));
        }
    }
}
