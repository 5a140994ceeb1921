#include <catch2/catch_amalgamated.hpp>

#include "trigsum/numbers.hpp"
#include "trigsum/sums.hpp"

using namespace trigsum;

TEST_CASE("half-angle sum small closed values", "[sums]") {
    // m=2: single term (pi/4)^2 csc^2(pi/4) = pi^2/8
    CHECK(gardner_fisher(2, 1) == PiScaled(Rational(1, 8), 2));
    // m=3: (pi/6)^2 (4 + 4/3) = 4 pi^2/27
    CHECK(gardner_fisher(3, 1) == PiScaled(Rational(4, 27), 2));
    CHECK(gardner_fisher(2, 2) == PiScaled(Rational(1, 64), 4));
    CHECK(gardner_fisher(1, 3).is_zero());  // empty sum
}

TEST_CASE("half-angle sum symbolic families", "[sums]") {
    for (unsigned long m = 1; m <= 20; ++m) {
        Rational msq(Integer(m) * Integer(m));
        Rational inv = m == 0 ? Rational(0) : Rational(1) / msq;
        CHECK(gardner_fisher(m, 1) ==
              PiScaled(Rational(1, 6) * (Rational(1) - inv), 2));
        CHECK(gardner_fisher(m, 2) ==
              PiScaled(Rational(1, 90) *
                           (Rational(1) + Rational(5, 2) * inv - Rational(7, 2) * inv * inv),
                       4));
    }
}

TEST_CASE("full-circle sum values", "[sums]") {
    CHECK(dowker(1, 4) == Rational(0));
    for (unsigned long v = 1; v <= 8; ++v) CHECK(dowker(2, v) == Rational(1));
    CHECK(dowker(3, 1) == Rational(8, 3));
    for (unsigned long m = 2; m <= 10; ++m) {
        Rational x(Integer(m) * Integer(m));
        CHECK(dowker(m, 1) == (x - Rational(1)) / Rational(3));
        CHECK(dowker(m, 2) == (x - Rational(1)) * (x + Rational(11)) / Rational(45));
    }
}

TEST_CASE("coefficient families are linked by an index shift", "[sums]") {
    for (unsigned long v = 1; v <= 8; ++v) {
        CHECK(gf_p_coeffs(v).poly == gf_table_polynomial(v + 1).poly);
        CHECK(gf_table_polynomial(v).family == SumFamily::gf_R);
        CHECK(dowker_table_polynomial(v).poly.degree() == static_cast<long>(v) - 1);
        CHECK(dowker_q_coeffs(v).poly.degree() == static_cast<long>(v));
    }
}

TEST_CASE("full-circle polynomial top and bottom coefficients", "[sums]") {
    for (unsigned long v = 1; v <= 10; ++v) {
        const RationalPolynomial& q = dowker_q_coeffs(v).poly;
        CHECK(q.coeff(v) == Rational(2) * zeta_even_ratio(v));
        CHECK(q.eval(Rational(1)).is_zero());  // m = 1 gives the empty sum
        CHECK(q.eval(Rational(4)) == Rational(1));  // m = 2
    }
}

TEST_CASE("inverse-square coefficient expansion", "[sums]") {
    // S_{m,v} = sum_i C^v_i m^{-2i}, checked against the closed form
    for (unsigned long v = 1; v <= 6; ++v) {
        auto coeffs = gf_C_coeffs(v);
        REQUIRE(coeffs.size() == v + 1);
        for (unsigned long m = 2; m <= 7; ++m) {
            Rational msq_inv(Integer(1), Integer(m) * Integer(m));
            PiScaled acc;
            Rational p(1);
            for (unsigned long i = 0; i <= v; ++i) {
                CHECK(coeffs[i].pi_pow() == static_cast<long>(2 * v));
                acc = acc + coeffs[i] * p;
                p *= msq_inv;
            }
            CHECK(acc == gardner_fisher(m, v));
        }
    }
}

TEST_CASE("composite cotangent-cosecant sums", "[sums]") {
    CHECK(cc_sum(4, 0, 1, 2) == Rational(10));
    CHECK(cc_sum(3, 1, 0, 1) == Rational(2, 3));
    // sum of cot^2(k pi/m) = (m-1)(m-2)/3
    for (unsigned long m = 2; m <= 12; ++m)
        CHECK(cc_sum(m, 1, 0, 1) ==
              Rational(Integer(m - 1) * Integer(m - 2), Integer(3)));
    CHECK_THROWS_AS(cc_sum(5, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(cc_sum(0, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(cc_sum(5, 0, 0, 1), std::domain_error);
}

TEST_CASE("composite polynomial representation", "[sums]") {
    for (int ell : {1, 2}) {
        RationalPolynomial p = cc_polynomial(2, 1, ell);
        for (unsigned long m = 2; m <= 9; ++m)
            CHECK(p.eval(Rational(Integer(m) * Integer(m))) ==
                  cc_sum(m, 2, 1, ell));
    }
    CHECK(cc_polynomial(5, 4, 2).degree() == 9);
    CHECK_THROWS_AS(cc_polynomial(2, 0, 1), std::domain_error);
}

TEST_CASE("tangent-secant reduction", "[sums]") {
    CHECK(ts_sum(6, 0, 1) == Rational(32, 3));
    CHECK(ts_sum(4, 1, 0) == Rational(2));
    for (unsigned long n = 1; n <= 6; ++n)
        for (unsigned long w = 1; w <= 3; ++w)
            CHECK(ts_sum(2 * n, 1, w) == Rational(2) * cc_sum(n, 1, w, 2));
    CHECK_THROWS_AS(ts_sum(5, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ts_sum(0, 1, 1), std::domain_error);
}

TEST_CASE("identity check reports come back clean", "[sums]") {
    for (const auto& c : norlund_identity_check(6)) {
        INFO(c.id);
        CHECK(c.status == CheckStatus::pass);
    }
    for (const auto& c : c_family_identity_checks(8)) {
        INFO(c.id);
        CHECK(c.status == CheckStatus::pass);
    }
}

TEST_CASE("large-m remainder ratio", "[sums]") {
    for (unsigned long v = 2; v <= 4; ++v) {
        Rational r = gf_asymptotic_ratio_normalized(200, v);
        CHECK(r > Rational(99, 100));
        CHECK(r < Rational(101, 100));
        CHECK(gf_asymptotic_ratio(200, v).pi_pow() == 2);
    }
    CHECK(gf_asymptotic_ratio_normalized(200, 2) == Rational(199993, 200000));
}
