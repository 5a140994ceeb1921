#include <catch2/catch_amalgamated.hpp>

#include "trigsum/cosecant.hpp"
#include "trigsum/numbers.hpp"
#include "trigsum/series.hpp"

using namespace trigsum;

TEST_CASE("three independent routes agree on the polynomials", "[cosecant]") {
    for (unsigned long k = 0; k <= 12; ++k) {
        const RationalPolynomial& part = gcn(k);
        CHECK(part == gcn_by_interpolation(k).poly);
        for (unsigned long rho = 0; rho <= 4; ++rho)
            CHECK(part.eval(Rational(static_cast<long>(rho))) == gcn_by_series(rho, k));
    }
}

TEST_CASE("structural invariants hold through k = 15", "[cosecant]") {
    for (unsigned long k = 1; k <= 15; ++k) {
        GcnPolynomial g{k, gcn(k)};
        CHECK_NOTHROW(g.validate());  // degree, constant term, leading coeff, positivity
    }
}

TEST_CASE("classical values at rho = 1", "[cosecant]") {
    CHECK(cosecant_number(0) == Rational(1));
    CHECK(cosecant_number(1) == Rational(1, 6));
    CHECK(cosecant_number(2) == Rational(7, 360));
    CHECK(cosecant_number(3) == Rational(31, 15120));
    for (unsigned long k = 0; k <= 10; ++k)
        CHECK(cosecant_number(k) == gcn(k).eval(Rational(1)));
}

TEST_CASE("even-argument seed row", "[cosecant]") {
    // c_{2,k} = 2(2k-1) Z(k), c_{2n,0} = 1
    for (unsigned long k = 1; k <= 10; ++k)
        CHECK(gcn_even(1, k) ==
              Rational(2) * Rational(2 * static_cast<long>(k) - 1) * zeta_even_ratio(k));
    for (unsigned long n = 1; n <= 8; ++n) CHECK(gcn_even(n, 0) == Rational(1));
}

TEST_CASE("argument recurrence matches the partition route", "[cosecant]") {
    auto c = gcn_even_recurrence(6, 12);
    for (unsigned long n = 1; n <= 6; ++n)
        for (unsigned long k = 0; k <= 12; ++k) CHECK(c[n][k] == gcn_even(n, k));
}

TEST_CASE("ladder first column", "[cosecant]") {
    auto lad = build_c_ladder(10);
    CHECK(lad.at(1, 0) == Rational(2));
    for (unsigned long n = 2; n <= 10; ++n) {
        Rational sum_sq(0);
        for (unsigned long l = 1; l < n; ++l) sum_sq += Rational(Integer(l) * Integer(l));
        CHECK(lad.at(n, 1) == Rational(4) * sum_sq);
        CHECK(lad.at(n, 1) == Rational(4, 3) * bernoulli_poly(3, Rational(static_cast<long>(n))));
    }
    // the halved variant is wrong from n = 3 on
    CHECK(lad.at(3, 1) != Rational(2) * Rational(1 + 4));
}

TEST_CASE("ladder low columns through cosecant coefficients", "[cosecant]") {
    auto lad = build_c_ladder(10);
    for (unsigned long n = 4; n <= 10; ++n) {
        long nn = static_cast<long>(n);
        Rational direct(Integer(nn) * Integer(nn - 1) * Integer(nn - 2) * Integer(2 * nn - 1) *
                            Integer(2 * nn - 3) * Integer(5 * nn + 1),
                        Integer(135));
        CHECK(lad.at(n, 2) == direct);
        CHECK(lad.at(n, 2) ==
              Rational(1, 6) * pochhammer_rising(Rational(2 * nn - 4), 4) * gcn_even(n, 2));
        CHECK(lad.at(n, 3) ==
              Rational(1, 60) * pochhammer_rising(Rational(2 * nn - 6), 6) * gcn_even(n, 3));
    }
    // rising orientation is essential: the falling variant breaks immediately
    long n = 5;
    Rational falling = pochhammer_rising(Rational(2 * n - 4 - 3), 4);  // (2n-7)(2n-6)(2n-5)(2n-4)
    CHECK(Rational(1, 6) * falling * gcn_even(5, 2) != build_c_ladder(5).at(5, 2));
}

TEST_CASE("ladder evaluation route", "[cosecant]") {
    for (unsigned long n = 1; n <= 6; ++n)
        for (unsigned long k = n; k <= n + 5; ++k) CHECK(gcn_via_c_ladder(n, k) == gcn_even(n, k));
    CHECK_THROWS_AS(gcn_via_c_ladder(4, 3), std::domain_error);
    CHECK_THROWS_AS(gcn_via_c_ladder(0, 3), std::domain_error);
}
