#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "trigsum/bigfloat.hpp"
#include "trigsum/numbers.hpp"
#include "trigsum/oracle.hpp"

using namespace trigsum;

TEST_CASE("factorial and binomial", "[numbers]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("pochhammer and gamma ratios", "[numbers]") {
    CHECK(pochhammer_rising(Rational(3), 4) == Rational(360));  // 3*4*5*6
    CHECK(pochhammer_rising(Rational(3), 0) == Rational(1));
    CHECK(pochhammer_rising(Rational(-1, 2), 2) == Rational(-1, 4));
    CHECK(gamma_ratio(7, 4) == Rational(120));  // 6!/3!
    CHECK(gamma_ratio(4, 7) == Rational(1, 120));
    CHECK(gamma_ratio(5, 5) == Rational(1));
    // Gamma(a+1/2)/Gamma(b+1/2): a=2,b=0 -> (3/2)(1/2) = 3/4
    CHECK(gamma_half_ratio(2, 0) == Rational(3, 4));
    CHECK(gamma_half_ratio(0, 2) == Rational(4, 3));
}

TEST_CASE("bernoulli numbers", "[numbers]") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (unsigned long odd = 3; odd <= 15; odd += 2) CHECK(bernoulli_number(odd).is_zero());
}

TEST_CASE("bernoulli polynomials and power sums", "[numbers]") {
    // B_3(x) = x^3 - (3/2)x^2 + (1/2)x; sum of squares below n is B_3(n)/3
    CHECK(bernoulli_poly(3, Rational(0)) == Rational(0));
    CHECK(bernoulli_poly(3, Rational(1, 2)) == Rational(0));
    for (long n = 1; n <= 10; ++n) {
        Rational sum(0);
        for (long l = 1; l < n; ++l) sum += Rational(l * l);
        CHECK(bernoulli_poly(3, Rational(n)) == Rational(3) * sum);
    }
}

TEST_CASE("even zeta ratios", "[numbers]") {
    CHECK(zeta_even_ratio(1) == Rational(1, 6));
    CHECK(zeta_even_ratio(2) == Rational(1, 90));
    CHECK(zeta_even_ratio(3) == Rational(1, 945));
    CHECK(zeta_even_ratio(6) == Rational(691, 638512875));
    CHECK(zeta_even(4).pi_pow() == 8);
    CHECK(zeta_even(4).coeff() == Rational(1, 9450));
}

namespace {

// "d.ddd..." with an integer part of one digit, as produced below by the
// frozen reference strings.
Rational rational_from_decimal(const std::string& s) {
    auto dot = s.find('.');
    REQUIRE(dot != std::string::npos);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer num(digits);
    return Rational(num, pow(Integer(10), s.size() - dot - 1));
}

}  // namespace

TEST_CASE("even zeta values against frozen high-precision references", "[numbers][oracle]") {
    // zeta(2k) to 45 significant digits, frozen from an independent
    // multiprecision evaluation.
    static const char* kZeta[] = {
        "1.64493406684822643647241516664602518921894990",
        "1.08232323371113819151600369654116790277475095",
        "1.01734306198444913971451792979092052790181749",
        "1.00407735619794433937868523850865246525896079",
        "1.00099457512781808533714595890031901700601953",
        "1.00024608655330804829863799804773967096041609",
        "1.00006124813505870482925854510513533374748170",
        "1.00001528225940865187173257148763672202323739",
        "1.00000381729326499983985646164462193973045470",
        "1.00000095396203387279611315203868344934594379",
    };
    const unsigned long D = 50;
    mpfr_prec_t bits = bits_for_digits(D);
    BigFloat tol = BigFloat::from_rational(Rational(Integer(1), pow(Integer(10), 43)), bits);
    for (unsigned long k = 1; k <= 10; ++k) {
        BigFloat ours = eval_pi_scaled(zeta_even(k), D);
        BigFloat ref = BigFloat::from_rational(rational_from_decimal(kZeta[k - 1]), bits);
        CHECK((ours - ref).abs() < tol);
    }
}
