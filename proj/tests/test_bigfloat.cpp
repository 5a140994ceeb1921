#include <catch2/catch_amalgamated.hpp>

#include "trigsum/bigfloat.hpp"

using namespace trigsum;

TEST_CASE("bigfloat construction and basic arithmetic", "[bigfloat]") {
    mpfr_prec_t bits = bits_for_digits(30);
    BigFloat a = BigFloat::from_long(7, bits);
    BigFloat b = BigFloat::from_rational(Rational(1, 3), bits);
    CHECK((a * b).to_string(10) == "2.333333333");
    CHECK((a + a).to_string(5) == "14.000");
    CHECK((a - a).is_zero());
    CHECK((-a).sign() < 0);
    CHECK(a.abs().to_string(3) == "7.00");
    CHECK_THROWS_AS(a / BigFloat(bits), std::domain_error);
}

TEST_CASE("bigfloat powers", "[bigfloat]") {
    mpfr_prec_t bits = bits_for_digits(30);
    BigFloat two = BigFloat::from_long(2, bits);
    CHECK(two.pow_ui(10).to_string(6) == "1024.00");
    CHECK(two.pow_ui(0).to_string(3) == "1.00");
    CHECK(BigFloat(bits).pow_ui(0).to_string(3) == "1.00");  // mpfr convention 0^0 = 1
}

TEST_CASE("bigfloat string rendering", "[bigfloat]") {
    mpfr_prec_t bits = bits_for_digits(40);
    CHECK(BigFloat(bits).to_string(10) == "0");
    BigFloat tiny = BigFloat::from_rational(Rational(1, 100000), bits);
    CHECK(tiny.to_string(4) == "1.000e-5");
    BigFloat big = BigFloat::from_rational(Rational(Integer("123456789012"), Integer(1)), bits);
    CHECK(big.to_string(12) == "123456789012");
    CHECK(big.to_string(4) == "1.235e11");
    BigFloat neg = BigFloat::from_long(-42, bits);
    CHECK(neg.to_string(4) == "-42.00");
}

TEST_CASE("bigfloat comparisons mix precisions", "[bigfloat]") {
    BigFloat lo = BigFloat::from_long(3, bits_for_digits(20));
    BigFloat hi = BigFloat::from_long(3, bits_for_digits(200));
    CHECK(lo == hi);
    CHECK(BigFloat::from_long(2, 64) < BigFloat::from_long(3, 256));
    CHECK(hi > BigFloat::from_long(2, 64));
}
