#include <catch2/catch_amalgamated.hpp>

#include "trigsum/polynomial.hpp"
#include "trigsum/rational.hpp"

using namespace trigsum;

TEST_CASE("rational construction and parsing", "[rational]") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(5) == Rational(10, 2));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("0/9").is_zero());
    CHECK_THROWS_AS(Rational::parse("not-a-number"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering", "[rational]") {
    Rational a(1, 6), b(7, 360);
    CHECK(a + b == Rational(67, 360));
    CHECK(a - b == Rational(53, 360));
    CHECK(a * b == Rational(7, 2160));
    CHECK(a / b == Rational(60, 7));
    CHECK(-a == Rational(-1, 6));
    CHECK(a < Rational(1, 5));
    CHECK(Rational(2, 3) >= Rational(2, 3));
    CHECK(abs(Rational(-9, 2)) == Rational(9, 2));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational str forms", "[rational]") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-8).str() == "-8");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("gmp expression temporaries convert cleanly", "[rational]") {
    Integer m(12);
    Rational r(m * m);  // mpz expression template, not a plain mpz_class
    CHECK(r == Rational(144));
    Rational s = Rational(1) / Rational(m * m - Integer(1));
    CHECK(s == Rational(1, 143));
}

TEST_CASE("pi-scaled values enforce matching exponents", "[rational]") {
    PiScaled a(Rational(1, 8), 2), b(Rational(1, 24), 2);
    CHECK((a + b) == PiScaled(Rational(1, 6), 2));
    CHECK((a * b) == PiScaled(Rational(1, 192), 4));
    CHECK((a / b) == PiScaled(Rational(3), 0));
    CHECK_THROWS_AS(a + PiScaled(Rational(1), 4), std::domain_error);
    // zero absorbs any exponent so sums over empty ranges start clean
    CHECK((PiScaled() + a) == a);
    CHECK(PiScaled(Rational(0), 7).pi_pow() == 0);
}

TEST_CASE("pi-scaled rendering", "[rational]") {
    CHECK(PiScaled(Rational(1, 8), 2).str() == "1/8*pi^2");
    CHECK(PiScaled(Rational(1), 1).str() == "pi");
    CHECK(PiScaled(Rational(-1), 3).str() == "-pi^3");
    CHECK(PiScaled(Rational(5, 3), 0).str() == "5/3");
}

TEST_CASE("polynomial basics", "[polynomial]") {
    RationalPolynomial p({Rational(1), Rational(0), Rational(3)});  // 1 + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(13));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(9) == Rational(0));
    RationalPolynomial trimmed({Rational(5), Rational(0), Rational(0)});
    CHECK(trimmed.degree() == 0);
    CHECK(RationalPolynomial().is_zero());
    CHECK(RationalPolynomial().degree() == -1);
}

TEST_CASE("polynomial ring operations", "[polynomial]") {
    RationalPolynomial x = RationalPolynomial::monomial(Rational(1), 1);
    RationalPolynomial a = x + RationalPolynomial::constant(Rational(1));   // x + 1
    RationalPolynomial b = x - RationalPolynomial::constant(Rational(1));   // x - 1
    CHECK(a * b == RationalPolynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK((a * b).divide_by_linear(Rational(1)) == a);
    CHECK((a * b).divide_by_linear(Rational(-1)) == b);
    CHECK_THROWS_AS(a.divide_by_linear(Rational(2)), std::domain_error);
}

TEST_CASE("polynomial interpolation recovers exact coefficients", "[polynomial]") {
    RationalPolynomial p({Rational(2, 3), Rational(-1, 7), Rational(0), Rational(5)});
    std::vector<std::pair<Rational, Rational>> pts;
    for (long x = -1; x <= 2; ++x) pts.emplace_back(Rational(x), p.eval(Rational(x)));
    CHECK(RationalPolynomial::interpolate(pts) == p);
}

TEST_CASE("canonical parts extract content and integer profile", "[polynomial]") {
    // (1/360)(2x + 5x^2): gcd of numerators over lcm of denominators
    RationalPolynomial p({Rational(0), Rational(1, 180), Rational(1, 72)});
    auto parts = p.canonical_parts();
    CHECK(parts.content == Rational(1, 360));
    CHECK(parts.lowest_power == 1);
    CHECK(parts.ints == std::vector<Integer>{Integer(2), Integer(5)});

    auto zero = RationalPolynomial().canonical_parts();
    CHECK(zero.content.is_zero());
    CHECK(zero.ints.empty());

    RationalPolynomial neg({Rational(-4, 9), Rational(-2, 3)});
    auto nparts = neg.canonical_parts();
    CHECK(nparts.content * Rational(Integer(nparts.ints[0])) == Rational(-4, 9));
    CHECK(nparts.content * Rational(Integer(nparts.ints[1])) == Rational(-2, 3));
}
