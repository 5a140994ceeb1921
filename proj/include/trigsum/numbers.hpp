#pragma once

// Classical number-theoretic scalars: factorials, binomials, rising
// factorials, exact gamma ratios (integer and half-integer), Bernoulli
// numbers/polynomials, and Z(k) = zeta(2k)/pi^{2k}.

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "trigsum/rational.hpp"

namespace trigsum {

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

// (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
inline Rational pochhammer_rising(const Rational& x, unsigned long n) {
    Rational r(1);
    Rational t = x;
    for (unsigned long i = 0; i < n; ++i) {
        r *= t;
        t += Rational(1);
    }
    return r;
}

// Gamma(a)/Gamma(b) for positive integers = (a-1)!/(b-1)!.
inline Rational gamma_ratio(unsigned long a, unsigned long b) {
    if (a == 0 || b == 0) throw std::domain_error("gamma_ratio: arguments must be >= 1");
    return Rational(factorial(a - 1), factorial(b - 1));
}

// Gamma(a+1/2)/Gamma(b+1/2) for nonnegative integers a, b; always rational
// since Gamma(n+1/2) = (2n)! sqrt(pi) / (4^n n!).
inline Rational gamma_half_ratio(unsigned long a, unsigned long b) {
    Integer num = factorial(2 * a) * factorial(b);
    Integer den = factorial(2 * b) * factorial(a);
    mpz_class four_b, four_a;
    mpz_ui_pow_ui(four_b.get_mpz_t(), 4, b);
    mpz_ui_pow_ui(four_a.get_mpz_t(), 4, a);
    return Rational(num * four_b, den * four_a);
}

// B_n with B_1 = -1/2, via the recurrence sum_{j<=n} C(n+1,j) B_j = 0.
// The table grows on demand; append is serialized, reads are shared.
inline Rational bernoulli_number(unsigned long n) {
    static std::vector<Rational> table{Rational(1)};
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        if (n < table.size()) return table[n];
    }
    std::unique_lock lk(mx);
    while (table.size() <= n) {
        unsigned long m = table.size();
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, static_cast<long>(j))) * table[j];
        table.push_back(-acc / Rational(Integer(m + 1)));
    }
    return table[n];
}

// Z(k) = zeta(2k)/pi^{2k} = (-1)^{k+1} B_{2k} 2^{2k-1} / (2k)!, k >= 1.
inline Rational zeta_even_ratio(unsigned long k) {
    if (k == 0) throw std::domain_error("zeta_even_ratio: k must be >= 1");
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k - 1);
    Rational r = bernoulli_number(2 * k) * Rational(two_pow, factorial(2 * k));
    return (k % 2 == 1) ? r : -r;
}

// zeta(2k) as an exact PiScaled value.
inline PiScaled zeta_even(unsigned long k) {
    return PiScaled(zeta_even_ratio(k), static_cast<long>(2 * k));
}

// B_k(x) = sum_j C(k,j) B_j x^{k-j}.
inline Rational bernoulli_poly(unsigned long k, const Rational& x) {
    Rational acc(0);
    for (unsigned long j = 0; j <= k; ++j)
        acc += Rational(binomial(k, static_cast<long>(j))) * bernoulli_number(j) * pow(x, static_cast<long>(k - j));
    return acc;
}

}  // namespace trigsum
