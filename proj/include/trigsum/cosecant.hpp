#pragma once

// Generalized cosecant numbers c_{rho,k}: the coefficient of x^{2k} in
// (x/sin x)^rho, as an exact degree-k polynomial in rho. Three independent
// routes are provided (partition fold, series interpolation, even-order
// recurrence) plus a fourth evaluation path through the C(n,j) ladder;
// agreement between them is what the test suite leans on.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "trigsum/numbers.hpp"
#include "trigsum/partitions.hpp"
#include "trigsum/polynomial.hpp"
#include "trigsum/rational.hpp"
#include "trigsum/series.hpp"

namespace trigsum {

struct GcnPolynomial {
    unsigned long k = 0;
    RationalPolynomial poly;  // variable is rho

    // Structural facts that hold for every k: degree exactly k, zero
    // constant term for k >= 1 (constant 1 for k = 0), leading coefficient
    // 1/(6^k k!) from the all-ones partition, and strictly positive
    // coefficients above the constant.
    void validate() const {
        if (k == 0) {
            if (poly != RationalPolynomial::constant(Rational(1)))
                throw std::logic_error("GcnPolynomial: k=0 must be the constant 1");
            return;
        }
        if (poly.degree() != static_cast<long>(k))
            throw std::logic_error("GcnPolynomial: degree mismatch at k=" + std::to_string(k));
        if (!poly.coeff(0).is_zero())
            throw std::logic_error("GcnPolynomial: nonzero constant term at k=" + std::to_string(k));
        Integer six_pow;
        mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, k);
        if (poly.coeff(k) != Rational(Integer(1), six_pow * factorial(k)))
            throw std::logic_error("GcnPolynomial: leading coefficient mismatch at k=" + std::to_string(k));
        for (unsigned long i = 1; i <= k; ++i)
            if (poly.coeff(i).sign() <= 0)
                throw std::logic_error("GcnPolynomial: nonpositive coefficient at k=" + std::to_string(k));
    }
};

// Contribution of one partition: (-1)^{k+N} (rho)_N prod_i (1/(2i+1)!)^{n_i} / n_i!,
// with (rho)_N carried as a polynomial.
inline Rational gcn_partition_weight(const PartitionMultiplicities& p) {
    Rational w(1);
    for (auto& [part, n_i] : p.mult) {
        Integer f = factorial(2 * part + 1);
        Integer fp;
        mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), n_i);
        w *= Rational(Integer(1), fp * factorial(n_i));
    }
    return w;
}

inline GcnPolynomial gcn_partition_method(unsigned long k) {
    if (k == 0) return {0, RationalPolynomial::constant(Rational(1))};
    // rising factorials (rho)_N for N = 0..k, built incrementally
    std::vector<RationalPolynomial> rising(k + 1);
    rising[0] = RationalPolynomial::constant(Rational(1));
    for (unsigned long n = 1; n <= k; ++n)
        rising[n] = rising[n - 1] * RationalPolynomial({Rational(static_cast<long>(n) - 1), Rational(1)});

    RationalPolynomial acc;
    PartitionGenerator gen(k);
    while (auto p = gen.next()) {
        unsigned long N = p->total_parts();
        Rational w = gcn_partition_weight(*p);
        if ((k + N) % 2 == 1) w = -w;
        acc = acc + rising[N] * w;
    }
    GcnPolynomial g{k, acc};
    g.validate();
    return g;
}

// Degree-k reconstruction through the k+1 samples rho = 0..k of the series
// route; the rho = 0 sample is 1 for k = 0 and 0 otherwise.
inline GcnPolynomial gcn_by_interpolation(unsigned long k) {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(k + 1);
    for (unsigned long rho = 0; rho <= k; ++rho)
        pts.emplace_back(Rational(Integer(rho)), gcn_by_series(rho, k));
    GcnPolynomial g{k, RationalPolynomial::interpolate(pts)};
    g.validate();
    return g;
}

// Table of c_{2n,k} for 1 <= n <= n_max, 0 <= k <= k_max, seeded at n = 1 by
// c_{2,k} = 2(2k-1) Z(k) (k >= 1; the k = 0 column is 1 throughout) and
// advanced in n by
//   c_{2n+2,k+1} = ((2k+2-2n)/(2n)) ((2k+1-2n)/(2n+1)) c_{2n,k+1}
//                  + (2n/(2n+1)) c_{2n,k}.
inline std::vector<std::vector<Rational>> gcn_even_recurrence(unsigned long n_max, unsigned long k_max) {
    std::vector<std::vector<Rational>> c(n_max + 1, std::vector<Rational>(k_max + 1, Rational(0)));
    for (unsigned long k = 0; k <= k_max; ++k)
        c[1][k] = k == 0 ? Rational(1)
                         : Rational(2) * Rational(2 * static_cast<long>(k) - 1) * zeta_even_ratio(k);
    for (unsigned long n = 1; n + 1 <= n_max; ++n) {
        c[n + 1][0] = Rational(1);
        for (unsigned long k = 0; k + 1 <= k_max; ++k) {
            long kk = static_cast<long>(k), nn = static_cast<long>(n);
            Rational a = Rational(2 * kk + 2 - 2 * nn, 2 * nn) * Rational(2 * kk + 1 - 2 * nn, 2 * nn + 1);
            Rational b = Rational(2 * nn, 2 * nn + 1);
            c[n + 1][k + 1] = a * c[n][k + 1] + b * c[n][k];
        }
    }
    return c;
}

struct CLadder {
    // entries[n][j] = C(n,j), 1 <= n <= n_max, 0 <= j <= n-1
    std::vector<std::vector<Rational>> entries;

    const Rational& at(unsigned long n, unsigned long j) const { return entries.at(n).at(j); }
};

// C(1,0) = 2; C(n,j) = C(n-1,j) + ((n-1)^2/(j-1/2)) C(n-1,j-1), entries
// outside 0 <= j <= n-1 treated as zero.
inline CLadder build_c_ladder(unsigned long n_max) {
    CLadder lad;
    lad.entries.assign(n_max + 1, {});
    lad.entries[1] = {Rational(2)};
    for (unsigned long n = 2; n <= n_max; ++n) {
        lad.entries[n].assign(n, Rational(0));
        Rational nm1sq(Integer(n - 1) * Integer(n - 1));
        for (unsigned long j = 0; j < n; ++j) {
            Rational val(0);
            if (j < n - 1) val += lad.entries[n - 1][j];
            if (j >= 1) val += nm1sq / Rational(2 * static_cast<long>(j) - 1, 2) * lad.entries[n - 1][j - 1];
            lad.entries[n][j] = val;
        }
    }
    return lad;
}

// c_{2n,k} through the ladder:
//   sum_{j=0}^{n-1} [Gamma(k-j)/Gamma(k-n+1)] [Gamma(k-j+1/2)/Gamma(k-n+1/2)]
//                   [1/Gamma(n)] [Gamma(j+1/2)/Gamma(n+1/2)] C(n,j) Z(k-j).
// Only defined for k >= n, where all gamma arguments are positive.
inline Rational gcn_via_c_ladder(unsigned long n, unsigned long k) {
    if (n == 0) throw std::domain_error("gcn_via_c_ladder: n must be >= 1");
    if (k < n) throw std::domain_error("gcn_via_c_ladder: requires k >= n");
    static std::map<unsigned long, CLadder> cache;
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        if (auto it = cache.lower_bound(n); it != cache.end()) {
            Rational acc(0);
            const CLadder& lad = it->second;
            for (unsigned long j = 0; j < n; ++j)
                acc += gamma_ratio(k - j, k - n + 1) * gamma_half_ratio(k - j, k - n) *
                       Rational(Integer(1), factorial(n - 1)) * gamma_half_ratio(j, n) *
                       lad.at(n, j) * zeta_even_ratio(k - j);
            return acc;
        }
    }
    {
        std::unique_lock lk(mx);
        cache.try_emplace(n, build_c_ladder(n));
    }
    return gcn_via_c_ladder(n, k);
}

// Classical cosecant numbers (rho = 1), both printed forms asserted equal:
// c_k = (-1)^{k+1} (2^{2k}-2) B_{2k} / (2k)! = 2 (1 - 2^{1-2k}) Z(k).
inline Rational cosecant_number(unsigned long k) {
    if (k == 0) return Rational(1);
    Integer two2k;
    mpz_ui_pow_ui(two2k.get_mpz_t(), 2, 2 * k);
    Rational a = Rational(two2k - 2, factorial(2 * k)) * bernoulli_number(2 * k);
    if (k % 2 == 0) a = -a;
    Rational b = Rational(2) * (Rational(1) - Rational(Integer(2), pow(Integer(2), 2 * k))) * zeta_even_ratio(k);
    if (a != b) throw std::logic_error("cosecant_number: the two closed forms disagree at k=" + std::to_string(k));
    return a;
}

// Cached canonical polynomial (partition route); this is what downstream
// closed forms consume as c_{rho,k}.
inline const RationalPolynomial& gcn(unsigned long k) {
    static std::map<unsigned long, RationalPolynomial> cache;
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    RationalPolynomial p = gcn_partition_method(k).poly;
    std::unique_lock lk(mx);
    return cache.try_emplace(k, std::move(p)).first->second;
}

// c_{rho,k} at an even integer rho = 2v, the case the sum formulas need.
inline Rational gcn_even(unsigned long v, unsigned long k) {
    return gcn(k).eval(Rational(Integer(2 * v)));
}

}  // namespace trigsum
