#pragma once

// Truncated power series over Rational. Used as the series-expansion route
// for the cosecant-power coefficients and for Bernoulli polynomials of
// higher order via their generating function, independent of the partition
// and recurrence routes.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "trigsum/numbers.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

class TruncatedSeries {
public:
    // order = inclusive truncation degree; length is order + 1.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Rational(0)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncatedSeries: need at least the constant term");
    }
    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = Rational(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n && j <= b.order(); ++j)
                if (i <= a.order()) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    // Multiplicative inverse to the same order; needs a nonzero constant term.
    TruncatedSeries reciprocal() const {
        if (c_[0].is_zero()) throw std::domain_error("TruncatedSeries: reciprocal of zero constant term");
        TruncatedSeries r(order());
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * r.c_[n - j];
            r.c_[n] = -acc / c_[0];
        }
        return r;
    }

    TruncatedSeries int_pow(unsigned long p) const {
        TruncatedSeries result = one(order());
        TruncatedSeries base = *this;
        while (p) {
            if (p & 1) result = result * base;
            if (p >>= 1) base = base * base;
        }
        return result;
    }

private:
    std::vector<Rational> c_;
};

// x/sin x as a series in y = x^2, to y^N: the reciprocal of
// sin x / x = sum_k (-1)^k y^k / (2k+1)!.
inline TruncatedSeries xcsc_series(std::size_t N) {
    TruncatedSeries sinc(N);
    for (std::size_t k = 0; k <= N; ++k) {
        Rational t(Integer(1), factorial(2 * k + 1));
        sinc[k] = (k % 2 == 0) ? t : -t;
    }
    return sinc.reciprocal();
}

// Coefficient of x^{2k} in (x/sin x)^rho. The per-rho powers are cached;
// the cache only ever grows (single-writer append, shared reads).
inline Rational gcn_by_series(unsigned long rho, std::size_t k) {
    static std::map<unsigned long, TruncatedSeries> cache;
    static std::shared_mutex mx;
    if (rho == 0) return k == 0 ? Rational(1) : Rational(0);
    {
        std::shared_lock lk(mx);
        auto it = cache.find(rho);
        if (it != cache.end() && it->second.order() >= k) return it->second[k];
    }
    std::size_t want = std::max<std::size_t>(k, 40);
    TruncatedSeries p = xcsc_series(want).int_pow(rho);
    std::unique_lock lk(mx);
    auto [it, inserted] = cache.try_emplace(rho, p);
    if (!inserted && it->second.order() < p.order()) it->second = p;
    return it->second[k];
}

// Bernoulli polynomial of order m and degree k at x:
// k! * [t^k] (t/(e^t - 1))^m e^{xt}. This is the generating-function route,
// independent of the closed forms it is used to cross-check.
inline Rational norlund_poly_value(unsigned long order_m, std::size_t degree_k, const Rational& x) {
    if (order_m == 0) throw std::domain_error("norlund_poly_value: order must be >= 1");
    TruncatedSeries base(degree_k);
    for (std::size_t n = 0; n <= degree_k; ++n)
        base[n] = bernoulli_number(n) / Rational(factorial(n));
    TruncatedSeries expx(degree_k);
    for (std::size_t n = 0; n <= degree_k; ++n)
        expx[n] = pow(x, static_cast<long>(n)) / Rational(factorial(n));
    TruncatedSeries full = base.int_pow(order_m) * expx;
    return full[degree_k] * Rational(factorial(degree_k));
}

}  // namespace trigsum
