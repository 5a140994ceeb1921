#pragma once

// Minimal arbitrary-precision float on top of mpfr arithmetic. Only ring
// operations and integer powers come from mpfr; pi, atan, sin and cos are
// computed here from their series so the numeric cross-checks do not share
// code with anything they are checking.

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "trigsum/rational.hpp"

namespace trigsum {

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_ui(unsigned long e) const {
        BigFloat r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    // Decimal string with the given number of significant digits; plain
    // fixed-point notation whenever the decimal point falls inside the
    // digit string, scientific otherwise.
    std::string to_string(std::size_t digits) const {
        if (is_zero()) return "0";
        mpfr_exp_t e;
        char* raw_str = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(raw_str);
        mpfr_free_str(raw_str);
        bool neg = !mant.empty() && mant[0] == '-';
        if (neg) mant.erase(0, 1);
        std::string out;
        if (e >= 1 && static_cast<std::size_t>(e) <= digits) {
            out = mant.substr(0, static_cast<std::size_t>(e));
            if (static_cast<std::size_t>(e) < mant.size()) out += "." + mant.substr(static_cast<std::size_t>(e));
        } else {
            out = mant.substr(0, 1);
            if (mant.size() > 1) out += "." + mant.substr(1);
            out += "e" + std::to_string(static_cast<long>(e) - 1);
        }
        return neg ? "-" + out : out;
    }

  private:
    mpfr_t v_;
};

// Working precision for D requested decimal digits: 15 guard digits plus
// headroom so intermediate rounding never eats into the request.
inline mpfr_prec_t bits_for_digits(unsigned long D) {
    return static_cast<mpfr_prec_t>(std::ceil((D + 15) * 3.3219280948873623)) + 16;
}

namespace detail {

// atan(1/n) by its Taylor series; n >= 2 so every term shrinks by >= 4x.
inline BigFloat atan_inv_ui(unsigned long n, mpfr_prec_t bits) {
    if (n < 2) throw std::domain_error("atan_inv_ui: n must be >= 2");
    BigFloat acc(bits);
    mpfr_t term, scaled, nsq;
    mpfr_init2(term, bits);
    mpfr_init2(scaled, bits);
    mpfr_init2(nsq, bits);
    mpfr_set_ui(nsq, n, MPFR_RNDN);
    mpfr_mul_ui(nsq, nsq, n, MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_div_ui(term, term, n, MPFR_RNDN);  // 1/n
    unsigned long k = 0;
    mpfr_exp_t cutoff = -(bits + 8);
    while (true) {
        mpfr_div_ui(scaled, term, 2 * k + 1, MPFR_RNDN);
        if (k % 2 == 0)
            mpfr_add(acc.raw(), acc.raw(), scaled, MPFR_RNDN);
        else
            mpfr_sub(acc.raw(), acc.raw(), scaled, MPFR_RNDN);
        if (!mpfr_zero_p(term) && mpfr_get_exp(term) < cutoff) break;
        mpfr_div(term, term, nsq, MPFR_RNDN);
        ++k;
        if (k > static_cast<unsigned long>(bits)) break;  // unreachable safety stop
    }
    mpfr_clear(term);
    mpfr_clear(scaled);
    mpfr_clear(nsq);
    return acc;
}

inline BigFloat pi_machin(mpfr_prec_t bits) {
    return BigFloat::from_long(16, bits) * atan_inv_ui(5, bits) -
           BigFloat::from_long(4, bits) * atan_inv_ui(239, bits);
}

inline BigFloat pi_gauss(mpfr_prec_t bits) {
    return BigFloat::from_long(48, bits) * atan_inv_ui(18, bits) +
           BigFloat::from_long(32, bits) * atan_inv_ui(57, bits) -
           BigFloat::from_long(20, bits) * atan_inv_ui(239, bits);
}

inline const BigFloat& pi_cached(mpfr_prec_t bits) {
    static std::map<mpfr_prec_t, BigFloat> cache;
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        auto it = cache.find(bits);
        if (it != cache.end()) return it->second;
    }
    BigFloat machin = pi_machin(bits);
    BigFloat gauss = pi_gauss(bits);
    BigFloat diff = (machin - gauss).abs();
    if (!diff.is_zero() && mpfr_get_exp(diff.raw()) > -(bits - 6))
        throw std::logic_error("pi_cached: the two arctangent formulas disagree");
    std::unique_lock lk(mx);
    return cache.try_emplace(bits, std::move(machin)).first->second;
}

// sin and cos by Taylor series, intended for |x| <= pi/2 (+ rounding slack).
inline BigFloat sin_taylor(const BigFloat& x, mpfr_prec_t bits) {
    BigFloat acc(bits);
    mpfr_t term, xsq;
    mpfr_init2(term, bits);
    mpfr_init2(xsq, bits);
    mpfr_mul(xsq, x.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(term, x.raw(), MPFR_RNDN);
    mpfr_exp_t cutoff = -(bits + 8);
    for (unsigned long k = 1;; ++k) {
        if (k % 2 == 1)
            mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
        else
            mpfr_sub(acc.raw(), acc.raw(), term, MPFR_RNDN);
        if (mpfr_zero_p(term) || mpfr_get_exp(term) < cutoff) break;
        mpfr_mul(term, term, xsq, MPFR_RNDN);
        mpfr_div_ui(term, term, (2 * k) * (2 * k + 1), MPFR_RNDN);
    }
    mpfr_clear(term);
    mpfr_clear(xsq);
    return acc;
}

inline BigFloat cos_taylor(const BigFloat& x, mpfr_prec_t bits) {
    BigFloat acc(bits);
    mpfr_t term, xsq;
    mpfr_init2(term, bits);
    mpfr_init2(xsq, bits);
    mpfr_mul(xsq, x.raw(), x.raw(), MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_exp_t cutoff = -(bits + 8);
    for (unsigned long k = 1;; ++k) {
        if (k % 2 == 1)
            mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
        else
            mpfr_sub(acc.raw(), acc.raw(), term, MPFR_RNDN);
        if (mpfr_zero_p(term) || mpfr_get_exp(term) < cutoff) break;
        mpfr_mul(term, term, xsq, MPFR_RNDN);
        mpfr_div_ui(term, term, (2 * k - 1) * (2 * k), MPFR_RNDN);
    }
    mpfr_clear(term);
    mpfr_clear(xsq);
    return acc;
}

}  // namespace detail

}  // namespace trigsum
