#pragma once

// Independent numeric evaluation of the defining trigonometric sums. Angles
// k pi/(ell m) are reduced exactly as rationals before any floating-point
// work, so quadrant handling is exact and only |x| <= pi/2 reaches the
// Taylor kernels. Deliberately does not include the closed-form headers:
// callers hand in the exact values to compare against.

#include <cstdlib>
#include <string>
#include <utility>

#include "trigsum/bigfloat.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

// Default digit count for numeric checks; TRIGSUM_DIGITS overrides.
inline unsigned long default_digits() {
    if (const char* env = std::getenv("TRIGSUM_DIGITS")) {
        char* end = nullptr;
        unsigned long val = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && val >= 20 && val <= 100000) return val;
    }
    return 60;
}

// pi to D digits; both Machin-type formulas are evaluated and must agree.
inline BigFloat pi_value(unsigned long D) {
    if (D < 10) throw std::domain_error("pi_value: D must be >= 10");
    return detail::pi_cached(bits_for_digits(D));
}

namespace detail {

// sin and cos of r*pi for rational r in (0,1); r = 1/2 is returned exactly.
inline std::pair<BigFloat, BigFloat> sincos_of_pi_multiple(const Rational& r, mpfr_prec_t bits) {
    Rational half(1, 2);
    if (r.sign() <= 0 || r >= Rational(1))
        throw std::domain_error("sincos_of_pi_multiple: need 0 < r < 1");
    if (r == half) return {BigFloat::from_long(1, bits), BigFloat(bits)};
    bool flip = half < r;  // sin(pi-x) = sin x, cos(pi-x) = -cos x
    Rational rr = flip ? Rational(1) - r : r;
    BigFloat x = BigFloat::from_rational(rr, bits) * pi_cached(bits);
    BigFloat s = sin_taylor(x, bits);
    BigFloat c = cos_taylor(x, bits);
    if (flip) c = -c;
    return {std::move(s), std::move(c)};
}

}  // namespace detail

enum class RawKind { cc, ts, csc_only };

inline const char* raw_kind_name(RawKind k) {
    switch (k) {
        case RawKind::cc: return "cc";
        case RawKind::ts: return "ts";
        case RawKind::csc_only: return "csc";
    }
    return "?";
}

// Direct summation over k = 1..m-1 of
//   csc_only: csc^{2v}(k pi/(ell m))
//   cc:       cot^{2v} csc^{2w} (k pi/(ell m))
//   ts:       tan^{2v} sec^{2w} (k pi/(ell m)), k = m/2 excluded when ell = 1, m even
// with a fixed left-to-right accumulation order.
inline BigFloat raw_trig_sum(unsigned long m, unsigned long v, unsigned long w, unsigned long ell,
                             RawKind kind, unsigned long D) {
    if (m == 0 || ell == 0) throw std::domain_error("raw_trig_sum: need m >= 1, ell >= 1");
    mpfr_prec_t bits = bits_for_digits(D);
    BigFloat acc(bits);
    Integer den = Integer(ell) * Integer(m);
    for (unsigned long k = 1; k < m; ++k) {
        if (kind == RawKind::ts && ell == 1 && m % 2 == 0 && k == m / 2) continue;
        auto [s, c] = detail::sincos_of_pi_multiple(Rational(Integer(k), den), bits);
        BigFloat term(bits);
        switch (kind) {
            case RawKind::csc_only:
                term = BigFloat::from_long(1, bits) / s.pow_ui(2 * v);
                break;
            case RawKind::cc:
                term = c.pow_ui(2 * v) / s.pow_ui(2 * v + 2 * w);
                break;
            case RawKind::ts:
                if (c.is_zero() && v + w > 0)
                    throw std::domain_error("raw_trig_sum: pole (cos = 0) at k=" + std::to_string(k));
                term = s.pow_ui(2 * v) / c.pow_ui(2 * v + 2 * w);
                break;
        }
        acc = acc + term;
    }
    return acc;
}

inline BigFloat eval_pi_scaled(const PiScaled& v, unsigned long D) {
    mpfr_prec_t bits = bits_for_digits(D);
    BigFloat coeff = BigFloat::from_rational(v.coeff(), bits);
    long e = v.pi_pow();
    if (e == 0) return coeff;
    BigFloat p = detail::pi_cached(bits).pow_ui(static_cast<unsigned long>(e < 0 ? -e : e));
    return e > 0 ? coeff * p : coeff / p;
}

struct NumericVerdict {
    bool pass;
    std::string exact_decimal;
    std::string numeric_decimal;
    std::string rel_diff;
};

// Pass iff the relative difference is below 10^{-(D-10)}.
inline NumericVerdict check_exact_vs_numeric(const BigFloat& exact, const BigFloat& numeric,
                                             unsigned long D) {
    BigFloat diff = (exact - numeric).abs();
    BigFloat mag = exact.abs();
    if (mag < numeric.abs()) mag = numeric.abs();
    NumericVerdict out;
    out.exact_decimal = exact.to_string(D);
    out.numeric_decimal = numeric.to_string(D);
    if (mag.is_zero()) {
        out.pass = diff.is_zero();
        out.rel_diff = "0";
        return out;
    }
    BigFloat rel = diff / mag;
    BigFloat tol = BigFloat::from_rational(pow(Rational(1, 10), static_cast<long>(D) - 10),
                                           bits_for_digits(D));
    out.pass = rel < tol;
    out.rel_diff = rel.to_string(8);
    return out;
}

inline NumericVerdict check_exact_vs_numeric(const PiScaled& exact, const BigFloat& numeric,
                                             unsigned long D) {
    return check_exact_vs_numeric(eval_pi_scaled(exact, D), numeric, D);
}

inline NumericVerdict check_exact_vs_numeric(const Rational& exact, const BigFloat& numeric,
                                             unsigned long D) {
    return check_exact_vs_numeric(BigFloat::from_rational(exact, bits_for_digits(D)), numeric, D);
}

}  // namespace trigsum
