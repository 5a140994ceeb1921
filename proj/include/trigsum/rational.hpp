#pragma once

// Exact rational scalars on top of GMP, plus PiScaled = rational * pi^e.
// Every value is kept canonical: reduced fraction, positive denominator,
// and PiScaled collapses to exponent 0 when the coefficient is zero.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace trigsum {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    // gmpxx expression templates (Integer products etc.) land here
    template <typename U>
    Rational(const __gmp_expr<mpz_t, U>& e) : q_(Integer(e)) {}
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q" or "p" (decimal digits, optional leading '-').
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;  // invariant: canonical
};

// x^e with negative exponents allowed for nonzero x.
inline Rational pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x.is_zero()) {
        if (e < 0) throw std::domain_error("pow: zero base with negative exponent");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), ue);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

inline Integer pow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// A rational multiple of an integer power of pi. Addition demands matching
// exponents; a silent coercion here would mask derivation bugs where pi
// powers are supposed to cancel.
class PiScaled {
public:
    PiScaled() : coeff_(0), pi_pow_(0) {}
    PiScaled(Rational coeff, long pi_pow) : coeff_(std::move(coeff)), pi_pow_(pi_pow) {
        if (coeff_.is_zero()) pi_pow_ = 0;
    }
    explicit PiScaled(const Rational& coeff) : PiScaled(coeff, 0) {}

    const Rational& coeff() const { return coeff_; }
    long pi_pow() const { return pi_pow_; }
    bool is_zero() const { return coeff_.is_zero(); }

    friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_pow_ != b.pi_pow_)
            throw std::domain_error("PiScaled: addition with mismatched pi exponents (" +
                                    std::to_string(a.pi_pow_) + " vs " + std::to_string(b.pi_pow_) + ")");
        return PiScaled(a.coeff_ + b.coeff_, a.pi_pow_);
    }
    friend PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + PiScaled(-b.coeff_, b.pi_pow_); }
    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.coeff_ * b.coeff_, a.pi_pow_ + b.pi_pow_);
    }
    friend PiScaled operator*(const PiScaled& a, const Rational& r) { return PiScaled(a.coeff_ * r, a.pi_pow_); }
    friend PiScaled operator*(const Rational& r, const PiScaled& a) { return a * r; }
    friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
        if (b.is_zero()) throw std::domain_error("PiScaled: division by zero");
        return PiScaled(a.coeff_ / b.coeff_, a.pi_pow_ - b.pi_pow_);
    }

    friend bool operator==(const PiScaled& a, const PiScaled& b) {
        return a.coeff_ == b.coeff_ && a.pi_pow_ == b.pi_pow_;
    }
    friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

    // "p/q * pi^e" rendering used in reports and plain CLI output.
    std::string str() const {
        if (pi_pow_ == 0) return coeff_.str();
        std::string p = pi_pow_ == 1 ? "pi" : "pi^" + std::to_string(pi_pow_);
        if (coeff_ == Rational(1)) return p;
        if (coeff_ == Rational(-1)) return "-" + p;
        return coeff_.str() + "*" + p;
    }

private:
    Rational coeff_;
    long pi_pow_;
};

}  // namespace trigsum
