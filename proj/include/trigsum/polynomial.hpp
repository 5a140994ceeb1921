#pragma once

// Dense univariate polynomials over Rational, ascending coefficient order.
// Supplies exactly what the closed forms need: ring arithmetic, Horner
// evaluation, remainder-checked division by monic linear factors, Newton
// interpolation, and content extraction for display against integer tables.

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/numbers.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPolynomial constant(const Rational& r) { return RationalPolynomial({r}); }
    // c * x^n
    static RationalPolynomial monomial(const Rational& c, std::size_t n) {
        std::vector<Rational> v(n + 1, Rational(0));
        v[n] = c;
        return RationalPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s) {
        std::vector<Rational> v = a.c_;
        for (auto& x : v) x *= s;
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) { return a * s; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) { return !(a == b); }

    // Exact quotient by (x - root); throws when the division leaves a
    // remainder, which in this codebase always signals a derivation bug.
    RationalPolynomial divide_by_linear(const Rational& root) const {
        if (is_zero()) return {};
        std::vector<Rational> q(c_.size() - 1, Rational(0));
        Rational carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + carry * root;
        }
        if (!carry.is_zero())
            throw std::domain_error("divide_by_linear: nonzero remainder " + carry.str());
        return RationalPolynomial(std::move(q));
    }

    // Unique polynomial of degree < points.size() through the given
    // (x, y) pairs, by divided differences.
    static RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
        std::size_t n = points.size();
        if (n == 0) return {};
        std::vector<Rational> dd(n);
        for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
        for (std::size_t lvl = 1; lvl < n; ++lvl)
            for (std::size_t i = n - 1; i >= lvl; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - lvl].first);
        RationalPolynomial result = constant(dd[n - 1]);
        for (std::size_t i = n - 1; i-- > 0;) {
            // result = result * (x - x_i) + dd[i]
            RationalPolynomial shifted = RationalPolynomial::monomial(Rational(1), 1) * result;
            result = shifted + constant(dd[i]) - result * points[i].first;
        }
        return result;
    }

    // content = gcd(numerators)/lcm(denominators) over nonzero coefficients;
    // dividing it out leaves an integer-coefficient polynomial with content 1.
    struct CanonicalParts {
        Rational content;
        std::size_t lowest_power = 0;     // exponent of the first nonzero coefficient
        std::vector<Integer> ints;        // coefficients from lowest_power upward
    };
    CanonicalParts canonical_parts() const {
        CanonicalParts parts;
        if (is_zero()) {
            parts.content = Rational(0);
            return parts;
        }
        std::size_t lo = 0;
        while (c_[lo].is_zero()) ++lo;
        Integer g(0), l(1);
        for (std::size_t i = lo; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            g = gcd(g, c_[i].num());
            l = lcm(l, c_[i].den());
        }
        parts.content = Rational(g, l);
        parts.lowest_power = lo;
        for (std::size_t i = lo; i < c_.size(); ++i) {
            Rational q = c_[i] / parts.content;
            if (!q.is_integer())
                throw std::logic_error("canonical_parts: non-integer after content removal");
            parts.ints.push_back(q.num());
        }
        return parts;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace trigsum
