#pragma once

// Elementary symmetric polynomials s(v,n) of the squares {1^2, ..., (v-1)^2}:
// recurrence-built integer table, direct subset-enumeration oracle, the
// printed closed forms, and the bridge to generalized cosecant numbers
// c_{2v,i} = 2^{2i} [Gamma(2v-2i)/Gamma(2v)] s(v,i).

#include <chrono>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigsum/cosecant.hpp"
#include "trigsum/numbers.hpp"
#include "trigsum/rational.hpp"
#include "trigsum/report.hpp"

namespace trigsum {

struct SymTable {
    unsigned long v_max = 0;
    // values[v][n] = s(v,n) for 1 <= v <= v_max, 0 <= n <= v-1
    std::vector<std::vector<Integer>> values;

    const Integer& at(unsigned long v, unsigned long n) const { return values.at(v).at(n); }
};

// Built from s(1,0) = 1 by s(n+1,k+1) = s(n,k+1) + n^2 s(n,k), entries
// outside 0 <= k <= n-1 treated as zero.
inline SymTable sym_table(unsigned long v_max) {
    if (v_max == 0) throw std::domain_error("sym_table: v_max must be >= 1");
    SymTable t;
    t.v_max = v_max;
    t.values.assign(v_max + 1, {});
    t.values[1] = {Integer(1)};
    for (unsigned long n = 1; n < v_max; ++n) {
        t.values[n + 1].assign(n + 1, Integer(0));
        Integer nsq = Integer(n) * Integer(n);
        for (unsigned long k = 0; k <= n; ++k) {
            Integer val(0);
            if (k <= n - 1) val += t.values[n][k];
            if (k >= 1) val += nsq * t.values[n][k - 1];
            t.values[n + 1][k] = val;
        }
    }
    return t;
}

// Shared read-mostly table; grows on demand.
inline Integer sym(unsigned long v, unsigned long n) {
    static SymTable table = sym_table(40);
    static std::shared_mutex mx;
    if (v == 0 || n > v - 1) throw std::domain_error("sym: need v >= 1, 0 <= n <= v-1");
    {
        std::shared_lock lk(mx);
        if (v <= table.v_max) return table.at(v, n);
    }
    std::unique_lock lk(mx);
    if (v > table.v_max) table = sym_table(2 * v);
    return table.at(v, n);
}

// Direct oracle: sum over n-element subsets of {j^2 : 1 <= j <= v-1} of the
// subset products. Deliberately brute force; capped at v <= 14.
inline Integer sym_direct(unsigned long v, unsigned long n) {
    if (v == 0 || v > 14) throw std::domain_error("sym_direct: enumeration oracle needs 1 <= v <= 14");
    if (n > v - 1) throw std::domain_error("sym_direct: need 0 <= n <= v-1");
    if (n == 0) return Integer(1);
    std::vector<unsigned long> idx(n);
    for (unsigned long i = 0; i < n; ++i) idx[i] = i + 1;
    Integer acc(0);
    while (true) {
        Integer prod(1);
        for (unsigned long j : idx) prod *= Integer(j) * Integer(j);
        acc += prod;
        // next combination of n indices from 1..v-1
        long i = static_cast<long>(n) - 1;
        while (i >= 0 && idx[i] == v - 1 - (n - 1 - static_cast<unsigned long>(i))) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned long j = static_cast<unsigned long>(i) + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return acc;
}

namespace detail {
inline CheckResult make_check(const std::string& id, const std::string& desc, bool ok,
                              const std::string& lhs, const std::string& rhs, double secs = 0.0) {
    return CheckResult{id, desc, ok ? CheckStatus::pass : CheckStatus::fail, lhs, rhs, secs};
}
// partial sum H_s(v-1) = sum_{j=1}^{v-1} j^{-s}
inline Rational partial_zeta(unsigned long s, unsigned long v) {
    Rational acc(0);
    for (unsigned long j = 1; j < v; ++j)
        acc += Rational(Integer(1), pow(Integer(j), s));
    return acc;
}
}  // namespace detail

// The printed closed forms for the first and last few columns:
//   s(v,1)   = (v-1)v(2v-1)/6
//   s(v,2)   = ((5v+1)/(4*6!)) (2v-4)_5          (rising factorial)
//   s(v,v-1) = ((v-1)!)^2
//   s(v,v-2) = ((v-1)!)^2 H2                      H2 = sum_{j<v} 1/j^2
//   s(v,v-3) = ((v-1)!)^2/2 (H2^2 - H4)           H4 = sum_{j<v} 1/j^4
inline CheckReport sym_closed_form_checks(unsigned long v_max) {
    if (v_max < 4) throw std::domain_error("sym_closed_form_checks: v_max must be >= 4");
    CheckReport rep;
    auto add = [&](const std::string& id, const std::string& desc, bool ok,
                   const std::string& lhs, const std::string& rhs) {
        rep.push_back(detail::make_check(id, desc, ok, lhs, rhs));
    };
    for (unsigned long v = 2; v <= v_max; ++v) {
        Rational lhs1{sym(v, 1)};
        Rational rhs1 = Rational(Integer(v - 1) * Integer(v) * Integer(2 * v - 1), Integer(6));
        add("s_col1_v" + std::to_string(v), "s(v,1) = (v-1)v(2v-1)/6", lhs1 == rhs1, lhs1.str(), rhs1.str());
    }
    for (unsigned long v = 3; v <= v_max; ++v) {
        Rational lhs2{sym(v, 2)};
        Rational rhs2 = Rational(5 * static_cast<long>(v) + 1, 4) * Rational(Integer(1), factorial(6)) *
                        pochhammer_rising(Rational(2 * static_cast<long>(v) - 4), 5);
        add("s_col2_v" + std::to_string(v), "s(v,2) = ((5v+1)/(4*6!)) (2v-4)_5 rising",
            lhs2 == rhs2, lhs2.str(), rhs2.str());
    }
    for (unsigned long v = 2; v <= v_max; ++v) {
        Integer fsq = factorial(v - 1) * factorial(v - 1);
        Rational lhs{sym(v, v - 1)};
        add("s_last_v" + std::to_string(v), "s(v,v-1) = ((v-1)!)^2", lhs == Rational(fsq),
            lhs.str(), Rational(fsq).str());
        if (v >= 3) {
            Rational h2 = detail::partial_zeta(2, v);
            Rational rhs = Rational(fsq) * h2;
            Rational l{sym(v, v - 2)};
            add("s_secondlast_v" + std::to_string(v), "s(v,v-2) = ((v-1)!)^2 sum_{j<v} j^-2",
                l == rhs, l.str(), rhs.str());
        }
        if (v >= 4) {
            Rational h2 = detail::partial_zeta(2, v), h4 = detail::partial_zeta(4, v);
            Rational rhs = Rational(fsq) / Rational(2) * (h2 * h2 - h4);
            Rational l{sym(v, v - 3)};
            add("s_thirdlast_v" + std::to_string(v), "s(v,v-3) = ((v-1)!)^2/2 (H2^2 - H4)",
                l == rhs, l.str(), rhs.str());
        }
    }
    return rep;
}

// c_{2v,i} = 2^{2i} [Gamma(2v-2i)/Gamma(2v)] s(v,i) for i < v.
inline CheckReport bridge_identity_check(unsigned long v_max) {
    CheckReport rep;
    for (unsigned long v = 1; v <= v_max; ++v)
        for (unsigned long i = 0; i < v; ++i) {
            Integer four_i;
            mpz_ui_pow_ui(four_i.get_mpz_t(), 4, i);
            Rational lhs = gcn_even(v, i);
            Rational rhs = Rational(four_i) * gamma_ratio(2 * v - 2 * i, 2 * v) * Rational(sym(v, i));
            rep.push_back(detail::make_check(
                "bridge_v" + std::to_string(v) + "_i" + std::to_string(i),
                "c_{2v,i} = 2^{2i} Gamma(2v-2i)/Gamma(2v) s(v,i)",
                lhs == rhs, lhs.str(), rhs.str()));
        }
    return rep;
}

}  // namespace trigsum
