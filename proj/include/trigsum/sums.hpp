#pragma once

// Closed forms for the trigonometric power sums:
//   gardner_fisher(m,v)   S_{m,v}   = (pi/2m)^{2v} sum_{k<m} csc^{2v}(k pi/2m), a rational times pi^{2v}
//   dowker(m,v)           S_{m,v,1} = sum_{k<m} csc^{2v}(k pi/m), fully rational
//   cc_sum / ts_sum       cot^{2v} csc^{2w} and tan^{2v} sec^{2w} composites
// together with the polynomial families R_v, p_v, q_v, T_v, the C^v_i
// coefficients, and the Norlund-polynomial identities tying them together.
// All zeta(2k) values are carried as Z(k) = zeta(2k)/pi^{2k}, so every stored
// polynomial is over plain rationals.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigsum/cosecant.hpp"
#include "trigsum/numbers.hpp"
#include "trigsum/polynomial.hpp"
#include "trigsum/rational.hpp"
#include "trigsum/report.hpp"
#include "trigsum/series.hpp"
#include "trigsum/symfun.hpp"

namespace trigsum {

enum class SumFamily { gf_R, gf_p, dowker_q, dowker_T };

inline const char* sum_family_name(SumFamily f) {
    switch (f) {
        case SumFamily::gf_R: return "gf_R";
        case SumFamily::gf_p: return "gf_p";
        case SumFamily::dowker_q: return "dowker_q";
        case SumFamily::dowker_T: return "dowker_T";
    }
    return "?";
}

// Polynomial in x = m^2 whose pi powers have been divided out.
struct SumPolynomial {
    SumFamily family;
    unsigned long v;
    RationalPolynomial poly;
    bool zeta_norm = true;  // coefficients absorb Z(v) rather than keeping it factored
};

namespace detail {

inline Rational rat_pow2(unsigned long e) { return Rational(pow(Integer(2), e)); }
inline Rational rat_pow4(unsigned long e) { return Rational(pow(Integer(4), e)); }

// beta_{v,n} = s(v,n) (2v-2n-1)! Z(v-n) / (2v-1)!
inline Rational gf_beta(unsigned long v, unsigned long n) {
    return Rational(sym(v, n)) * Rational(factorial(2 * v - 2 * n - 1)) /
           Rational(factorial(2 * v - 1)) * zeta_even_ratio(v - n);
}

// R_v(x): (2m^2)^v S_{m,v} / ((m^2-1) pi^{2v}) as a degree v-1 polynomial in x = m^2.
inline RationalPolynomial build_gf_R(unsigned long v) {
    RationalPolynomial num;
    Rational scale = rat_pow2(v);
    for (unsigned long n = 0; n < v; ++n) {
        Rational c = scale * gf_beta(v, n);
        num = num + RationalPolynomial::monomial(c, v - n) - RationalPolynomial::constant(c);
    }
    return num.divide_by_linear(Rational(1));
}

// q_v(x): S_{m,v,1} as a degree v polynomial in x = m^2.
inline RationalPolynomial build_dowker_q(unsigned long v) {
    RationalPolynomial tot;
    for (unsigned long n = 0; n < v; ++n) {
        Rational c = rat_pow2(2 * v + 1) * gf_beta(v, n) / rat_pow4(v - n);
        tot = tot + RationalPolynomial::monomial(c, v - n) - RationalPolynomial::constant(c);
    }
    return tot;
}

template <typename Build>
inline const RationalPolynomial& cached_family(std::map<unsigned long, RationalPolynomial>& cache,
                                               std::shared_mutex& mx, unsigned long v, Build build) {
    {
        std::shared_lock lk(mx);
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
    }
    RationalPolynomial built = build(v);  // construct outside the lock
    std::unique_lock lk(mx);
    return cache.try_emplace(v, std::move(built)).first->second;
}

inline const RationalPolynomial& gf_R_poly(unsigned long v) {
    if (v == 0) throw std::domain_error("gf_R_poly: v must be >= 1");
    static std::map<unsigned long, RationalPolynomial> cache;
    static std::shared_mutex mx;
    return cached_family(cache, mx, v, build_gf_R);
}

inline const RationalPolynomial& dowker_q_poly(unsigned long v) {
    if (v == 0) throw std::domain_error("dowker_q_poly: v must be >= 1");
    static std::map<unsigned long, RationalPolynomial> cache;
    static std::shared_mutex mx;
    return cached_family(cache, mx, v, build_dowker_q);
}

inline const RationalPolynomial& dowker_T_poly(unsigned long v) {
    if (v == 0) throw std::domain_error("dowker_T_poly: v must be >= 1");
    static std::map<unsigned long, RationalPolynomial> cache;
    static std::shared_mutex mx;
    return cached_family(cache, mx, v, [](unsigned long vv) {
        return dowker_q_poly(vv).divide_by_linear(Rational(1));
    });
}

inline std::string poly_coeffs_str(const RationalPolynomial& p) {
    std::string s = "[";
    for (long i = 0; i <= p.degree(); ++i) {
        if (i) s += ", ";
        s += p.coeff(static_cast<std::size_t>(i)).str();
    }
    return s + "]";
}

}  // namespace detail

// S_{m,v} as an exact multiple of pi^{2v}; m = 1 is the empty sum.
inline PiScaled gardner_fisher(unsigned long m, unsigned long v) {
    if (m == 0 || v == 0) throw std::domain_error("gardner_fisher: need m >= 1, v >= 1");
    Rational msq{Integer(m) * Integer(m)};
    Rational inv_msq = Rational(1) / msq;
    Rational inv_v = pow(inv_msq, static_cast<long>(v));
    Rational acc(0);
    Rational inv_pow(1);
    for (unsigned long n = 0; n < v; ++n) {
        acc += detail::gf_beta(v, n) * (inv_pow - inv_v);
        inv_pow *= inv_msq;
    }
    if (m > 1) {
        // same value through the Table-3 polynomial: S-hat = (m^2-1) R_v(m^2) / (2m^2)^v
        Rational via_table = (msq - Rational(1)) * detail::gf_R_poly(v).eval(msq) /
                             pow(Rational(2) * msq, static_cast<long>(v));
        if (acc != via_table)
            throw std::logic_error("gardner_fisher: closed form and table polynomial disagree at m=" +
                                   std::to_string(m) + ", v=" + std::to_string(v));
    }
    return PiScaled(acc, 2 * static_cast<long>(v));
}

inline SumPolynomial gf_table_polynomial(unsigned long v) {
    return SumPolynomial{SumFamily::gf_R, v, detail::gf_R_poly(v)};
}

// p_v = R_{v+1}: the coefficients p_{v,j} with
// S_{m,v+1} = (2m^2)^{-(v+1)} (m^2-1) p_v(m^2). Checks the three printed
// characterizations (top coefficient, descending step, constant term).
inline SumPolynomial gf_p_coeffs(unsigned long v) {
    const RationalPolynomial& p = detail::gf_R_poly(v + 1);
    auto bail = [&](const char* what) {
        throw std::logic_error(std::string("gf_p_coeffs: ") + what + " failed at v=" + std::to_string(v));
    };
    if (p.coeff(v) != detail::rat_pow2(v + 1) * zeta_even_ratio(v + 1)) bail("top coefficient p_{v,v}");
    Rational common = detail::rat_pow2(v + 1) / Rational(factorial(2 * v + 1));
    for (unsigned long j = v; j >= 1; --j) {
        Rational step = common * Rational(sym(v + 1, v + 1 - j)) * Rational(factorial(2 * j - 1)) *
                        zeta_even_ratio(j);
        if (p.coeff(j - 1) != p.coeff(j) + step) bail("descending step p_{v,j-1} = p_{v,j} + ...");
    }
    Rational p0(0);
    for (unsigned long j = 0; j <= v; ++j)
        p0 += common * Rational(sym(v + 1, j)) * Rational(factorial(2 * v + 1 - 2 * j)) *
              zeta_even_ratio(v + 1 - j);
    if (p.coeff(0) != p0) bail("constant term p_{v,0}");
    return SumPolynomial{SumFamily::gf_p, v, p};
}

// C^v_i with S_{m,v} = sum_i C^v_i m^{-2i}; every entry is (rational) * pi^{2v}.
// The two printed expressions for the i = v entry must agree.
inline std::vector<PiScaled> gf_C_coeffs(unsigned long v) {
    if (v == 0) throw std::domain_error("gf_C_coeffs: v must be >= 1");
    std::vector<PiScaled> out;
    out.reserve(v + 1);
    for (unsigned long i = 0; i < v; ++i)
        out.emplace_back(gcn_even(v, i) * zeta_even_ratio(v - i) / detail::rat_pow4(i),
                         2 * static_cast<long>(v));
    Rational subtracted = Rational(1) / detail::rat_pow2(v);
    for (unsigned long j = 0; j < v; ++j)
        subtracted -= detail::rat_pow4(v) / detail::rat_pow4(2 * j) * gcn_even(v, j) * zeta_even_ratio(v - j);
    Rational closed = Rational(-1, 2) * (gcn_even(v, v) + Rational(1)) / detail::rat_pow4(v);
    if (subtracted != closed)
        throw std::logic_error("gf_C_coeffs: the two C^v_v expressions disagree at v=" + std::to_string(v));
    out.emplace_back(closed, 2 * static_cast<long>(v));
    return out;
}

inline Rational dowker(unsigned long m, unsigned long v) {
    if (m == 0 || v == 0) throw std::domain_error("dowker: need m >= 1, v >= 1");
    return detail::dowker_q_poly(v).eval(Rational(Integer(m) * Integer(m)));
}

// q_{v,i} coefficients, checked against all printed characterizations:
// q_{v,v} = 2 Z(v); q_{v,1} = (1/6) Gamma(v) Gamma(1/2) / Gamma(v+1/2);
// q_{v,i} = 2^{2v-2i+1} (2i-1)!/(2v-1)! s(v,v-i) Z(i) = 2 c_{2v,v-i} Z(i);
// q_{v,0} = -2 sum_n c_{2v,n} Z(v-n) (and its s-form).
inline SumPolynomial dowker_q_coeffs(unsigned long v) {
    const RationalPolynomial& q = detail::dowker_q_poly(v);
    auto bail = [&](const char* what) {
        throw std::logic_error(std::string("dowker_q_coeffs: ") + what + " failed at v=" + std::to_string(v));
    };
    if (q.coeff(v) != Rational(2) * zeta_even_ratio(v)) bail("q_{v,v} = 2 Z(v)");
    if (v >= 2) {
        // Gamma(1/2)/Gamma(v+1/2) is 1/gamma_half_ratio(v,0); rational by duplication
        Rational halfint = Rational(1, 6) * Rational(factorial(v - 1)) / gamma_half_ratio(v, 0);
        Rational expanded = Rational(1, 6) * detail::rat_pow2(2 * v - 1) *
                            Rational(factorial(v - 1) * factorial(v - 1)) / Rational(factorial(2 * v - 1));
        if (halfint != expanded || q.coeff(1) != halfint) bail("q_{v,1} half-integer gamma form");
    }
    for (unsigned long i = 1; i < v; ++i) {
        Rational s_form = detail::rat_pow2(2 * v - 2 * i + 1) * Rational(factorial(2 * i - 1)) /
                          Rational(factorial(2 * v - 1)) * Rational(sym(v, v - i)) * zeta_even_ratio(i);
        Rational c_form = Rational(2) * gcn_even(v, v - i) * zeta_even_ratio(i);
        if (q.coeff(i) != s_form || q.coeff(i) != c_form) bail("interior q_{v,i}");
    }
    Rational q0_s(0), q0_c(0);
    for (unsigned long n = 0; n < v; ++n) {
        q0_s -= detail::rat_pow2(2 * v + 1) * detail::gf_beta(v, n) / detail::rat_pow4(v - n);
        q0_c -= Rational(2) * gcn_even(v, n) * zeta_even_ratio(v - n);
    }
    if (q.coeff(0) != q0_s || q.coeff(0) != q0_c) bail("constant term q_{v,0}");
    return SumPolynomial{SumFamily::dowker_q, v, q};
}

inline SumPolynomial dowker_table_polynomial(unsigned long v) {
    return SumPolynomial{SumFamily::dowker_T, v, detail::dowker_T_poly(v)};
}

// Norlund-polynomial identities: the special values B^{(2v)}_{2n}(v) computed
// from the generating function must match both printed forms, and the
// Bernoulli reconstruction must rebuild q_v.
inline CheckReport norlund_identity_check(unsigned long v_max) {
    if (v_max == 0) throw std::domain_error("norlund_identity_check: v_max must be >= 1");
    CheckReport rep;
    auto push = [&](std::string id, std::string desc, const Rational& lhs, const Rational& rhs) {
        rep.push_back(CheckResult{std::move(id), std::move(desc),
                                  lhs == rhs ? CheckStatus::pass : CheckStatus::fail, lhs.str(),
                                  rhs.str(), 0.0});
    };
    for (unsigned long v = 1; v <= v_max; ++v) {
        for (unsigned long n = 0; n < v; ++n) {
            Rational lhs = norlund_poly_value(2 * v, 2 * n, Rational(static_cast<long>(v)));
            Rational sign((n % 2) ? -1 : 1);
            Rational rhs_s = sign * Rational(factorial(2 * n)) * Rational(factorial(2 * v - 2 * n - 1)) /
                             Rational(factorial(2 * v - 1)) * Rational(sym(v, n));
            Rational rhs_c = sign * Rational(factorial(2 * n)) / detail::rat_pow4(n) * gcn_even(v, n);
            push("norlund_inner_s_v" + std::to_string(v) + "_n" + std::to_string(n),
                 "B^{(2v)}_{2n}(v) = (-1)^n (2n)! (2v-2n-1)!/(2v-1)! s(v,n)", lhs, rhs_s);
            push("norlund_inner_c_v" + std::to_string(v) + "_n" + std::to_string(n),
                 "B^{(2v)}_{2n}(v) = (-1)^n 4^{-n} (2n)! c_{2v,n}", lhs, rhs_c);
        }
        Rational lhs_top = norlund_poly_value(2 * v, 2 * v, Rational(static_cast<long>(v)));
        Rational sign((v % 2) ? -1 : 1);
        Rational rhs_s(0), rhs_c(0);
        for (unsigned long n = 0; n < v; ++n) {
            rhs_s += Rational(factorial(2 * v - 2 * n - 1)) * Rational(sym(v, n)) * zeta_even_ratio(v - n) /
                     detail::rat_pow4(v - n);
            rhs_c += gcn_even(v, n) * zeta_even_ratio(v - n);
        }
        rhs_s *= sign * Rational(4 * static_cast<long>(v));
        rhs_c *= sign * Rational(2) * Rational(factorial(2 * v)) / detail::rat_pow4(v);
        push("norlund_top_s_v" + std::to_string(v), "B^{(2v)}_{2v}(v), zeta form", lhs_top, rhs_s);
        push("norlund_top_c_v" + std::to_string(v), "B^{(2v)}_{2v}(v), cosecant form", lhs_top, rhs_c);

        RationalPolynomial recon;
        for (unsigned long n = 0; n <= v; ++n) {
            Rational term = Rational(binomial(2 * v, static_cast<long>(2 * n))) *
                            bernoulli_number(2 * v - 2 * n) *
                            norlund_poly_value(2 * v, 2 * n, Rational(static_cast<long>(v)));
            recon = recon + RationalPolynomial::monomial(term, v - n);
        }
        Rational outer = Rational(((v - 1) % 2) ? -1 : 1) * detail::rat_pow2(2 * v) /
                         Rational(factorial(2 * v));
        recon = recon * outer;
        bool ok = recon == detail::dowker_q_poly(v);
        rep.push_back(CheckResult{"norlund_rebuild_q_v" + std::to_string(v),
                                  "Bernoulli reconstruction of q_v from B^{(2v)}_{2n}(v)",
                                  ok ? CheckStatus::pass : CheckStatus::fail,
                                  detail::poly_coeffs_str(recon),
                                  detail::poly_coeffs_str(detail::dowker_q_poly(v)), 0.0});
    }
    return rep;
}

// The c/s/zeta exchange identities: the weighted sum equal to 2^v and the
// closing identity behind the two C^v_v forms.
inline CheckReport c_family_identity_checks(unsigned long v_max) {
    CheckReport rep;
    auto push = [&](std::string id, std::string desc, const Rational& lhs, const Rational& rhs) {
        rep.push_back(CheckResult{std::move(id), std::move(desc),
                                  lhs == rhs ? CheckStatus::pass : CheckStatus::fail, lhs.str(),
                                  rhs.str(), 0.0});
    };
    for (unsigned long v = 1; v <= v_max; ++v) {
        Rational acc(0);
        for (unsigned long i = 0; i < v; ++i) {
            Rational inner = detail::rat_pow4(v - i) * gcn_even(v, i) -
                             detail::rat_pow4(i) * Rational(sym(v, i)) *
                                 Rational(factorial(2 * v - 2 * i - 1)) / Rational(factorial(2 * v - 1));
            acc += inner * detail::rat_pow4(v - i) * zeta_even_ratio(v - i);
        }
        push("csum_2v_v" + std::to_string(v), "weighted c/s difference sums to 2^v", acc,
             detail::rat_pow2(v));

        Rational lhs17c(0);
        for (unsigned long n = 0; n < v; ++n)
            lhs17c += Rational(sym(v, n)) * Rational(factorial(2 * v - 2 * n - 1)) * zeta_even_ratio(v - n);
        Rational rhs17c = Rational(1, 2) * Rational(factorial(2 * v - 1)) *
                          (gcn_even(v, v) + Rational(1)) / detail::rat_pow4(v);
        push("csum_close_v" + std::to_string(v), "zeta-weighted s column equals (c_{2v,v}+1) form",
             lhs17c, rhs17c);
    }
    return rep;
}

// sum_{k=1}^{m-1} cot^{2v}(k pi / (ell m)) csc^{2w}(k pi / (ell m)), exact.
inline Rational cc_sum(unsigned long m, unsigned long v, unsigned long w, int ell) {
    if (ell != 1 && ell != 2) throw std::invalid_argument("cc_sum: ell must be 1 or 2");
    if (m == 0) throw std::domain_error("cc_sum: m must be >= 1");
    if (v + w == 0) throw std::domain_error("cc_sum: need v + w >= 1");
    Rational x{Integer(m) * Integer(m)};
    auto csc_pow_sum = [&](unsigned long u) -> Rational {
        if (u == 0) return Rational(static_cast<long>(m) - 1);  // csc^0 summed over k
        if (ell == 2)
            return (x - Rational(1)) * detail::rat_pow2(u) * detail::gf_R_poly(u).eval(x);
        return detail::dowker_q_poly(u).eval(x);
    };
    Rational acc(0);
    for (unsigned long j = 0; j <= v; ++j) {
        Rational term = Rational(binomial(v, static_cast<long>(j))) * csc_pow_sum(w + j);
        if ((v - j) % 2) acc -= term; else acc += term;
    }
    return acc;
}

// The same composite sum as a polynomial in x = m^2 (needs w >= 1: w = 0 puts
// the constant m-1 into the mix, which is not a polynomial in m^2). Built by
// two independent routes that must agree: the table route through R/T and the
// coefficient route through C^v_i / q_{v,i}.
inline RationalPolynomial cc_polynomial(unsigned long v, unsigned long w, int ell) {
    if (ell != 1 && ell != 2) throw std::invalid_argument("cc_polynomial: ell must be 1 or 2");
    if (w == 0)
        throw std::domain_error(
            "cc_polynomial: w must be >= 1 (w = 0 contributes the non-polynomial constant m-1)");
    RationalPolynomial x_minus_1({Rational(-1), Rational(1)});
    RationalPolynomial table_route, coeff_route;
    for (unsigned long j = 0; j <= v; ++j) {
        unsigned long u = w + j;
        Rational c = Rational(binomial(v, static_cast<long>(j)));
        if ((v - j) % 2) c = -c;

        RationalPolynomial g = (ell == 2)
                                   ? x_minus_1 * (detail::gf_R_poly(u) * detail::rat_pow2(u))
                                   : x_minus_1 * detail::dowker_T_poly(u);
        table_route = table_route + g * c;

        if (ell == 2) {
            std::vector<PiScaled> C = gf_C_coeffs(u);
            RationalPolynomial inner;
            for (unsigned long i = 0; i <= u; ++i)
                inner = inner + RationalPolynomial::monomial(detail::rat_pow4(u) * C[i].coeff(), u - i);
            coeff_route = coeff_route + inner * c;
        } else {
            coeff_route = coeff_route + detail::dowker_q_poly(u) * c;
        }
    }
    if (!(table_route == coeff_route))
        throw std::logic_error("cc_polynomial: table route and coefficient route disagree at v=" +
                               std::to_string(v) + ", w=" + std::to_string(w) +
                               ", ell=" + std::to_string(ell));
    return table_route;
}

// sum over k != m/2 of tan^{2v}(k pi / m) sec^{2w}(k pi / m) for even m,
// via the half-angle reduction to the cot/csc sum. Odd m would need
// alternating-summand machinery and is rejected.
inline Rational ts_sum(unsigned long m, unsigned long v, unsigned long w) {
    if (m == 0 || m % 2 != 0)
        throw std::domain_error(
            "ts_sum: only even m is supported; odd m leads to an alternating sum with no closed form here");
    if (v + w == 0) throw std::domain_error("ts_sum: need v + w >= 1");
    return Rational(2) * cc_sum(m / 2, v, w, 2);
}

// (S_{m,v} - zeta(2v)) * 12 m^2 / (v zeta(2v-2)), kept exact. The rational
// part is the normalized remainder ratio; the full value carries pi^2.
inline Rational gf_asymptotic_ratio_normalized(unsigned long m, unsigned long v) {
    if (v < 2 || m < 2) throw std::domain_error("gf_asymptotic_ratio: need m >= 2, v >= 2");
    Rational s_hat = gardner_fisher(m, v).coeff();
    return (s_hat - zeta_even_ratio(v)) * Rational(12) * Rational(Integer(m) * Integer(m)) /
           (Rational(static_cast<long>(v)) * zeta_even_ratio(v - 1));
}

inline PiScaled gf_asymptotic_ratio(unsigned long m, unsigned long v) {
    PiScaled diff = gardner_fisher(m, v) - zeta_even(v);
    Rational scale = Rational(12) * Rational(Integer(m) * Integer(m)) / Rational(static_cast<long>(v));
    return (diff * scale) / zeta_even(v - 1);
}

}  // namespace trigsum
