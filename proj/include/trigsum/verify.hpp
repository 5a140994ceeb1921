#pragma once

// Batch verification suites behind the `verify` CLI subcommand. Each suite
// returns a CheckReport; a run is green iff no entry has status `fail`.
// Reference-table mismatches are downgraded to report-only when several
// independent computation routes agree against the reference.

#include <array>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigsum/cosecant.hpp"
#include "trigsum/golden_data.hpp"
#include "trigsum/numbers.hpp"
#include "trigsum/oracle.hpp"
#include "trigsum/report.hpp"
#include "trigsum/series.hpp"
#include "trigsum/sums.hpp"
#include "trigsum/symfun.hpp"

namespace trigsum {

enum class VerifySuite { identities, tables, norlund, asymptotic, oracle };

inline const char* verify_suite_name(VerifySuite s) {
    switch (s) {
        case VerifySuite::identities: return "identities";
        case VerifySuite::tables: return "tables";
        case VerifySuite::norlund: return "norlund";
        case VerifySuite::asymptotic: return "asymptotic";
        case VerifySuite::oracle: return "oracle";
    }
    return "?";
}

inline VerifySuite verify_suite_from_string(const std::string& s) {
    if (s == "identities") return VerifySuite::identities;
    if (s == "tables") return VerifySuite::tables;
    if (s == "norlund") return VerifySuite::norlund;
    if (s == "asymptotic") return VerifySuite::asymptotic;
    if (s == "oracle") return VerifySuite::oracle;
    throw std::invalid_argument("unknown verify suite: " + s);
}

struct VerifyOptions {
    unsigned long vmax = 0;  // 0 picks a per-suite default
    unsigned long digits = 60;
};

namespace detail {

class Stopwatch {
  public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - t_).count();
        t_ = now;
        return s;
    }

  private:
    std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

inline void append(CheckReport& dst, CheckReport src) {
    for (auto& c : src) dst.push_back(std::move(c));
}

}  // namespace detail

// Cross-route identities on the cosecant-number side: the closed forms for
// the symmetric functions, the bridge between s(v,n) and the even-argument
// coefficients, the coefficient sum identities, the first-order recurrence
// in the argument, the coefficient-level differential identity, and the
// C(n,j) ladder with its low-order closed forms.
inline CheckReport verify_identities(unsigned long vmax = 12) {
    if (vmax == 0) vmax = 12;
    if (vmax < 4) vmax = 4;
    if (vmax > 20) vmax = 20;
    CheckReport rep;
    detail::Stopwatch sw;

    detail::append(rep, sym_closed_form_checks(vmax));
    detail::append(rep, bridge_identity_check(vmax));
    detail::append(rep, c_family_identity_checks(vmax));

    // Recursive symmetric-function table against direct subset-product
    // enumeration (the latter is exponential, so capped).
    unsigned long direct_max = std::min<unsigned long>(vmax, 12);
    for (unsigned long v = 1; v <= direct_max; ++v) {
        bool ok = true;
        std::string where;
        for (unsigned long n = 0; n < v && ok; ++n) {
            if (sym(v, n) != sym_direct(v, n)) {
                ok = false;
                where = "n=" + std::to_string(n);
            }
        }
        rep.push_back(detail::make_check(
            "sym_direct_v" + std::to_string(v),
            "recursive s(" + std::to_string(v) + ",n) equals subset-product enumeration for all n",
            ok, ok ? "agree" : ("mismatch at " + where), "agree", sw.lap()));
    }

    // First-order recurrence in the argument against the partition route.
    {
        const unsigned long n_max = 6, k_max = 12;
        auto c = gcn_even_recurrence(n_max, k_max);
        for (unsigned long n = 1; n <= n_max; ++n) {
            bool ok = true;
            std::string where;
            for (unsigned long k = 0; k <= k_max && ok; ++k) {
                if (c[n][k] != gcn_even(n, k)) {
                    ok = false;
                    where = "k=" + std::to_string(k);
                }
            }
            rep.push_back(detail::make_check(
                "even_recurrence_n" + std::to_string(n),
                "argument recurrence reproduces c(" + std::to_string(2 * n) + ",k) for k<=12",
                ok, ok ? "agree" : ("mismatch at " + where), "agree", sw.lap()));
        }
    }

    // Differential identity between neighbouring even arguments, with both
    // sides taken from the power-series route:
    //   2n(2n+1) c_{2n+2,j} = (2j-2n)(2j-2n-1) c_{2n,j} + 4n^2 c_{2n,j-1}.
    for (unsigned long n = 1; n <= 6; ++n) {
        bool ok = true;
        std::string where;
        for (unsigned long j = 0; j <= 12 && ok; ++j) {
            long nn = static_cast<long>(n), jj = static_cast<long>(j);
            Rational lhs = Rational(2 * nn) * Rational(2 * nn + 1) * gcn_by_series(2 * n + 2, j);
            Rational rhs = Rational(2 * jj - 2 * nn) * Rational(2 * jj - 2 * nn - 1) *
                           gcn_by_series(2 * n, j);
            if (j >= 1) rhs += Rational(4 * nn * nn) * gcn_by_series(2 * n, j - 1);
            if (lhs != rhs) {
                ok = false;
                where = "j=" + std::to_string(j);
            }
        }
        rep.push_back(detail::make_check(
            "differential_identity_n" + std::to_string(n),
            "coefficient identity linking c(2n,.) and c(2n+2,.) holds for j<=12 at n=" +
                std::to_string(n),
            ok, ok ? "holds" : ("violated at " + where), "holds", sw.lap()));
    }

    // C(n,j) ladder: closed forms for the first columns, then the full
    // ladder route against the partition route where it is defined (k>=n).
    {
        auto lad = build_c_ladder(10);
        bool ok1 = true;
        std::string w1;
        for (unsigned long n = 2; n <= 10; ++n) {
            Rational sum_sq(0);
            for (unsigned long l = 1; l < n; ++l) sum_sq += Rational(Integer(l) * Integer(l));
            Rational bern = Rational(4, 3) * bernoulli_poly(3, Rational(static_cast<long>(n)));
            if (lad.at(n, 1) != Rational(4) * sum_sq || lad.at(n, 1) != bern) {
                ok1 = false;
                w1 = "n=" + std::to_string(n);
            }
        }
        rep.push_back(detail::make_check(
            "ladder_col1", "C(n,1) equals 4*sum of squares below n and (4/3)B_3(n) for n<=10", ok1,
            ok1 ? "agree" : ("mismatch at " + w1), "agree", sw.lap()));

        bool ok2 = true, ok3 = true;
        std::string w2, w3;
        for (unsigned long n = 4; n <= 10; ++n) {
            long nn = static_cast<long>(n);
            Rational direct2 = Rational(Integer(nn) * Integer(nn - 1) * Integer(nn - 2) *
                                            Integer(2 * nn - 1) * Integer(2 * nn - 3) *
                                            Integer(5 * nn + 1),
                                        Integer(135));
            Rational via_c2 = Rational(1, 6) * pochhammer_rising(Rational(2 * nn - 4), 4) *
                              gcn_even(n, 2);
            if (lad.at(n, 2) != direct2 || direct2 != via_c2) {
                ok2 = false;
                w2 = "n=" + std::to_string(n);
            }
            Rational via_c3 = Rational(1, 60) * pochhammer_rising(Rational(2 * nn - 6), 6) *
                              gcn_even(n, 3);
            if (n >= 4 && lad.at(n, 3) != via_c3) {
                ok3 = false;
                w3 = "n=" + std::to_string(n);
            }
        }
        rep.push_back(detail::make_check(
            "ladder_col2", "C(n,2) closed form and its c(2n,2) expression for 4<=n<=10", ok2,
            ok2 ? "agree" : ("mismatch at " + w2), "agree", sw.lap()));
        rep.push_back(detail::make_check(
            "ladder_col3", "C(n,3) expression through c(2n,3) for 4<=n<=10", ok3,
            ok3 ? "agree" : ("mismatch at " + w3), "agree", sw.lap()));

        bool ok4 = true;
        std::string w4;
        for (unsigned long n = 1; n <= 8 && ok4; ++n)
            for (unsigned long k = n; k <= n + 4 && ok4; ++k)
                if (gcn_via_c_ladder(n, k) != gcn_even(n, k)) {
                    ok4 = false;
                    w4 = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
                }
        rep.push_back(detail::make_check(
            "ladder_route", "ladder evaluation of c(2n,k) matches the partition route for k>=n",
            ok4, ok4 ? "agree" : ("mismatch at " + w4), "agree", sw.lap()));
    }

    return rep;
}

namespace detail {

struct GoldenPoly {
    Rational content;  // for the normalized families this is content/Z(v)
    unsigned long lowest = 0;
    std::vector<Integer> ints;
};

inline GoldenPoly parse_golden_row(const nlohmann::json& row, bool has_lowest) {
    GoldenPoly g;
    if (has_lowest) {
        g.content = Rational::parse(row.at("content").get<std::string>());
        g.lowest = row.at("lowest_power").get<unsigned long>();
    } else {
        g.content = Rational::parse(row.at("zeta_ratio").get<std::string>());
    }
    for (const auto& s : row.at("ints"))
        g.ints.emplace_back(Integer(s.get<std::string>()));
    return g;
}

inline std::string ints_str(const std::vector<Integer>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + "]";
}

// Positions (as powers of the variable) where two integer vectors differ.
inline std::string diff_positions(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                  unsigned long lowest, const std::string& var) {
    std::string out;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Integer av = i < a.size() ? a[i] : Integer(0);
        Integer bv = i < b.size() ? b[i] : Integer(0);
        if (av == bv) continue;
        if (!out.empty()) out += "; ";
        out += var + "^" + std::to_string(lowest + i) + ": computed " + av.get_str() +
               ", reference " + bv.get_str();
    }
    return out.empty() ? "(identical)" : out;
}

}  // namespace detail

// Computed tables against the transcribed reference data. A cosecant-row
// mismatch is downgraded to report-only when the partition, interpolation
// and power-series routes all agree with each other; the reference print is
// then the odd one out.
inline CheckReport verify_tables() {
    using nlohmann::json;
    CheckReport rep;
    detail::Stopwatch sw;

    {
        json t2 = json::parse(golden::kCosecantRefJson);
        for (const auto& row : t2.at("rows")) {
            unsigned long k = row.at("k").get<unsigned long>();
            auto ref = detail::parse_golden_row(row, true);
            auto parts = gcn(k).canonical_parts();
            bool eq = parts.content == ref.content && parts.lowest_power == ref.lowest &&
                      parts.ints == ref.ints;
            std::string id = "table_cosecant_k" + std::to_string(k);
            if (eq) {
                rep.push_back(detail::make_check(
                    id, "cosecant polynomial row k=" + std::to_string(k) + " matches the reference",
                    true, "match", "match", sw.lap()));
                continue;
            }
            // Disagreement: poll the independent routes before assigning blame.
            bool routes_agree = gcn_by_interpolation(k).poly == gcn(k);
            for (unsigned long rho = 1; rho <= 3 && routes_agree; ++rho)
                routes_agree = gcn(k).eval(Rational(static_cast<long>(rho))) ==
                               gcn_by_series(rho, k);
            CheckResult c;
            c.id = id;
            c.elapsed_sec = sw.lap();
            c.lhs = "content " + parts.content.str() + " * " + detail::ints_str(parts.ints);
            c.rhs = "content " + ref.content.str() + " * " + detail::ints_str(ref.ints);
            if (routes_agree && parts.content == ref.content && parts.lowest_power == ref.lowest) {
                c.status = CheckStatus::report_only_discrepancy;
                c.desc = "reference row k=" + std::to_string(k) +
                         " differs from three agreeing computation routes (" +
                         detail::diff_positions(parts.ints, ref.ints, parts.lowest_power, "rho") +
                         "); treating the printed reference value as erroneous";
            } else {
                c.status = CheckStatus::fail;
                c.desc = "cosecant row k=" + std::to_string(k) +
                         " disagrees with the reference and the computation routes do not " +
                         "jointly outvote it";
            }
            rep.push_back(std::move(c));
        }
    }

    auto check_normalized = [&](const char* raw, const char* tag, bool dowker_family) {
        json t = json::parse(raw);
        for (const auto& row : t.at("rows")) {
            unsigned long v = row.at("v").get<unsigned long>();
            auto ref = detail::parse_golden_row(row, false);
            const RationalPolynomial& poly =
                dowker_family ? detail::dowker_T_poly(v) : detail::gf_R_poly(v);
            auto parts = poly.canonical_parts();
            Rational ratio = parts.content / zeta_even_ratio(v);
            bool eq = ratio == ref.content && parts.lowest_power == 0 && parts.ints == ref.ints;
            std::string id = std::string("table_") + tag + "_v" + std::to_string(v);
            rep.push_back(detail::make_check(
                id,
                std::string(dowker_family ? "full-circle" : "half-angle") +
                    " sum polynomial row v=" + std::to_string(v) + " matches the reference",
                eq,
                "ratio " + ratio.str() + " * " + detail::ints_str(parts.ints),
                "ratio " + ref.content.str() + " * " + detail::ints_str(ref.ints), sw.lap()));
        }
    };
    check_normalized(golden::kHalfAngleRefJson, "gf_R", false);
    check_normalized(golden::kFullCircleRefJson, "dowker_T", true);

    return rep;
}

// Generalized-Bernoulli identities for the half-integer argument.
inline CheckReport verify_norlund(unsigned long vmax = 8) {
    if (vmax == 0) vmax = 8;
    if (vmax > 16) vmax = 16;
    return norlund_identity_check(vmax);
}

// Large-m behaviour of the half-angle sum: the normalized remainder ratio
// tends to 1. The unnormalized form that drops the pi^2 is reported (not
// failed) with its numeric value, which sits near pi^2 rather than 1.
inline CheckReport verify_asymptotic() {
    CheckReport rep;
    detail::Stopwatch sw;
    const unsigned long m = 200;
    for (unsigned long v = 2; v <= 4; ++v) {
        Rational r = gf_asymptotic_ratio_normalized(m, v);
        bool ok = r >= Rational(99, 100) && r <= Rational(101, 100);
        rep.push_back(detail::make_check(
            "asymptotic_normalized_v" + std::to_string(v),
            "normalized remainder ratio at m=200, v=" + std::to_string(v) + " is within 1% of 1",
            ok, r.str(), "within [99/100, 101/100]", sw.lap()));

        PiScaled lit = gf_asymptotic_ratio(m, v);
        CheckResult c;
        c.id = "asymptotic_unnormalized_v" + std::to_string(v);
        c.status = CheckStatus::report_only_discrepancy;
        c.desc = "the remainder ratio without the pi^2 normalization evaluates near pi^2, "
                 "not 1; the missing factor is exactly pi^2";
        c.lhs = eval_pi_scaled(lit, 30).to_string(12);
        c.rhs = "9.8696044010... (pi^2)";
        c.elapsed_sec = sw.lap();
        rep.push_back(std::move(c));
    }
    return rep;
}

// Closed forms against direct high-precision summation of the defining
// trigonometric sums.
inline CheckReport verify_oracle(unsigned long digits = 60) {
    if (digits == 0) digits = 60;
    CheckReport rep;
    detail::Stopwatch sw;

    {
        std::string wide = pi_value(40).to_string(20);
        std::string narrow = pi_value(20).to_string(20);
        rep.push_back(detail::make_check("oracle_pi_prefix",
                                         "pi at two working precisions agrees to 20 digits",
                                         wide == narrow, wide, narrow, sw.lap()));
    }

    auto run_rational = [&](const std::string& id, const std::string& desc, const Rational& exact,
                            unsigned long m, unsigned long v, unsigned long w, unsigned long ell,
                            RawKind kind) {
        BigFloat raw = raw_trig_sum(m, v, w, ell, kind, digits);
        NumericVerdict verdict = check_exact_vs_numeric(exact, raw, digits);
        rep.push_back(detail::make_check(id, desc, verdict.pass,
                                         verdict.exact_decimal.substr(0, 32),
                                         verdict.numeric_decimal.substr(0, 32), sw.lap()));
    };

    for (unsigned long m : {2ul, 3ul, 5ul, 8ul, 13ul}) {
        for (unsigned long ell : {1ul, 2ul}) {
            bool ok = true;
            std::string where, le, ln;
            for (unsigned long v = 1; v <= 8; ++v) {
                Rational exact = cc_sum(m, 0, v, ell);
                BigFloat raw = raw_trig_sum(m, v, 0, ell, RawKind::csc_only, digits);
                NumericVerdict verdict = check_exact_vs_numeric(exact, raw, digits);
                if (!verdict.pass) {
                    ok = false;
                    where = "v=" + std::to_string(v);
                    le = verdict.exact_decimal.substr(0, 32);
                    ln = verdict.numeric_decimal.substr(0, 32);
                    break;
                }
            }
            rep.push_back(detail::make_check(
                "oracle_csc_m" + std::to_string(m) + "_l" + std::to_string(ell),
                "csc power sums at m=" + std::to_string(m) + ", denominator " +
                    std::to_string(ell) + "m, v=1..8 match direct summation",
                ok, ok ? "all v agree" : (where + ": " + le), ok ? "all v agree" : (where + ": " + ln),
                sw.lap()));
        }
    }

    for (unsigned long m : {5ul, 7ul}) {
        for (auto [v, w] : std::vector<std::pair<unsigned long, unsigned long>>{
                 {1, 1}, {2, 1}, {5, 4}, {6, 3}}) {
            for (unsigned long ell : {1ul, 2ul}) {
                run_rational("oracle_cc_m" + std::to_string(m) + "_v" + std::to_string(v) + "_w" +
                                 std::to_string(w) + "_l" + std::to_string(ell),
                             "cot^2v csc^2w sum closed form vs direct summation", cc_sum(m, v, w, ell),
                             m, v, w, ell, RawKind::cc);
            }
        }
    }

    for (auto [m, v, w] : std::vector<std::array<unsigned long, 3>>{
             {6, 0, 1}, {10, 2, 3}, {14, 5, 4}}) {
        run_rational("oracle_ts_m" + std::to_string(m) + "_v" + std::to_string(v) + "_w" +
                         std::to_string(w),
                     "tan^2v sec^2w sum reduction vs direct summation", ts_sum(m, v, w), m, v, w, 1,
                     RawKind::ts);
    }

    return rep;
}

inline CheckReport run_verify_suite(VerifySuite s, const VerifyOptions& opt = {}) {
    switch (s) {
        case VerifySuite::identities: return verify_identities(opt.vmax ? opt.vmax : 12);
        case VerifySuite::tables: return verify_tables();
        case VerifySuite::norlund: return verify_norlund(opt.vmax ? opt.vmax : 8);
        case VerifySuite::asymptotic: return verify_asymptotic();
        case VerifySuite::oracle: return verify_oracle(opt.digits);
    }
    throw std::logic_error("unreachable verify suite");
}

}  // namespace trigsum
