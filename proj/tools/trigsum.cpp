// Command-line front end: cosecant-number polynomials, closed-form
// trigonometric power sums, reference tables, high-precision cross-checks
// and the batch verification suites.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
// error, 3 internal error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigsum/format.hpp"
#include "trigsum/verify.hpp"

namespace {

using nlohmann::json;
using namespace trigsum;

int g_exit = 0;

void print_json(const json& config, json result) {
    json out;
    out["config"] = config;
    out["result"] = std::move(result);
    std::cout << out.dump(2) << "\n";
}

std::string canonical_poly_str(const RationalPolynomial& p, const std::string& var) {
    auto parts = p.canonical_parts();
    if (parts.ints.empty()) return "0";
    std::string body = detail::int_poly_string(parts.ints, parts.lowest_power, var, false, false);
    if (parts.content == Rational(1)) return body;
    return "(" + parts.content.str() + ") * (" + body + ")";
}

std::string decimal_of_rational(const Rational& r, unsigned long digits) {
    return BigFloat::from_rational(r, bits_for_digits(digits)).to_string(digits);
}

json check_to_json(const CheckResult& c) {
    json j;
    j["id"] = c.id;
    j["desc"] = c.desc;
    j["status"] = status_name(c.status);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["elapsed_sec"] = c.elapsed_sec;
    return j;
}

void print_report_plain(const CheckReport& rep) {
    for (const auto& c : rep) {
        if (c.status == CheckStatus::pass) {
            std::printf("[pass] %s (%.3fs)\n", c.id.c_str(), c.elapsed_sec);
        } else {
            std::printf("[%s] %s: %s\n", status_name(c.status), c.id.c_str(), c.desc.c_str());
            std::printf("    lhs: %s\n    rhs: %s\n", c.lhs.c_str(), c.rhs.c_str());
        }
    }
}

std::pair<int, int> tally(const CheckReport& rep) {
    int fail = 0, roc = 0;
    for (const auto& c : rep) {
        if (c.status == CheckStatus::fail) ++fail;
        if (c.status == CheckStatus::report_only_discrepancy) ++roc;
    }
    return {fail, roc};
}

unsigned long pick_digits(unsigned long digits) { return digits ? digits : default_digits(); }

void setup_gcn(CLI::App& app, const bool& as_json) {
    auto opts = std::make_shared<std::pair<std::string, std::string>>();  // method, rho
    auto k = std::make_shared<unsigned long>(0);
    CLI::App* cmd = app.add_subcommand("gcn", "Cosecant-number polynomial c_k(rho) or its value");
    cmd->add_option("--k", *k, "polynomial index")->required();
    opts->first = "partition";
    cmd->add_option("--method", opts->first, "computation route")
        ->check(CLI::IsMember({"partition", "interpolation", "series", "recurrence", "ladder"}));
    cmd->add_option("--rho", opts->second, "evaluation point, as P or P/Q");
    cmd->callback([&app, &as_json, opts, k] {
        (void)app;
        const std::string& method = opts->first;
        const std::string& rho_str = opts->second;
        json config{{"command", "gcn"}, {"k", *k}, {"method", method}};
        if (!rho_str.empty()) config["rho"] = rho_str;

        bool value_only = method == "series" || method == "recurrence" || method == "ladder";
        if (value_only && rho_str.empty())
            throw std::invalid_argument("--method " + method + " computes a single value; --rho is required");

        if (rho_str.empty()) {
            const RationalPolynomial& poly = method == "interpolation"
                                                 ? gcn_by_interpolation(*k).poly
                                                 : gcn(*k);
            if (as_json) {
                print_json(config, polynomial_to_json("cosecant", "k", *k, "rho", poly));
            } else {
                std::cout << "c_" << *k << "(rho) = " << canonical_poly_str(poly, "rho") << "\n";
            }
            return;
        }

        Rational rho = Rational::parse(rho_str);
        Rational value;
        if (method == "partition") {
            value = gcn(*k).eval(rho);
        } else if (method == "interpolation") {
            value = gcn_by_interpolation(*k).poly.eval(rho);
        } else if (method == "series") {
            if (!rho.is_integer() || rho.sign() < 0)
                throw std::invalid_argument("--method series needs a nonnegative integer --rho");
            value = gcn_by_series(rho.num().get_ui(), *k);
        } else {
            if (!rho.is_integer() || rho.sign() <= 0 || rho.num() % 2 != 0)
                throw std::invalid_argument("--method " + method + " needs a positive even integer --rho");
            unsigned long n = rho.num().get_ui() / 2;
            if (method == "recurrence") {
                value = gcn_even_recurrence(n, *k)[n][*k];
            } else {
                if (*k < n)
                    throw std::invalid_argument("--method ladder needs k >= rho/2");
                value = gcn_via_c_ladder(n, *k);
            }
        }
        if (as_json) {
            print_json(config, json{{"value", value.str()}});
        } else {
            std::cout << "c_" << *k << "(" << rho.str() << ") = " << value.str() << "\n";
        }
    });
}

void setup_sym(CLI::App& app, const bool& as_json) {
    auto v = std::make_shared<unsigned long>(0);
    auto n = std::make_shared<long>(-1);
    auto check = std::make_shared<bool>(false);
    CLI::App* cmd = app.add_subcommand(
        "sym", "Symmetric functions s(v,n) of the squares 1..(v-1)^2");
    cmd->add_option("--v", *v, "number of squares plus one")->required();
    cmd->add_option("--n", *n, "which elementary symmetric function (default: all)");
    cmd->add_flag("--check", *check, "run the closed-form checks up to v");
    cmd->callback([&as_json, v, n, check] {
        json config{{"command", "sym"}, {"v", *v}};
        if (*check) {
            CheckReport rep = sym_closed_form_checks(std::max<unsigned long>(*v, 4));
            auto [fail, roc] = tally(rep);
            if (as_json) {
                json checks = json::array();
                for (const auto& c : rep) checks.push_back(check_to_json(c));
                print_json(config, json{{"checks", checks}, {"fail", fail}});
            } else {
                print_report_plain(rep);
            }
            if (fail) g_exit = 1;
            return;
        }
        if (*v == 0) throw std::invalid_argument("sym: --v must be >= 1");
        if (*n >= 0) {
            Integer val = sym(*v, static_cast<unsigned long>(*n));
            config["n"] = *n;
            if (as_json) print_json(config, json{{"value", val.get_str()}});
            else std::cout << "s(" << *v << "," << *n << ") = " << val.get_str() << "\n";
            return;
        }
        if (as_json) {
            json vals = json::array();
            for (unsigned long i = 0; i < *v; ++i) vals.push_back(sym(*v, i).get_str());
            print_json(config, json{{"values", vals}});
        } else {
            for (unsigned long i = 0; i < *v; ++i)
                std::cout << "s(" << *v << "," << i << ") = " << sym(*v, i).get_str() << "\n";
        }
    });
}

struct SumArgs {
    unsigned long m = 0, v = 0, w = 0, digits = 0;
    int ell = 1;
    unsigned long decimal = 0;
};

void emit_sum_value(const json& config, bool as_json, const std::string& label,
                    const std::string& exact, const Rational* as_rational, const PiScaled* as_pi,
                    unsigned long decimal_digits) {
    std::string dec;
    if (decimal_digits > 0) {
        if (as_pi) dec = eval_pi_scaled(*as_pi, decimal_digits).to_string(decimal_digits);
        else dec = decimal_of_rational(*as_rational, decimal_digits);
    }
    if (as_json) {
        json r{{"exact", exact}};
        if (!dec.empty()) r["decimal"] = dec;
        print_json(config, r);
    } else {
        std::cout << label << " = " << exact << "\n";
        if (!dec.empty()) std::cout << std::string(label.size(), ' ') << " = " << dec << "\n";
    }
}

void setup_sum(CLI::App& app, const bool& as_json) {
    CLI::App* sum = app.add_subcommand("sum", "Closed forms for trigonometric power sums");
    sum->require_subcommand(1);
    auto a = std::make_shared<SumArgs>();

    CLI::App* gf = sum->add_subcommand(
        "gf", "(pi/2m)^{2v} * sum of csc^{2v}(k pi / 2m), k = 1..m-1");
    gf->add_option("--m", a->m)->required();
    gf->add_option("--v", a->v)->required();
    gf->add_option("--decimal", a->decimal, "also print this many decimal digits");
    gf->callback([&as_json, a] {
        PiScaled s = gardner_fisher(a->m, a->v);
        json config{{"command", "sum gf"}, {"m", a->m}, {"v", a->v}};
        emit_sum_value(config, as_json, "S(" + std::to_string(a->m) + "," + std::to_string(a->v) + ")",
                       s.str(), nullptr, &s, a->decimal);
    });

    CLI::App* dw = sum->add_subcommand("dowker", "sum of csc^{2v}(k pi / m), k = 1..m-1");
    dw->add_option("--m", a->m)->required();
    dw->add_option("--v", a->v)->required();
    dw->add_option("--decimal", a->decimal);
    dw->callback([&as_json, a] {
        Rational s = dowker(a->m, a->v);
        json config{{"command", "sum dowker"}, {"m", a->m}, {"v", a->v}};
        emit_sum_value(config, as_json,
                       "S(" + std::to_string(a->m) + "," + std::to_string(a->v) + ",1)", s.str(),
                       &s, nullptr, a->decimal);
    });

    CLI::App* cc = sum->add_subcommand(
        "cc", "sum of cot^{2v} csc^{2w} at k pi / (ell m), k = 1..m-1");
    cc->add_option("--m", a->m)->required();
    cc->add_option("--v", a->v)->required();
    cc->add_option("--w", a->w)->required();
    cc->add_option("--ell", a->ell, "denominator multiplier, 1 or 2")->check(CLI::IsMember({1, 2}));
    cc->add_option("--decimal", a->decimal);
    cc->callback([&as_json, a] {
        Rational s = cc_sum(a->m, a->v, a->w, a->ell);
        json config{{"command", "sum cc"},
                    {"m", a->m},
                    {"v", a->v},
                    {"w", a->w},
                    {"ell", a->ell}};
        emit_sum_value(config, as_json, "CC", s.str(), &s, nullptr, a->decimal);
    });

    CLI::App* ts = sum->add_subcommand(
        "ts", "sum of tan^{2v} sec^{2w} at k pi / m for even m, k = 1..m-1, k != m/2");
    ts->add_option("--m", a->m)->required();
    ts->add_option("--v", a->v)->required();
    ts->add_option("--w", a->w)->required();
    ts->add_option("--decimal", a->decimal);
    ts->callback([&as_json, a] {
        Rational s = ts_sum(a->m, a->v, a->w);
        json config{{"command", "sum ts"}, {"m", a->m}, {"v", a->v}, {"w", a->w}};
        emit_sum_value(config, as_json, "TS", s.str(), &s, nullptr, a->decimal);
    });
}

void setup_table(CLI::App& app, const bool& as_json) {
    auto kind_str = std::make_shared<std::string>();
    auto max = std::make_shared<unsigned long>(0);
    auto fmt_str = std::make_shared<std::string>("plain");
    CLI::App* cmd = app.add_subcommand("table", "Polynomial tables for a whole family");
    cmd->add_option("kind", *kind_str, "cosecant | gf | dowker")
        ->required()
        ->check(CLI::IsMember({"cosecant", "gf", "dowker"}));
    cmd->add_option("--max", *max, "largest index")->required();
    cmd->add_option("--table-format", *fmt_str, "json | csv | latex | plain")
        ->check(CLI::IsMember({"json", "csv", "latex", "plain"}));
    cmd->callback([&as_json, kind_str, max, fmt_str] {
        TableKind kind = table_kind_from_string(*kind_str);
        TableFormat fmt = as_json ? TableFormat::json : table_format_from_string(*fmt_str);
        std::cout << emit_table(kind, *max, fmt);
    });
}

void setup_oracle(CLI::App& app, const bool& as_json) {
    auto a = std::make_shared<SumArgs>();
    auto kind_str = std::make_shared<std::string>("csc");
    CLI::App* cmd = app.add_subcommand(
        "oracle", "Closed form against direct high-precision summation");
    cmd->add_option("--m", a->m)->required();
    cmd->add_option("--v", a->v)->required();
    cmd->add_option("--w", a->w, "second exponent (cc / ts kinds)");
    cmd->add_option("--ell", a->ell, "denominator multiplier, 1 or 2")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--kind", *kind_str, "csc | cc | ts")
        ->check(CLI::IsMember({"csc", "cc", "ts"}));
    cmd->add_option("--digits", a->digits, "working decimal digits");
    cmd->callback([&as_json, a, kind_str] {
        unsigned long D = pick_digits(a->digits);
        json config{{"command", "oracle"}, {"m", a->m},      {"v", a->v},
                    {"w", a->w},           {"ell", a->ell},  {"kind", *kind_str},
                    {"digits", D}};
        NumericVerdict verdict;
        std::string exact_str;
        if (*kind_str == "csc") {
            Rational exact = cc_sum(a->m, 0, a->v, a->ell);
            exact_str = exact.str();
            verdict = check_exact_vs_numeric(
                exact, raw_trig_sum(a->m, a->v, 0, a->ell, RawKind::csc_only, D), D);
        } else if (*kind_str == "cc") {
            Rational exact = cc_sum(a->m, a->v, a->w, a->ell);
            exact_str = exact.str();
            verdict = check_exact_vs_numeric(
                exact, raw_trig_sum(a->m, a->v, a->w, a->ell, RawKind::cc, D), D);
        } else {
            Rational exact = a->ell == 2 ? cc_sum(a->m, a->v, a->w, 2) : ts_sum(a->m, a->v, a->w);
            exact_str = exact.str();
            verdict = check_exact_vs_numeric(
                exact, raw_trig_sum(a->m, a->v, a->w, a->ell, RawKind::ts, D), D);
        }
        if (as_json) {
            print_json(config, json{{"exact", exact_str},
                                    {"exact_decimal", verdict.exact_decimal},
                                    {"numeric_decimal", verdict.numeric_decimal},
                                    {"rel_diff", verdict.rel_diff},
                                    {"pass", verdict.pass}});
        } else {
            std::cout << "exact    = " << exact_str << "\n";
            std::cout << "         = " << verdict.exact_decimal << "\n";
            std::cout << "numeric  = " << verdict.numeric_decimal << "\n";
            std::cout << "rel diff = " << verdict.rel_diff << "\n";
            std::cout << "verdict: " << (verdict.pass ? "PASS" : "FAIL") << "\n";
        }
        if (!verdict.pass) g_exit = 1;
    });
}

void setup_verify(CLI::App& app, const bool& as_json) {
    auto suite_str = std::make_shared<std::string>("all");
    auto opt = std::make_shared<VerifyOptions>();
    CLI::App* cmd = app.add_subcommand("verify", "Batch verification suites");
    cmd->add_option("--suite", *suite_str, "identities | tables | norlund | asymptotic | oracle | all")
        ->check(CLI::IsMember({"identities", "tables", "norlund", "asymptotic", "oracle", "all"}));
    cmd->add_option("--vmax", opt->vmax, "depth for the identities / norlund suites");
    cmd->add_option("--digits", opt->digits, "working decimal digits for the oracle suite");
    cmd->callback([&as_json, suite_str, opt] {
        std::vector<VerifySuite> suites;
        if (*suite_str == "all") {
            suites = {VerifySuite::identities, VerifySuite::tables, VerifySuite::norlund,
                      VerifySuite::asymptotic, VerifySuite::oracle};
        } else {
            suites = {verify_suite_from_string(*suite_str)};
        }
        VerifyOptions o = *opt;
        if (o.digits == 0) o.digits = default_digits();
        json config{{"command", "verify"}, {"suite", *suite_str}, {"digits", o.digits}};
        if (o.vmax) config["vmax"] = o.vmax;

        int total_fail = 0, total_roc = 0;
        std::size_t total = 0;
        json jsuites = json::array();
        for (VerifySuite s : suites) {
            CheckReport rep = run_verify_suite(s, o);
            auto [fail, roc] = tally(rep);
            total_fail += fail;
            total_roc += roc;
            total += rep.size();
            if (as_json) {
                json checks = json::array();
                for (const auto& c : rep) checks.push_back(check_to_json(c));
                jsuites.push_back(json{{"suite", verify_suite_name(s)}, {"checks", checks}});
            } else {
                std::printf("== suite %s ==\n", verify_suite_name(s));
                print_report_plain(rep);
            }
        }
        if (as_json) {
            print_json(config, json{{"suites", jsuites},
                                    {"summary",
                                     {{"checks", total},
                                      {"fail", total_fail},
                                      {"report_only", total_roc},
                                      {"ok", total_fail == 0}}}});
        } else {
            std::printf("summary: %zu checks, %d fail, %d report-only -> %s\n", total, total_fail,
                        total_roc, total_fail == 0 ? "OK" : "FAIL");
        }
        if (total_fail) g_exit = 1;
    });
}

void setup_partitions(CLI::App& app, const bool& as_json) {
    auto k = std::make_shared<unsigned long>(0);
    CLI::App* cmd = app.add_subcommand(
        "partitions", "Partitions of k with the weights entering c_k(rho)");
    cmd->add_option("--k", *k, "number to partition")->required();
    cmd->callback([&as_json, k] {
        json config{{"command", "partitions"}, {"k", *k}};
        json rows = json::array();
        unsigned long count = 0;
        PartitionGenerator gen(*k);
        if (!as_json)
            std::printf("%-24s %4s %12s  %s\n", "partition", "N", "multinomial", "signed weight");
        while (auto p = gen.next()) {
            ++count;
            unsigned long N = p->total_parts();
            Integer multi = multinomial_factor(*p);
            Rational w = gcn_partition_weight(*p);
            if ((*k + N) % 2 == 1) w = -w;
            if (as_json) {
                rows.push_back(json{{"partition", p->str()},
                                    {"parts", N},
                                    {"multinomial", multi.get_str()},
                                    {"signed_weight", w.str()}});
            } else {
                std::printf("%-24s %4lu %12s  %s\n", p->str().c_str(), N, multi.get_str().c_str(),
                            w.str().c_str());
            }
        }
        Integer expected = partition_count(*k);
        bool count_ok = Integer(count) == expected;
        if (as_json) {
            print_json(config, json{{"rows", rows},
                                    {"count", count},
                                    {"pentagonal_count", expected.get_str()},
                                    {"count_ok", count_ok}});
        } else {
            std::printf("count = %lu, pentagonal-recurrence p(%lu) = %s\n", count, *k,
                        expected.get_str().c_str());
        }
        if (!count_ok) g_exit = 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cosecant-number polynomials and trigonometric power sums"};
    app.require_subcommand(1);
    static bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    setup_gcn(app, as_json);
    setup_sym(app, as_json);
    setup_sum(app, as_json);
    setup_table(app, as_json);
    setup_oracle(app, as_json);
    setup_verify(app, as_json);
    setup_partitions(app, as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return g_exit;
}
