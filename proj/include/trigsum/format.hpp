#pragma once

// Serialization and table rendering: JSON forms for the scalar and polynomial
// types, and the published-table layouts (cosecant numbers, the R_v rows, the
// T_v rows) in json / csv / latex / plain text.

#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigsum/cosecant.hpp"
#include "trigsum/polynomial.hpp"
#include "trigsum/rational.hpp"
#include "trigsum/sums.hpp"

namespace trigsum {

inline nlohmann::json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected a string");
    return Rational::parse(j.get<std::string>());
}

inline nlohmann::json pi_scaled_to_json(const PiScaled& v) {
    return nlohmann::json{{"coeff", v.coeff().str()}, {"pi_pow", v.pi_pow()}};
}

inline PiScaled pi_scaled_from_json(const nlohmann::json& j) {
    return PiScaled(Rational::parse(j.at("coeff").get<std::string>()), j.at("pi_pow").get<long>());
}

// {"family":"dowker_T","v":3,"var":"msq","coeffs":["191/945","23/945","2/945"]}
// Cosecant polynomials use key "k" and var "rho".
inline nlohmann::json polynomial_to_json(const std::string& family, const std::string& index_key,
                                         unsigned long index, const std::string& var,
                                         const RationalPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long i = 0; i <= p.degree(); ++i)
        coeffs.push_back(p.coeff(static_cast<std::size_t>(i)).str());
    if (p.is_zero()) coeffs.push_back("0");
    return nlohmann::json{{"family", family}, {index_key, index}, {"var", var}, {"coeffs", coeffs}};
}

inline RationalPolynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return RationalPolynomial(coeffs);
}

enum class TableKind { cosecant, gf, dowker };
enum class TableFormat { json, csv, latex, plain };

inline TableKind table_kind_from_string(const std::string& s) {
    if (s == "cosecant") return TableKind::cosecant;
    if (s == "gf") return TableKind::gf;
    if (s == "dowker") return TableKind::dowker;
    throw std::invalid_argument("unknown table kind '" + s + "'");
}

inline TableFormat table_format_from_string(const std::string& s) {
    if (s == "json") return TableFormat::json;
    if (s == "csv") return TableFormat::csv;
    if (s == "latex") return TableFormat::latex;
    if (s == "plain") return TableFormat::plain;
    throw std::invalid_argument("unknown table format '" + s + "'");
}

struct TableRow {
    unsigned long index = 0;
    RationalPolynomial::CanonicalParts parts;
    Rational zeta_ratio;  // parts.content / Z(v); unused for the cosecant table
};

inline TableRow compute_table_row(TableKind kind, unsigned long idx) {
    TableRow row;
    row.index = idx;
    switch (kind) {
        case TableKind::cosecant:
            row.parts = gcn(idx).canonical_parts();
            break;
        case TableKind::gf:
            row.parts = detail::gf_R_poly(idx).canonical_parts();
            row.zeta_ratio = row.parts.content / zeta_even_ratio(idx);
            break;
        case TableKind::dowker:
            row.parts = detail::dowker_T_poly(idx).canonical_parts();
            row.zeta_ratio = row.parts.content / zeta_even_ratio(idx);
            break;
    }
    return row;
}

// Rows are independent; compute them in parallel, assemble in index order.
inline std::vector<TableRow> compute_table(TableKind kind, unsigned long max_index) {
    unsigned long first = (kind == TableKind::cosecant) ? 0 : 1;
    if (kind != TableKind::cosecant && max_index == 0)
        throw std::domain_error("compute_table: max must be >= 1 for this table");
    std::vector<std::future<TableRow>> futs;
    for (unsigned long i = first; i <= max_index; ++i)
        futs.push_back(std::async(std::launch::async, compute_table_row, kind, i));
    std::vector<TableRow> rows;
    rows.reserve(futs.size());
    for (auto& f : futs) rows.push_back(f.get());
    return rows;
}

namespace detail {

inline const char* table_family_name(TableKind k) {
    switch (k) {
        case TableKind::cosecant: return "cosecant";
        case TableKind::gf: return "gf_R";
        case TableKind::dowker: return "dowker_T";
    }
    return "?";
}

inline std::string latex_frac(const Rational& r) {
    if (r.is_integer()) return r.num().get_str();
    std::string num = r.num().get_str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num.erase(0, 1);
    std::string body = "\\frac{" + num + "}{" + r.den().get_str() + "}";
    return neg ? "-" + body : body;
}

// i_0 var^{e0} + i_1 var^{e0+1} + ...; descending reverses the walk.
// exp_scale multiplies every printed exponent (var = m, scale = 2 renders
// the polynomial in m^2 without nesting carets).
inline std::string int_poly_string(const std::vector<Integer>& ints, unsigned long lowest,
                                   const std::string& var, bool descending, bool latex,
                                   unsigned long exp_scale = 1) {
    std::ostringstream os;
    auto one_term = [&](std::size_t pos, bool first) {
        unsigned long e = (lowest + pos) * exp_scale;
        const Integer& c = ints[pos];
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer a = c >= 0 ? c : Integer(-c);
        bool coeff_one = (a == 1) && e > 0;
        if (!coeff_one) os << a.get_str();
        if (e > 0) {
            if (latex) {
                os << (coeff_one ? "" : " ") << var;
                if (e > 1) os << "^{" << e << "}";
            } else {
                os << (coeff_one ? "" : " ") << var;
                if (e > 1) os << "^" << e;
            }
        }
    };
    bool first = true;
    if (!descending) {
        for (std::size_t p = 0; p < ints.size(); ++p, first = false) one_term(p, first);
    } else {
        for (std::size_t p = ints.size(); p-- > 0; first = false) one_term(p, first);
    }
    return os.str();
}

}  // namespace detail

inline std::string emit_table(TableKind kind, unsigned long max_index, TableFormat fmt) {
    std::vector<TableRow> rows = compute_table(kind, max_index);
    bool cosec = (kind == TableKind::cosecant);
    const char* var_plain = cosec ? "rho" : "x";
    std::ostringstream os;
    switch (fmt) {
        case TableFormat::json: {
            nlohmann::json out;
            out["family"] = detail::table_family_name(kind);
            out["var"] = cosec ? "rho" : "msq";
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json jr;
                if (cosec) {
                    jr["k"] = r.index;
                    jr["content"] = r.parts.content.str();
                    jr["lowest_power"] = r.parts.lowest_power;
                } else {
                    jr["v"] = r.index;
                    jr["zeta_ratio"] = r.zeta_ratio.str();
                }
                nlohmann::json ints = nlohmann::json::array();
                for (const auto& i : r.parts.ints) ints.push_back(i.get_str());
                jr["ints"] = ints;
                jrows.push_back(std::move(jr));
            }
            out["rows"] = std::move(jrows);
            return out.dump(2) + "\n";
        }
        case TableFormat::csv: {
            os << (cosec ? "k,content,power,coeff\n" : "v,zeta_ratio,power,coeff\n");
            for (const auto& r : rows)
                for (std::size_t p = 0; p < r.parts.ints.size(); ++p)
                    os << r.index << ","
                       << (cosec ? r.parts.content.str() : r.zeta_ratio.str()) << ","
                       << (r.parts.lowest_power + p) << "," << r.parts.ints[p].get_str() << "\n";
            return os.str();
        }
        case TableFormat::latex: {
            os << "\\begin{tabular}{r l}\n";
            if (kind == TableKind::cosecant)
                os << "$k$ & $c_{\\rho,k}$ \\\\\n\\hline\n";
            else if (kind == TableKind::gf)
                os << "$v$ & $(2m^2)^v S_{m,v}/(m^2-1)$ \\\\\n\\hline\n";
            else
                os << "$v$ & $S_{m,v,1}/(m^2-1)$ \\\\\n\\hline\n";
            for (const auto& r : rows) {
                os << r.index << " & $";
                if (cosec) {
                    if (!(r.parts.content == Rational(1)))
                        os << detail::latex_frac(r.parts.content) << "\\,";
                    if (r.parts.ints.size() > 1 || !(r.parts.content == Rational(1))) os << "\\left(";
                    os << detail::int_poly_string(r.parts.ints, r.parts.lowest_power, "\\rho", false, true);
                    if (r.parts.ints.size() > 1 || !(r.parts.content == Rational(1))) os << "\\right)";
                } else {
                    bool desc = (kind == TableKind::dowker);
                    if (!(r.zeta_ratio == Rational(1))) os << detail::latex_frac(r.zeta_ratio) << "\\,";
                    os << "\\zeta(" << 2 * r.index << ")";
                    if (desc) os << "\\pi^{-" << 2 * r.index << "}";
                    os << "\\left(";
                    os << detail::int_poly_string(r.parts.ints, 0, "m", desc, true, 2);
                    os << "\\right)";
                }
                os << "$ \\\\\n";
            }
            os << "\\end{tabular}\n";
            return os.str();
        }
        case TableFormat::plain: {
            for (const auto& r : rows) {
                if (cosec) {
                    os << "k=" << r.index << ": ";
                    if (!(r.parts.content == Rational(1))) os << "(" << r.parts.content.str() << ") * ";
                    os << "(" << detail::int_poly_string(r.parts.ints, r.parts.lowest_power, var_plain, false, false)
                       << ")\n";
                } else {
                    bool desc = (kind == TableKind::dowker);
                    os << "v=" << r.index << ": ";
                    if (!(r.zeta_ratio == Rational(1))) os << "(" << r.zeta_ratio.str() << ") * ";
                    os << (desc ? "zeta(" : "zeta(") << 2 * r.index << ")";
                    if (desc) os << "/pi^" << 2 * r.index;
                    os << " * ("
                       << detail::int_poly_string(r.parts.ints, 0, var_plain, desc, false)
                       << ")   [x = m^2]\n";
                }
            }
            return os.str();
        }
    }
    throw std::logic_error("emit_table: unreachable");
}

}  // namespace trigsum
