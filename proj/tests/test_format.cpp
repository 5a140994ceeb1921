#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "trigsum/format.hpp"
#include "trigsum/golden_data.hpp"

using namespace trigsum;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// trims line breaks on both ends: the embedded literals start with the
// newline that follows the raw-string delimiter
std::string strip_newlines(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == '\n' || s[i] == '\r')) ++i;
    return s.substr(i);
}

}  // namespace

TEST_CASE("value serialization round trips", "[format]") {
    Rational r(-22, 7);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    PiScaled p(Rational(3, 4), 6);
    CHECK(pi_scaled_from_json(pi_scaled_to_json(p)) == p);
    RationalPolynomial poly({Rational(0), Rational(1, 6), Rational(5, 72)});
    json j = polynomial_to_json("family", "k", 2, "rho", poly);
    CHECK(polynomial_from_json(j) == poly);
    CHECK(j.at("family") == "family");
    CHECK(j.at("k") == 2);
    CHECK(polynomial_from_json(polynomial_to_json("f", "v", 1, "x", RationalPolynomial()))
              .is_zero());
}

TEST_CASE("embedded reference data matches the checked-in files", "[format][golden]") {
    const std::string dir = std::string(TRIGSUM_SOURCE_DIR) + "/tests/data/";
    CHECK(strip_newlines(slurp(dir + "cosecant_reference.json")) == strip_newlines(golden::kCosecantRefJson));
    CHECK(strip_newlines(slurp(dir + "halfangle_reference.json")) == strip_newlines(golden::kHalfAngleRefJson));
    CHECK(strip_newlines(slurp(dir + "fullcircle_reference.json")) == strip_newlines(golden::kFullCircleRefJson));
}

TEST_CASE("table computation shape", "[format]") {
    auto cosec = compute_table(TableKind::cosecant, 6);
    REQUIRE(cosec.size() == 7);
    CHECK(cosec.front().index == 0);
    CHECK(cosec.back().index == 6);
    auto gf = compute_table(TableKind::gf, 4);
    REQUIRE(gf.size() == 4);
    CHECK(gf.front().index == 1);
    CHECK_THROWS_AS(compute_table(TableKind::gf, 0), std::domain_error);
    CHECK_THROWS_AS(table_kind_from_string("nope"), std::invalid_argument);
    CHECK_THROWS_AS(table_format_from_string("yaml"), std::invalid_argument);
}

TEST_CASE("emitted json matches the reference files for the normalized families",
          "[format][golden]") {
    json emitted3 = json::parse(emit_table(TableKind::gf, 15, TableFormat::json));
    json golden3 = json::parse(golden::kHalfAngleRefJson);
    CHECK(emitted3 == golden3);
    json emitted4 = json::parse(emit_table(TableKind::dowker, 15, TableFormat::json));
    json golden4 = json::parse(golden::kFullCircleRefJson);
    CHECK(emitted4 == golden4);
}

TEST_CASE("emitted cosecant json is self-consistent", "[format]") {
    json t = json::parse(emit_table(TableKind::cosecant, 5, TableFormat::json));
    CHECK(t.at("family") == "cosecant");
    CHECK(t.at("var") == "rho");
    REQUIRE(t.at("rows").size() == 6);
    for (const auto& row : t.at("rows")) {
        unsigned long k = row.at("k").get<unsigned long>();
        auto parts = gcn(k).canonical_parts();
        CHECK(Rational::parse(row.at("content").get<std::string>()) == parts.content);
        CHECK(row.at("lowest_power").get<unsigned long>() == parts.lowest_power);
        REQUIRE(row.at("ints").size() == parts.ints.size());
        for (std::size_t i = 0; i < parts.ints.size(); ++i)
            CHECK(Integer(row.at("ints")[i].get<std::string>()) == parts.ints[i]);
    }
}

TEST_CASE("csv layout is one coefficient per line", "[format]") {
    std::string csv = emit_table(TableKind::dowker, 3, TableFormat::csv);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "v,zeta_ratio,power,coeff");
    std::size_t rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 1 + 2 + 3);  // degrees 0, 1, 2
}

TEST_CASE("latex output stays well formed", "[format]") {
    std::string tex = emit_table(TableKind::gf, 3, TableFormat::latex);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("\\end{tabular}") != std::string::npos);
    CHECK(tex.find("m^{2}") != std::string::npos);
    CHECK(tex.find("^2^") == std::string::npos);  // no nested exponents
}
