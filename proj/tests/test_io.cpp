#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dodgson/det.hpp"
#include "dodgson/json_io.hpp"
#include "dodgson/matrix.hpp"

using namespace dodgson;

namespace {

std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("DODGSON_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("matrix parsing skips comments and blank lines") {
    Matrix m = parse_matrix("# header\n\n1 2\n# middle\n-3 4/5\n\n");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == Scalar(1));
    CHECK(m(1, 1) == Scalar(Int(4), Int(5)));
}

TEST_CASE("matrix parsing reports position on bad input") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 1/0\n"), ParseError);

    try {
        parse_matrix("1 2\n3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("format_matrix round trips through parse_matrix") {
    Matrix m{{Scalar(Int(1), Int(2)), Scalar(-3)}, {Scalar(0), Scalar(Int(22), Int(7))}};
    CHECK(parse_matrix(format_matrix(m)) == m);
}

TEST_CASE("fixture matrices parse to their frozen determinants") {
    Matrix m3 = parse_matrix(slurp(fixture_path("mat3.txt")));
    CHECK(bareiss_det(m3) == Scalar(-3));

    Matrix id6 = parse_matrix(slurp(fixture_path("identity6.txt")));
    CHECK(bareiss_det(id6) == Scalar(1));

    Matrix m12 = parse_matrix(slurp(fixture_path("mat12.txt")));
    CHECK(bareiss_det(m12) == Scalar(Int("-797337548336")));
    CHECK(condensation_det(m12).value == Scalar(Int("-797337548336")));

    Matrix rat = parse_matrix(slurp(fixture_path("rational.txt")));
    CHECK(bareiss_det(rat) == Scalar::parse("7217/60"));
}

TEST_CASE("integer and scalar matrix conversions") {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    auto back = to_integer_matrix(m);
    REQUIRE(back.has_value());
    CHECK(to_scalar_matrix(*back) == m);

    Matrix frac{{Scalar(Int(1), Int(2))}};
    CHECK_FALSE(to_integer_matrix(frac).has_value());
}

TEST_CASE("polynomial JSON round trips with big coefficients") {
    FormalPoly p;
    p.add_term(Monomial({{1, 2}, {2, 1}}), Int("123456789012345678901234567890"));
    p.add_term(Monomial({{1, 1}, {2, 2}}), Int(-1));
    p.add_term(Monomial{}, Int(7));
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(poly_to_json(FormalPoly{})).is_zero());
    CHECK_THROWS_AS(poly_from_json("not json"), ParseError);
}

TEST_CASE("pairing JSON round trips and validates") {
    auto p = make_pairing(3, PairingClass::A, {{1, 2}, {2, 3}, {3, 1}}, {{2, 2}});
    CHECK(pairing_from_json(pairing_to_json(p)) == p);

    Pairing fx = pairing_from_json(slurp(fixture_path("pairing_a3.json")));
    CHECK(fx == p);

    CHECK_THROWS_AS(pairing_from_json(slurp(fixture_path("pairing_invalid.json"))),
                    ValidationError);
    CHECK_THROWS_AS(pairing_from_json("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(pairing_from_json("["), ParseError);
}

TEST_CASE("traces are pipeable: the output pairing can be re-read") {
    auto p = make_pairing(3, PairingClass::A, {{1, 2}, {2, 3}, {3, 1}}, {{2, 2}});
    MapResult r = map_T(p);
    std::string trace = trace_to_json(p, r.chain, r.pairing, pairing_weight(p),
                                      pairing_weight(r.pairing));
    CHECK(pairing_from_json_or_trace(trace) == r.pairing);
    CHECK(pairing_from_json_or_trace(pairing_to_json(p)) == p);
}

TEST_CASE("condensation trace JSON carries layers, repairs, and the value") {
    IntMatrix m{{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}, {Int(7), Int(8), Int(10)}};
    CondensationResult r = condensation_det(m);
    std::string json = condensation_trace_to_json(r.trace, r.value);
    CHECK(json.find("\"value\": \"-3\"") != std::string::npos);
    CHECK(json.find("\"fallback_used\": false") != std::string::npos);
    CHECK(json.find("\"layers\"") != std::string::npos);
    CHECK(json.find("\"repairs\"") != std::string::npos);
}
