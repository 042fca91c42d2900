// File formats: round trips, canonical emission, malformed input rejection.

#include <catch2/catch_amalgamated.hpp>

#include "polymink/generators.hpp"
#include "polymink/io.hpp"

using namespace polymink;

namespace {

const FileFormat kAllFormats[] = {FileFormat::CddExt, FileFormat::CddIne,
                                  FileFormat::Json};

void check_round_trip(const ExactPolytope& p) {
    for (auto fmt : kAllFormats) {
        auto text = emit_polytope_file(p, fmt);
        auto q = parse_polytope_file(text);
        REQUIRE(q.vertices == p.vertices);
        REQUIRE(emit_polytope_file(q, fmt) == text); // byte-identical re-emission
    }
}

} // namespace

TEST_CASE("round trips are exact on fixtures and seeded polytopes", "[io]") {
    check_round_trip(cube(3));
    check_round_trip(simplex(4));
    check_round_trip(rational_polygon(7));
    check_round_trip(segment_polytope({1, -2, 3})); // non-full-dimensional
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        check_round_trip(random_polytope(2 + seed % 3, 7, 9, seed));
}

TEST_CASE("the V-file for the unit square parses to 4 vertices", "[io]") {
    std::string text = "V-representation\nbegin\n 4 3 rational\n"
                       " 1 0 0\n 1 1 0\n 1 0 1\n 1 1 1\nend\n";
    auto p = parse_polytope_file(text);
    REQUIRE(p.f0() == 4);
    REQUIRE(p.intrinsic_dim == 2);
}

TEST_CASE("the H-file for the cube parses to 8 vertices", "[io]") {
    // rows "b a1 a2 a3" meaning b + a.x >= 0: the unit cube
    std::string text = "H-representation\nbegin\n 6 4 rational\n"
                       " 0 1 0 0\n 0 0 1 0\n 0 0 0 1\n"
                       " 1 -1 0 0\n 1 0 -1 0\n 1 0 0 -1\nend\n";
    auto p = parse_polytope_file(text);
    REQUIRE(p.f0() == 8);
    REQUIRE(p.vertices == cube(3).vertices);
}

TEST_CASE("comments and rational entries are accepted", "[io]") {
    std::string text = "* generated fixture\nV-representation\n* counts below\n"
                       "begin\n 3 3 rational\n 1 0 0\n 1 1/2 0\n 1 0 2/3\nend\n";
    auto p = parse_polytope_file(text);
    REQUIRE(p.f0() == 3);
    REQUIRE(p.vertices[1] == QVector{0, Rational(2, 3)});
}

TEST_CASE("malformed inputs raise ParseError with diagnostics", "[io]") {
    REQUIRE_THROWS_AS(parse_polytope_file("V-representation\nbegin\n 1 3 rational\n"
                                          " 1 1/0 2\nend\n"),
                      ParseError);
    REQUIRE_THROWS_AS(parse_polytope_file("V-representation\nbegin\n 1 3 rational\n"
                                          " 1 a b\nend\n"),
                      ParseError);
    REQUIRE_THROWS_AS(parse_polytope_file("V-representation\nbegin\n 2 3 rational\n"
                                          " 1 0 0\nend\n"),
                      ParseError); // row count mismatch
    REQUIRE_THROWS_AS(parse_polytope_file("nonsense\n"), ParseError);
    REQUIRE_THROWS_AS(parse_polytope_file("{\"representation\": \"W\"}"), ParseError);
    REQUIRE_THROWS_AS(parse_polytope_file("{not json"), ParseError);
}

TEST_CASE("H-representation emission uses the cdd offset convention", "[io]") {
    auto p = cube(2);
    auto text = emit_polytope_file(p, FileFormat::CddIne);
    auto q = parse_polytope_file(text);
    REQUIRE(q.vertices == p.vertices);
    // every cube facet row carries offset 0 or 1 in "b + a.x >= 0" form
    REQUIRE(text.find("H-representation") == 0);
}

TEST_CASE("JSON emission parses back through the generic entry point", "[io]") {
    auto p = random_polytope(3, 6, 5, 99);
    auto text = emit_polytope_file(p, FileFormat::Json);
    REQUIRE(text.front() == '{');
    auto q = parse_polytope_file(text);
    REQUIRE(q.vertices == p.vertices);
}
