// Verification suites: fixtures pass, reports are deterministic and well formed.

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include "polymink/generators.hpp"
#include "polymink/verify.hpp"

using namespace polymink;

TEST_CASE("diameter bounds hold on simple fixtures", "[verify]") {
    auto r = check_diameter_bounds(cube(3), simplex(3));
    INFO(r.to_csv());
    REQUIRE(r.all_pass());

    auto [tri, seg] = detail::flat_triangle_and_segment();
    REQUIRE(check_diameter_bounds(tri, seg).all_pass());
}

TEST_CASE("structure lemmas hold on fixtures including a flat summand", "[verify]") {
    auto [tri, seg] = detail::flat_triangle_and_segment();
    auto r = check_structure_lemmas(tri, seg);
    INFO(r.to_csv());
    REQUIRE(r.all_pass());
    REQUIRE(check_structure_lemmas(cube(2), rational_polygon(5)).all_pass());
}

TEST_CASE("decomposability routes agree over a seeded batch", "[verify]") {
    auto r = check_decomposability(6, 314);
    INFO(r.to_csv());
    REQUIRE(r.all_pass());
}

TEST_CASE("ratio tables satisfy the proved bounds", "[verify]") {
    auto r41 = ratio_tables(RatioKind::Thm41, {3, 5});
    INFO(r41.to_csv());
    REQUIRE(r41.all_pass());
    auto r42 = ratio_tables(RatioKind::Thm42, {5}, 2);
    INFO(r42.to_csv());
    REQUIRE(r42.all_pass());
}

TEST_CASE("full suite passes and is deterministic for a fixed seed", "[verify]") {
    auto a = run_suite(7, 6);
    INFO(a.to_csv());
    REQUIRE(a.all_pass());
    auto b = run_suite(7, 6);
    REQUIRE(a.to_csv() == b.to_csv());
    REQUIRE(a.to_json() == b.to_json());
}

TEST_CASE("reports serialize to parseable JSON and flat CSV", "[verify]") {
    auto r = check_diameter_bounds(cube(2), cube(2));
    auto j = nlohmann::json::parse(r.to_json());
    REQUIRE(j.contains("suite"));
    REQUIRE(j.contains("checks"));
    REQUIRE(j["checks"].size() == r.checks.size());
    for (const auto& c : j["checks"]) {
        REQUIRE(c.contains("name"));
        REQUIRE(c.contains("pass"));
    }
    std::istringstream csv(r.to_csv());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(csv, line))
        if (!line.empty()) ++rows;
    REQUIRE(rows == r.checks.size() + 1); // header + one row per check
}
