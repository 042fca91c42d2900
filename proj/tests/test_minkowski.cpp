// Minkowski sums, decompositions, erosion, summand queries, zonotopes.
// The support-function additivity of sums is the independent oracle.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "polymink/generators.hpp"
#include "polymink/graph.hpp"
#include "polymink/minkowski.hpp"

using namespace polymink;

namespace {

QVector random_direction(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<long> dist(-9, 9);
    QVector v(d);
    do {
        for (auto& x : v) x = dist(rng);
    } while (is_zero(v));
    return v;
}

} // namespace

TEST_CASE("sum supports are additive in every direction", "[minkowski]") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::size_t d = 2 + seed % 3;
        auto p = random_polytope(d, d + 4, 8, seed);
        auto q = random_polytope(d, d + 3, 8, seed + 50);
        auto s = minkowski_sum(p, q).sum;
        for (int t = 0; t < 30; ++t) {
            auto c = random_direction(rng, d);
            REQUIRE(support_max(s, c) == support_max(p, c) + support_max(q, c));
            REQUIRE(support_min(s, c) == support_min(p, c) + support_min(q, c));
        }
    }
}

TEST_CASE("every sum vertex decomposes into its recorded summand vertices",
          "[minkowski]") {
    auto p = random_polytope(3, 7, 9, 11);
    auto q = random_polytope(3, 6, 9, 12);
    auto s = minkowski_sum(p, q);
    REQUIRE(s.decomposition.size() == s.sum.f0());
    REQUIRE(s.sum.f0() <= p.f0() * q.f0());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t w = 0; w < s.sum.f0(); ++w) {
        auto [i, j] = s.decomposition[w];
        REQUIRE(s.sum.vertices[w] == add(p.vertices[i], q.vertices[j]));
        REQUIRE(seen.insert({i, j}).second); // decomposition pairs are distinct
    }
}

TEST_CASE("square plus segment gives the worked hexagon-free example", "[minkowski]") {
    auto sq = cube(2);
    auto seg = segment_polytope({1, 2});
    auto s = minkowski_sum(sq, seg).sum;
    REQUIRE(s.f0() == 6);
    REQUIRE(support_max(s, {1, 0}) == 2);
}

TEST_CASE("erosion of a sum by one summand recovers the other", "[minkowski]") {
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        auto p = random_polytope(3, 7, 6, seed);
        auto q = random_polytope(3, 5, 4, seed + 10);
        auto s = minkowski_sum(p, q).sum;
        auto e = erosion(s, q);
        REQUIRE(e.vertices == p.vertices);
    }
    REQUIRE_THROWS_AS(erosion(cube(2), scale_polytope(cube(2), Rational(3))),
                      EmptyErosion);
}

TEST_CASE("summand queries answer the planted cases", "[minkowski]") {
    auto p = random_polytope(3, 7, 6, 21);
    auto q = random_polytope(3, 5, 4, 22);
    auto s = minkowski_sum(p, q).sum;
    REQUIRE(is_summand(s, p));
    REQUIRE(is_summand(s, q));
    REQUIRE(is_summand(p, p));
    REQUIRE_FALSE(is_summand(cube(2), simplex(2)));
    REQUIRE(has_homothetic_summand(s, q));
}

TEST_CASE("max_summand_scale brackets an exactly known answer", "[minkowski]") {
    // p = simplex + 2*cube: the largest alpha with alpha*cube a summand is 2
    auto p = minkowski_sum(simplex(2), scale_polytope(cube(2), Rational(2))).sum;
    auto r = max_summand_scale(p, cube(2), Rational(1, 256));
    REQUIRE(r.certified);
    REQUIRE(r.alpha_hi >= 2);
    REQUIRE(r.alpha_lo >= Rational(2) - Rational(1, 256));
    REQUIRE(r.alpha_hi - r.alpha_lo <= Rational(1, 256));

    auto none = max_summand_scale(simplex(2), segment_polytope({1, 1}), Rational(1, 64));
    REQUIRE(none.alpha_lo == 0);
}

TEST_CASE("phi injection lands on distinct sum vertices with the right split",
          "[minkowski]") {
    auto p = random_polytope(3, 7, 8, 31);
    auto q = random_polytope(3, 6, 8, 32);
    auto s = minkowski_sum(p, q);
    auto phi = phi_injection(p, q);
    REQUIRE(phi.size() == p.f0());
    std::set<std::size_t> targets(phi.begin(), phi.end());
    REQUIRE(targets.size() == p.f0()); // injective
    for (std::size_t u = 0; u < p.f0(); ++u)
        REQUIRE(s.decomposition[phi[u]].first == u); // phi(u) sits over u
}

TEST_CASE("gamma subgraphs partition the sum's vertices and are connected",
          "[minkowski]") {
    auto p = random_polytope(3, 6, 7, 41);
    auto q = random_polytope(3, 5, 7, 42);
    auto s = minkowski_sum(p, q);
    auto gs = build_graph(s.sum);
    std::set<std::size_t> covered;
    for (std::size_t u = 0; u < p.f0(); ++u) {
        auto g = gamma_subgraph(s, gs, u);
        REQUIRE_FALSE(g.members.empty());
        REQUIRE(is_connected(g.graph));
        for (auto w : g.members) REQUIRE(covered.insert(w).second);
    }
    REQUIRE(covered.size() == s.sum.f0());
}

TEST_CASE("zonotope detection separates zonotopes from simplices", "[minkowski]") {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto z = is_zonotope(cube(d));
        REQUIRE(z.zonotope);
        REQUIRE(z.generators.size() == d);
    }
    std::mt19937_64 rng(404);
    auto sum = segment_polytope(random_direction(rng, 3));
    for (int i = 0; i < 3; ++i)
        sum = minkowski_sum(sum, segment_polytope(random_direction(rng, 3))).sum;
    auto z = is_zonotope(sum);
    REQUIRE(z.zonotope);
    for (std::size_t d = 2; d <= 4; ++d) REQUIRE_FALSE(is_zonotope(simplex(d)).zonotope);
}

TEST_CASE("per-direction summand tests match segment summand checks", "[minkowski]") {
    auto p = minkowski_sum(cube(2), segment_polytope({1, 1})).sum;
    for (const auto& [dir, ok] : per_direction_summand_test(p)) {
        auto probe = segment_polytope(dir);
        Rational alpha = max_summand_scale(p, probe, Rational(1, 16)).alpha_lo;
        REQUIRE(ok == (alpha > 0));
    }
}
