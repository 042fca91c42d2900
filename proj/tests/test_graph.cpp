// Vertex-edge graphs, BFS distances, geodesics, diameters.

#include <catch2/catch_amalgamated.hpp>

#include "polymink/generators.hpp"
#include "polymink/graph.hpp"

using namespace polymink;

namespace {

bool adjacent(const PolytopeGraph& g, std::size_t u, std::size_t v) {
    for (auto w : g.adjacency[u])
        if (w == v) return true;
    return false;
}

} // namespace

TEST_CASE("cube graphs have diameter d, simplices diameter 1", "[graph]") {
    for (std::size_t d = 1; d <= 5; ++d) {
        auto g = build_graph(cube(d));
        REQUIRE(is_connected(g));
        REQUIRE(diameter(g).value == d);
        auto s = build_graph(simplex(d));
        REQUIRE(diameter(s).value == 1);
    }
}

TEST_CASE("bfs distances on the cube equal Hamming distances", "[graph]") {
    auto c = cube(3);
    auto g = build_graph(c);
    for (std::size_t u = 0; u < c.f0(); ++u) {
        auto dist = bfs_distances(g, u);
        for (std::size_t v = 0; v < c.f0(); ++v) {
            std::size_t hamming = 0;
            for (std::size_t i = 0; i < 3; ++i)
                if (c.vertices[u][i] != c.vertices[v][i]) ++hamming;
            REQUIRE(dist[v] == hamming);
        }
    }
}

TEST_CASE("geodesics are shortest edge walks", "[graph]") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        auto p = random_polytope(3, 8, 9, seed);
        auto g = build_graph(p);
        auto diam = diameter(g);
        auto path = geodesic(g, diam.witness.first, diam.witness.second);
        REQUIRE(path.size() == diam.value + 1);
        REQUIRE(path.front() == diam.witness.first);
        REQUIRE(path.back() == diam.witness.second);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            REQUIRE(adjacent(g, path[i], path[i + 1]));
        REQUIRE(distance(g, diam.witness.first, diam.witness.second) == diam.value);
    }
}

TEST_CASE("diameter witness realizes the maximum distance", "[graph]") {
    auto p = random_polytope(4, 9, 8, 77);
    auto g = build_graph(p);
    auto diam = diameter(g);
    std::size_t best = 0;
    for (std::size_t u = 0; u < g.adjacency.size(); ++u)
        for (auto d : bfs_distances(g, u)) best = std::max(best, d);
    REQUIRE(diam.value == best);
    REQUIRE(distance(g, diam.witness.first, diam.witness.second) == best);
}

TEST_CASE("a severed graph is detected as disconnected", "[graph]") {
    auto g = build_graph(cube(3));
    for (auto v : g.adjacency[0]) {
        auto& back = g.adjacency[v];
        back.erase(std::remove(back.begin(), back.end(), std::size_t(0)), back.end());
    }
    g.adjacency[0].clear();
    REQUIRE_FALSE(is_connected(g));
}
