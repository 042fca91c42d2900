// Acceptance harness: one line per criterion, plain main, nonzero exit on any
// failure. Each criterion also enforces its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "polymink/generators.hpp"
#include "polymink/graph.hpp"
#include "polymink/io.hpp"
#include "polymink/minkowski.hpp"
#include "polymink/verify.hpp"

using namespace polymink;

namespace {

int failures = 0;

template <typename F>
void criterion(int number, const std::string& label, double budget_seconds, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        note += " [over budget]";
    }
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%.2fs, budget %.0fs)%s\n", ok ? "PASS" : "FAIL",
                number, label.c_str(), elapsed, budget_seconds, note.c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    criterion(1, "triangle plus parallel segment: 4 sum vertices, apex cluster 2v/1e",
              1.0, [] {
                  auto [tri, seg] = detail::flat_triangle_and_segment();
                  auto s = minkowski_sum(tri, seg);
                  if (s.sum.f0() != 4) return false;
                  auto gs = build_graph(s.sum);
                  // the apex is the unique triangle vertex off the base line
                  std::size_t apex = 0;
                  for (std::size_t u = 0; u < tri.f0(); ++u)
                      if (tri.vertices[u][1] != 0) apex = u;
                  auto ga = gamma_subgraph(s, gs, apex);
                  std::size_t edge_count = 0;
                  for (const auto& nb : ga.graph.adjacency) edge_count += nb.size();
                  edge_count /= 2;
                  if (ga.members.size() != 2 || edge_count != 1) return false;
                  for (std::size_t u = 0; u < tri.f0(); ++u)
                      if (u != apex && gamma_subgraph(s, gs, u).members.size() != 1)
                          return false;
                  return true;
              });

    criterion(2, "reference family (5,4) census: 80 vertices, facet types exact", 30.0,
              [] {
                  XiParams params; // k = 5, l = 4
                  auto [poly, census] = xi(params);
                  if (!census.passes() || poly.f0() != 80) return false;
                  std::size_t horizontals20 = 0, verticals5 = 0, tris = 0, quads = 0;
                  for (std::size_t f = 0; f < poly.facets.size(); ++f) {
                      std::size_t count = 0;
                      for (std::size_t v = 0; v < poly.f0(); ++v)
                          if (poly.incidence[v].test(f)) ++count;
                      bool horizontal = poly.facets[f].normal[0] == 0 &&
                                        poly.facets[f].normal[1] == 0;
                      bool vertical = poly.facets[f].normal[2] == 0;
                      if (horizontal && count == 20) ++horizontals20;
                      else if (vertical && count == 5) ++verticals5;
                      else if (count == 3) ++tris;
                      else if (count == 4) ++quads;
                  }
                  return horizontals20 == 2 && verticals5 == 10 && tris == 10 &&
                         quads == 40;
              });

    criterion(3, "diameter bounds for k=3..10 plus the k=40 ratio >= 1.7", 300.0, [] {
        for (long k = 3; k <= 10; ++k)
            if (!ratio_tables(RatioKind::Thm41, {k}).all_pass()) return false;
        XiParams params;
        params.k = 40;
        params.l = 4;
        auto [poly, census] = xi(params);
        if (!census.passes()) return false;
        auto sum = minkowski_sum(poly, segment_polytope({0, 0, 1})).sum;
        std::size_t d1 = diameter(build_graph(poly)).value;
        std::size_t d2 = diameter(build_graph(sum)).value;
        return Rational(static_cast<long>(d2), static_cast<long>(d1)) >=
               Rational(17, 10);
    });

    criterion(4, "bumped family grid: vertex increment and sum diameter bounds", 600.0,
              [] {
                  for (long m : {2L, 3L}) {
                      const long l = 2 * m + 4;
                      for (long k : {5L, 9L, 13L, 17L}) {
                          auto fam = xi_tilde(
                              k, l, m,
                              std::min(Rational(1, 100), Rational(1, 4 * k * l)));
                          if (!fam.census.passes()) return false;
                          long increment = (k - 1) * (l - 1) * (m - 1);
                          if (fam.poly.f0() !=
                              fam.theta.poly.f0() + static_cast<std::size_t>(increment))
                              return false;
                          auto sum = minkowski_sum(fam.poly, fam.pi).sum;
                          auto d1 = diameter(build_graph(fam.poly)).value;
                          auto d2 = diameter(build_graph(sum)).value;
                          if (!(Rational(static_cast<long>(d1)) <=
                                Rational(k + 3, 2) + l + 2))
                              return false;
                          if (!(Rational(static_cast<long>(d2)) >=
                                Rational(k * (m + 1), 2) + 1))
                              return false;
                      }
                  }
                  return true;
              });

    criterion(5, "fixed-diameter grid d=2..5, k=1..6: dimension and diameter exact",
              60.0, [] {
                  for (std::size_t d = 2; d <= 5; ++d)
                      for (std::size_t k = 1; k <= 6; ++k) {
                          auto p = prop21(d, k);
                          if (p.intrinsic_dim != d) return false;
                          if (diameter(build_graph(p)).value != k) return false;
                      }
                  return true;
              });

    criterion(6, "double pyramids d=3,4, k=4..8: summand diameters 2, sum diameter k",
              120.0, [] {
                  for (std::size_t d : {3u, 4u})
                      for (std::size_t k = 4; k <= 8; ++k) {
                          auto [p, q] = prop22(d, k);
                          if (diameter(build_graph(p)).value != 2) return false;
                          if (diameter(build_graph(q)).value != 2) return false;
                          auto s = minkowski_sum(p, q).sum;
                          if (diameter(build_graph(s)).value != k) return false;
                      }
                  return true;
              });

    criterion(7, "200 seeded random pairs: all diameter bounds and structure lemmas",
              600.0, [] {
                  for (std::uint64_t t = 0; t < 200; ++t) {
                      std::uint64_t s0 = 5000 + 10 * t;
                      std::size_t d = 2 + t % 3;
                      auto p = random_polytope(d, d + 4, 10, s0);
                      auto q = random_polytope(d, d + 3, 10, s0 + 1);
                      if (!check_diameter_bounds(p, q).all_pass()) return false;
                      if (!check_structure_lemmas(p, q).all_pass()) return false;
                  }
                  return true;
              });

    criterion(8, "decomposability routes agree on 100 positives and 100 generic pairs",
              600.0, [] { return check_decomposability(100, 2026).all_pass(); });

    criterion(9, "zonotope detection on cubes, segment sums, simplices, and the family",
              120.0, [] {
                  for (std::size_t d = 1; d <= 4; ++d) {
                      auto z = is_zonotope(cube(d));
                      if (!z.zonotope || z.generators.size() != d) return false;
                  }
                  const std::vector<QVector> dirs{
                      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}, {2, -1, 1}};
                  for (std::size_t count = 3; count <= 5; ++count) {
                      auto sum = segment_polytope(dirs[0]);
                      for (std::size_t i = 1; i < count; ++i)
                          sum = minkowski_sum(sum, segment_polytope(dirs[i])).sum;
                      auto z = is_zonotope(sum);
                      if (!z.zonotope || z.generators.size() != count) return false;
                  }
                  for (std::size_t d = 2; d <= 4; ++d)
                      if (is_zonotope(simplex(d)).zonotope) return false;
                  XiParams params;
                  return !is_zonotope(xi(params).first).zonotope;
              });

    criterion(10, "I/O round trip on 50 seeded polytopes, byte-identical re-emission",
              30.0, [] {
                  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                      std::size_t d = 2 + seed % 3;
                      auto p = random_polytope(d, d + 4, 9, 900 + seed);
                      for (auto fmt : {FileFormat::CddExt, FileFormat::CddIne,
                                       FileFormat::Json}) {
                          auto text = emit_polytope_file(p, fmt);
                          auto q = parse_polytope_file(text);
                          if (q.vertices != p.vertices) return false;
                          if (emit_polytope_file(q, fmt) != text) return false;
                      }
                  }
                  return true;
              });

    if (failures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
