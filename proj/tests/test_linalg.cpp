// Exact linear algebra and LP against brute-force oracles.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polymink/lp.hpp"
#include "polymink/rational.hpp"

using namespace polymink;

namespace {

// Cofactor-expansion determinant, the oracle for rank.
Rational det(const QMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        QMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            QVector row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Largest size of a square submatrix with nonzero determinant.
std::size_t rank_oracle(const QMatrix& m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    for (std::size_t s = std::min(rows, cols); s >= 1; --s) {
        std::vector<std::size_t> ri(rows), ci(cols);
        for (std::size_t i = 0; i < rows; ++i) ri[i] = i;
        for (std::size_t j = 0; j < cols; ++j) ci[j] = j;
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + s, true);
        do {
            std::vector<std::size_t> rpick;
            for (std::size_t i = 0; i < rows; ++i)
                if (rsel[i]) rpick.push_back(i);
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + s, true);
            do {
                std::vector<std::size_t> cpick;
                for (std::size_t j = 0; j < cols; ++j)
                    if (csel[j]) cpick.push_back(j);
                QMatrix sub(s, QVector(s));
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) sub[i][j] = m[rpick[i]][cpick[j]];
                if (det(sub) != 0) return s;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    QMatrix m(rows, QVector(cols));
    for (auto& row : m)
        for (auto& x : row) x = dist(rng);
    return m;
}

} // namespace

TEST_CASE("rank matches the minor oracle exhaustively on 2x2", "[linalg]") {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d) {
                    QMatrix m{{a, b}, {c, d}};
                    REQUIRE(rank(m) == rank_oracle(m));
                }
}

TEST_CASE("rank matches the minor oracle on seeded 3x3 and 4x4", "[linalg]") {
    std::mt19937_64 rng(20260823);
    for (int t = 0; t < 40; ++t) {
        auto m3 = random_matrix(rng, 3, 3, 2);
        REQUIRE(rank(m3) == rank_oracle(m3));
        auto m4 = random_matrix(rng, 4, 4, 1);
        REQUIRE(rank(m4) == rank_oracle(m4));
    }
    // deliberately rank-deficient: duplicate a row
    auto m = random_matrix(rng, 3, 4, 3);
    m.push_back(m[1]);
    REQUIRE(rank(m) == rank_oracle(m));
}

TEST_CASE("solve_linear returns a certified solution or nothing", "[linalg]") {
    QMatrix a{{2, 1}, {1, -1}};
    QVector b{5, 1};
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(dot(a[i], *x) == b[i]);

    QMatrix inconsistent{{1, 1}, {2, 2}};
    REQUIRE_FALSE(solve_linear(inconsistent, {1, 3}).has_value());

    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(rng, 3, 3, 4);
        QVector rhs{1, 2, 3};
        auto sol = solve_linear(m, rhs);
        if (sol) {
            for (std::size_t i = 0; i < 3; ++i) REQUIRE(dot(m[i], *sol) == rhs[i]);
        } else {
            REQUIRE(rank(m) < 3); // no solution only for singular systems here
        }
    }
}

TEST_CASE("nullspace vectors annihilate the matrix and span the right dimension",
          "[linalg]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        auto m = random_matrix(rng, 2 + t % 3, 4, 3);
        auto ns = nullspace(m);
        REQUIRE(ns.size() == 4 - rank(m));
        for (const auto& v : ns) {
            REQUIRE_FALSE(is_zero(v));
            for (const auto& row : m) REQUIRE(dot(row, v) == 0);
        }
        // basis independence
        if (!ns.empty()) REQUIRE(rank(ns) == ns.size());
    }
}

TEST_CASE("solve_affine recovers the hyperplane through points", "[linalg]") {
    std::vector<QVector> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto [n, off] = solve_affine(pts);
    REQUIRE_FALSE(is_zero(n));
    for (const auto& p : pts) REQUIRE(dot(n, p) == off);

    std::vector<QVector> degenerate{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
    REQUIRE_THROWS_AS(solve_affine(degenerate), DegenerateSpan);
}

TEST_CASE("normalize_primitive yields coprime integers preserving direction", "[linalg]") {
    QVector v{Rational(2, 3), Rational(-4, 9)};
    auto p = normalize_primitive(v);
    for (const auto& x : p) REQUIRE(den(x) == 1);
    REQUIRE(p == QVector{3, -2});
    // positive scalar multiple of the input
    REQUIRE(p[0] * v[1] == p[1] * v[0]);
    REQUIRE_THROWS_AS(normalize_primitive(QVector{0, 0}), ZeroVector);
}

TEST_CASE("lp_solve optimal, infeasible, unbounded, and strict cases", "[lp]") {
    // min x+y on the triangle x,y >= 0, x+y >= 1: optimum 1
    LPProblem p;
    p.constraints = {{{1, 0}, 0, Relation::GE},
                     {{0, 1}, 0, Relation::GE},
                     {{1, 1}, 1, Relation::GE}};
    p.objective = QVector{1, 1};
    auto r = lp_solve(p);
    REQUIRE(r.status == LPResult::Status::Optimal);
    REQUIRE(r.value == 1);

    // infeasible: x >= 1 and -x >= 0
    LPProblem inf;
    inf.constraints = {{{1}, 1, Relation::GE}, {{-1}, 0, Relation::GE}};
    inf.objective = QVector{1};
    REQUIRE(lp_solve(inf).status == LPResult::Status::Infeasible);

    // unbounded: min -x with x >= 0
    LPProblem unb;
    unb.constraints = {{{1}, 0, Relation::GE}};
    unb.objective = QVector{-1};
    REQUIRE(lp_solve(unb).status == LPResult::Status::Unbounded);

    // strict feasibility: x > 0, -x > -1 has an interior witness
    LPProblem strict;
    strict.constraints = {{{1}, 0, Relation::GT}, {{-1}, -1, Relation::GT}};
    auto s = lp_solve(strict);
    REQUIRE(s.status == LPResult::Status::Feasible);
    REQUIRE(s.point[0] > 0);
    REQUIRE(s.point[0] < 1);

    // strict infeasibility: x > 0 and -x > 0
    LPProblem simp;
    simp.constraints = {{{1}, 0, Relation::GT}, {{-1}, 0, Relation::GT}};
    REQUIRE(lp_solve(simp).status == LPResult::Status::Infeasible);
}
