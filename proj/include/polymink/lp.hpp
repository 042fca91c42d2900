#ifndef POLYMINK_LP_HPP
#define POLYMINK_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polymink/rational.hpp"

namespace polymink {

enum class Relation { GE, GT, EQ };
enum class Sense { Minimize, Maximize };

struct Constraint {
    QVector normal;
    Rational offset;
    Relation rel = Relation::GE;
};

struct LPProblem {
    std::vector<Constraint> constraints;
    std::optional<QVector> objective;
    Sense sense = Sense::Minimize;
};

struct LPResult {
    enum class Status { Infeasible, Unbounded, Optimal, Feasible };
    Status status;
    QVector point;   // certificate for Optimal / Feasible
    Rational value;  // objective value for Optimal
};

namespace detail {

struct SimplexOutcome {
    enum class Status { Infeasible, Unbounded, Optimal } status;
    QVector point;  // values of the structural variables
    Rational value;
};

// Bland's rule tableau simplex: min c.y subject to A y = b, y >= 0.
// Deterministic by construction, terminates on every input.
inline SimplexOutcome simplex_solve(QMatrix a, QVector b, QVector c) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : c.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    }
    // Tableau columns: structural 0..n-1, artificial n..n+m-1, rhs last.
    const std::size_t total = n + m;
    QMatrix t(m, QVector(total + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
        basis[i] = n + i;
    }

    auto pivot = [&](std::size_t row, std::size_t col) {
        Rational p = t[row][col];
        for (auto& x : t[row]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i != row && t[i][col] != 0) {
                Rational f = t[i][col];
                for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
            }
        }
        basis[row] = col;
    };

    // Runs Bland's rule against the cost vector `cost` over active columns
    // [0, ncols). Returns false when unbounded.
    auto run = [&](const QVector& cost, std::size_t ncols) -> bool {
        for (;;) {
            // reduced costs z_j = cost_j - cost_B . column_j
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j) {
                Rational red = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (cost[basis[i]] != 0) red -= cost[basis[i]] * t[i][j];
                if (red < 0) { enter = j; break; } // Bland: smallest index
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][*enter] > 0) {
                    Rational ratio = t[i][total] / t[i][*enter];
                    if (!leave || ratio < best ||
                        (ratio == best && basis[i] < basis[*leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    };

    // Phase 1: minimize the sum of artificials.
    QVector phase1(total, Rational(0));
    for (std::size_t j = n; j < total; ++j) phase1[j] = 1;
    run(phase1, total);
    Rational art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) art_sum += t[i][total];
    if (art_sum != 0) return {SimplexOutcome::Status::Infeasible, {}, 0};

    // Drive remaining artificials out of the basis; a row with no structural
    // pivot candidate is redundant and harmless (its rhs is zero).
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) {
            for (std::size_t j = 0; j < n; ++j) {
                if (t[i][j] != 0) { pivot(i, j); break; }
            }
        }
    }

    // Phase 2 over structural columns only.
    QVector cost(total + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) cost[basis[i]] = 0;
    if (!run(cost, n)) return {SimplexOutcome::Status::Unbounded, {}, 0};

    QVector y(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) y[basis[i]] = t[i][total];
    Rational value = dot(c, y);
    return {SimplexOutcome::Status::Optimal, y, value};
}

} // namespace detail

// Exact LP front end. Free variables are split into nonnegative pairs and
// strict inequalities certified through an auxiliary slack maximized up to 1.
inline LPResult lp_solve(const LPProblem& p) {
    if (p.constraints.empty() && !p.objective)
        return {LPResult::Status::Feasible, {}, 0};
    const std::size_t d =
        p.constraints.empty() ? p.objective->size() : p.constraints[0].normal.size();
    bool has_strict = false;
    for (const auto& c : p.constraints)
        if (c.rel == Relation::GT) has_strict = true;
    if (has_strict && p.objective)
        throw std::logic_error("lp_solve: objective with strict constraints unsupported");

    // variables: u (d), w (d), [t], slacks appended per inequality row
    std::size_t nvars = 2 * d + (has_strict ? 1 : 0);
    const std::size_t t_col = 2 * d;
    std::size_t nslacks = 0;
    for (const auto& c : p.constraints)
        if (c.rel != Relation::EQ) ++nslacks;
    if (has_strict) ++nslacks; // t <= 1 row
    const std::size_t ncols = nvars + nslacks;

    QMatrix a;
    QVector b;
    std::size_t slack = nvars;
    for (const auto& c : p.constraints) {
        QVector row(ncols, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = c.normal[j];
            row[d + j] = -c.normal[j];
        }
        if (c.rel != Relation::EQ) row[slack++] = -1;
        if (c.rel == Relation::GT) row[t_col] = -1;
        a.push_back(std::move(row));
        b.push_back(c.offset);
    }
    if (has_strict) {
        QVector row(ncols, Rational(0));
        row[t_col] = 1;
        row[slack++] = 1;
        a.push_back(std::move(row));
        b.push_back(1);
    }

    QVector cost(ncols, Rational(0));
    if (has_strict) {
        cost[t_col] = -1; // maximize t
    } else if (p.objective) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational cj = (*p.objective)[j];
            if (p.sense == Sense::Maximize) cj = -cj;
            cost[j] = cj;
            cost[d + j] = -cj;
        }
    }

    auto out = detail::simplex_solve(a, b, cost);
    if (out.status == detail::SimplexOutcome::Status::Infeasible)
        return {LPResult::Status::Infeasible, {}, 0};

    auto extract = [&](const QVector& y) {
        QVector x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = y[j] - y[d + j];
        return x;
    };

    if (has_strict) {
        // t is bounded by 1, so Unbounded cannot occur here
        if (out.point[t_col] == 0) return {LPResult::Status::Infeasible, {}, 0};
        return {LPResult::Status::Feasible, extract(out.point), 0};
    }
    if (!p.objective) {
        if (out.status == detail::SimplexOutcome::Status::Unbounded)
            return {LPResult::Status::Feasible, QVector(d, Rational(0)), 0};
        return {LPResult::Status::Feasible, extract(out.point), 0};
    }
    if (out.status == detail::SimplexOutcome::Status::Unbounded)
        return {LPResult::Status::Unbounded, {}, 0};
    Rational value = out.value;
    if (p.sense == Sense::Maximize) value = -value;
    return {LPResult::Status::Optimal, extract(out.point), value};
}

} // namespace polymink

#endif
