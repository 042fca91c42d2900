#ifndef POLYMINK_RATIONAL_HPP
#define POLYMINK_RATIONAL_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "polymink/errors.hpp"

namespace polymink {

// Exact arithmetic everywhere: supporting-hyperplane and cone-membership
// decisions in the generated families are degenerate by construction and
// would not survive rounding.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational dot(const QVector& a, const QVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVector add(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVector sub(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVector scale(const QVector& a, const Rational& t) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

inline bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline QVector zero_vector(std::size_t d) { return QVector(d, Rational(0)); }

// Positive scalar multiple of v with coprime integer entries. Idempotent.
inline QVector normalize_primitive(const QVector& v) {
    if (is_zero(v)) throw ZeroVector("normalize_primitive: zero vector");
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = Int(num(v[i]) * (l / den(v[i])));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
    return r;
}

// Primitive vector with the first nonzero entry positive; identifies +-v.
inline QVector canonical_direction(const QVector& v) {
    QVector r = normalize_primitive(v);
    for (const auto& x : r) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : r) y = -y;
            break;
        }
    }
    return r;
}

inline bool lex_less(const QVector& a, const QVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Row echelon elimination over Q, in place. Returns pivot column of each
// eliminated row.
inline std::vector<std::size_t> row_reduce(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != row && m[i][col] != 0) {
                Rational f = m[i][col] / m[row][col];
                for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Exact rank over the rationals via fraction-free (Bareiss-style) elimination
// on a denominator-cleared integer copy.
inline std::size_t rank(const QMatrix& m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, den(m[i][j]));
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Int(num(m[i][j]) * (l / den(m[i][j])));
    }
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

// Solve A x = b exactly; nullopt when inconsistent. If underdetermined,
// free variables are set to zero.
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    QMatrix aug(rows, QVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    auto pivots = row_reduce(aug);
    QVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt; // pivot in the rhs column
        x[pivots[i]] = aug[i][cols] / aug[i][pivots[i]];
    }
    // Rows below the pivot rows must be all-zero including rhs.
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    return x;
}

// Basis of {x : A x = 0}.
inline QMatrix nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    QMatrix m = a;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    QMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free] / m[i][pivots[i]];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Hyperplane through the given points: primitive integer normal a and offset b
// with a.p = b for every input point. The points must affinely span exactly a
// hyperplane of the ambient space.
inline std::pair<QVector, Rational> solve_affine(const std::vector<QVector>& points) {
    if (points.empty()) throw DegenerateSpan("solve_affine: no points");
    const std::size_t d = points[0].size();
    QMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    if (diffs.empty()) diffs.push_back(zero_vector(d));
    if (rank(diffs) + 1 != d)
        throw DegenerateSpan("solve_affine: points do not span a hyperplane");
    QMatrix ns = nullspace(diffs);
    // rank(diffs) = d-1, so the nullspace is one-dimensional
    QVector normal = normalize_primitive(ns.at(0));
    return {normal, dot(normal, points[0])};
}

} // namespace polymink

#endif
