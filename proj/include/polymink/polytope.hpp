#ifndef POLYMINK_POLYTOPE_HPP
#define POLYMINK_POLYTOPE_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polymink/errors.hpp"
#include "polymink/lp.hpp"
#include "polymink/rational.hpp"

namespace polymink {

using Bitset = boost::dynamic_bitset<>;

// normal . x >= offset, normal a primitive integer vector
struct Halfspace {
    QVector normal;
    Rational offset;
};

inline bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

struct Cone {
    QMatrix generators; // primitive, nonzero
    std::size_t ambient_dim = 0;
};

// Dual description polytope. Vertices sorted lexicographically, facets sorted
// by (normal, offset); for lower-dimensional polytopes the facets live within
// the affine hull and hull_equations carry the hull itself.
struct ExactPolytope {
    std::size_t ambient_dim = 0;
    std::size_t intrinsic_dim = 0;
    std::vector<QVector> vertices;
    std::vector<Halfspace> facets;
    std::vector<std::pair<QVector, Rational>> hull_equations; // a.x = b
    std::vector<Bitset> incidence;                            // vertex x facet

    std::size_t f0() const { return vertices.size(); }
    bool full_dimensional() const { return intrinsic_dim == ambient_dim; }
};

namespace detail {

struct DDRay {
    QVector v;   // primitive
    Bitset zero; // constraints satisfied with equality, indexed over all rows
};

// Extreme rays of the pointed cone {x : rows.x >= 0}. Requires
// rank(rows) == dim (no lineality); rows are inserted in the given order.
inline std::vector<DDRay> dd_extreme_rays(const QMatrix& rows) {
    const std::size_t dim = rows.empty() ? 0 : rows[0].size();
    const std::size_t m = rows.size();

    // Greedy independent subset for the initial simplicial cone.
    std::vector<std::size_t> base;
    QMatrix sel;
    for (std::size_t i = 0; i < m && base.size() < dim; ++i) {
        sel.push_back(rows[i]);
        if (rank(sel) == base.size() + 1)
            base.push_back(i);
        else
            sel.pop_back();
    }
    assert(base.size() == dim && "dd_extreme_rays: cone has lineality");

    std::vector<bool> in_base(m, false);
    for (auto i : base) in_base[i] = true;

    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        QVector e(dim, Rational(0));
        e[j] = 1;
        auto r = solve_linear(sel, e);
        DDRay ray{normalize_primitive(*r), Bitset(m)};
        for (std::size_t i = 0; i < dim; ++i)
            if (i != j) ray.zero.set(base[i]);
        rays.push_back(std::move(ray));
    }

    for (std::size_t ci = 0; ci < m; ++ci) {
        if (in_base[ci]) continue;
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(rows[ci], rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else rays[i].zero.set(ci);
        }
        if (neg.empty()) continue;

        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) next.push_back(rays[i]);

        for (auto pi : pos) {
            for (auto ni : neg) {
                Bitset common = rays[pi].zero & rays[ni].zero;
                if (dim >= 2 && common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t i = 0; i < rays.size(); ++i) {
                    if (i == pi || i == ni) continue;
                    if (common.is_subset_of(rays[i].zero)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                QVector v = add(scale(rays[ni].v, val[pi]), scale(rays[pi].v, -val[ni]));
                DDRay nr{normalize_primitive(v), common};
                nr.zero.set(ci);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

} // namespace detail

// Vertex set of {x : a.x >= b for halfspaces, a.x = b for equations}.
// Throws EmptyPolytope / UnboundedPolyhedron.
inline std::vector<QVector> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                               const std::vector<std::pair<QVector, Rational>>&
                                                   equations = {}) {
    if (halfspaces.empty() && equations.empty())
        throw UnboundedPolyhedron("enumerate_vertices: no constraints");
    const std::size_t d = halfspaces.empty() ? equations[0].first.size()
                                             : halfspaces[0].normal.size();
    {
        LPProblem feas;
        for (const auto& h : halfspaces)
            feas.constraints.push_back({h.normal, h.offset, Relation::GE});
        for (const auto& e : equations)
            feas.constraints.push_back({e.first, e.second, Relation::EQ});
        if (lp_solve(feas).status == LPResult::Status::Infeasible)
            throw EmptyPolytope("enumerate_vertices: empty intersection");
    }
    // Homogenize as [x0 | x]; equations become opposing halfspace pairs.
    QMatrix rows;
    auto push = [&](const QVector& a, const Rational& b) {
        QVector row(d + 1);
        row[0] = -b;
        for (std::size_t j = 0; j < d; ++j) row[j + 1] = a[j];
        rows.push_back(std::move(row));
    };
    for (const auto& h : halfspaces) push(h.normal, h.offset);
    for (const auto& e : equations) {
        push(e.first, e.second);
        push(scale(e.first, -1), -e.second);
    }
    {
        QVector row(d + 1, Rational(0));
        row[0] = 1;
        rows.push_back(std::move(row)); // x0 >= 0
    }
    if (rank(rows) < d + 1)
        throw UnboundedPolyhedron("enumerate_vertices: recession line");

    auto rays = detail::dd_extreme_rays(rows);
    std::vector<QVector> verts;
    for (const auto& r : rays) {
        if (r.v[0] == 0)
            throw UnboundedPolyhedron("enumerate_vertices: nonzero recession cone");
        QVector x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = r.v[j + 1] / r.v[0];
        verts.push_back(std::move(x));
    }
    if (verts.empty()) throw EmptyPolytope("enumerate_vertices: no vertices");
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

// Convex hull: minimal vertex set, irredundant facets, full incidence.
// Duplicate and interior points are cleaned silently.
inline ExactPolytope hull_from_vertices(std::vector<QVector> points) {
    if (points.empty()) throw EmptyPolytope("hull_from_vertices: no points");
    const std::size_t d = points[0].size();
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    ExactPolytope p;
    p.ambient_dim = d;

    QMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));

    std::vector<std::size_t> coords; // coordinate subset carrying the affine hull
    if (!diffs.empty()) {
        QMatrix copy = diffs;
        coords = row_reduce(copy);
    }
    const std::size_t r = coords.size();
    p.intrinsic_dim = r;

    if (!diffs.empty()) {
        for (const auto& e : nullspace(diffs)) {
            QVector a = normalize_primitive(e);
            p.hull_equations.push_back({a, dot(a, points[0])});
        }
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            QVector a(d, Rational(0));
            a[j] = 1;
            p.hull_equations.push_back({a, points[0][j]});
        }
    }
    std::sort(p.hull_equations.begin(), p.hull_equations.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return lex_less(a.first, b.first);
                  return a.second < b.second;
              });

    if (r == 0) {
        p.vertices = {points[0]};
        p.incidence.emplace_back(0);
        return p;
    }

    // Work in the coordinate subset; centroid-translated polar dual.
    auto project = [&](const QVector& x) {
        QVector y(r);
        for (std::size_t t = 0; t < r; ++t) y[t] = x[coords[t]];
        return y;
    };
    QVector centroid(r, Rational(0));
    for (const auto& pt : points) centroid = add(centroid, project(pt));
    centroid = scale(centroid, Rational(1) / Rational(static_cast<long>(points.size())));

    QMatrix rows;
    for (const auto& pt : points) {
        QVector q = sub(project(pt), centroid);
        QVector row(r + 1);
        row[0] = 1;
        for (std::size_t t = 0; t < r; ++t) row[t + 1] = -q[t];
        rows.push_back(std::move(row));
    }
    {
        QVector row(r + 1, Rational(0));
        row[0] = 1;
        rows.push_back(std::move(row));
    }
    auto rays = detail::dd_extreme_rays(rows);

    std::vector<Halfspace> facets;
    for (const auto& ray : rays) {
        assert(ray.v[0] != 0 && "polar dual of a full-dimensional hull is bounded");
        QVector a(d, Rational(0));
        for (std::size_t t = 0; t < r; ++t) a[coords[t]] = -ray.v[t + 1] / ray.v[0];
        a = normalize_primitive(a);
        Rational b = dot(a, points[0]);
        for (const auto& pt : points) b = std::min(b, dot(a, pt));
        facets.push_back({std::move(a), b});
    }
    std::sort(facets.begin(), facets.end(), halfspace_less);
    facets.erase(std::unique(facets.begin(), facets.end(),
                             [](const Halfspace& x, const Halfspace& y) {
                                 return x.normal == y.normal && x.offset == y.offset;
                             }),
                 facets.end());
    p.facets = std::move(facets);

    // A point is a vertex iff its active facet normals span the intrinsic dim.
    for (const auto& pt : points) {
        Bitset inc(p.facets.size());
        QMatrix active;
        for (std::size_t f = 0; f < p.facets.size(); ++f) {
            if (dot(p.facets[f].normal, pt) == p.facets[f].offset) {
                inc.set(f);
                active.push_back(project(p.facets[f].normal));
            }
        }
        if (rank(active) == r) {
            p.vertices.push_back(pt);
            p.incidence.push_back(std::move(inc));
        }
    }
    return p;
}

inline std::vector<Constraint> halfspace_system(const ExactPolytope& p) {
    std::vector<Constraint> cs;
    for (const auto& h : p.facets) cs.push_back({h.normal, h.offset, Relation::GE});
    for (const auto& e : p.hull_equations) cs.push_back({e.first, e.second, Relation::EQ});
    return cs;
}

// Vertex enumeration from halfspaces, then canonicalization through
// hull_from_vertices so the round trip with it is exact.
inline ExactPolytope vertices_from_halfspaces(const std::vector<Halfspace>& hs) {
    std::vector<Halfspace> clean;
    for (const auto& h : hs) {
        QVector a = normalize_primitive(h.normal);
        // offset rescales with the normal
        Rational k = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) { k = h.normal[j] / a[j]; break; }
        clean.push_back({a, h.offset / k});
    }
    std::sort(clean.begin(), clean.end(), halfspace_less);
    clean.erase(std::unique(clean.begin(), clean.end(),
                            [](const Halfspace& x, const Halfspace& y) {
                                return x.normal == y.normal && x.offset == y.offset;
                            }),
                clean.end());
    return hull_from_vertices(enumerate_vertices(clean));
}

// Edge criterion: {u,v} is an edge iff the vertices incident to every facet
// common to u and v are exactly {u,v}. Correct for non-simple polytopes.
inline std::set<std::pair<std::size_t, std::size_t>> edges(const ExactPolytope& p) {
    std::set<std::pair<std::size_t, std::size_t>> result;
    const std::size_t n = p.f0();
    if (n == 2) {
        result.insert({0, 1});
        return result;
    }
    if (n < 2) return result;

    std::vector<std::vector<std::size_t>> facet_vertices(p.facets.size());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t f = p.incidence[v].find_first(); f != Bitset::npos;
             f = p.incidence[v].find_next(f))
            facet_vertices[f].push_back(v);

    std::set<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& fv : facet_vertices)
        for (std::size_t i = 0; i < fv.size(); ++i)
            for (std::size_t j = i + 1; j < fv.size(); ++j)
                candidates.insert({fv[i], fv[j]});

    for (const auto& [u, v] : candidates) {
        Bitset common = p.incidence[u] & p.incidence[v];
        const std::size_t f = common.find_first();
        if (f == Bitset::npos) continue;
        bool edge = true;
        for (std::size_t w : facet_vertices[f]) {
            if (w == u || w == v) continue;
            if (common.is_subset_of(p.incidence[w])) { edge = false; break; }
        }
        if (edge) result.insert({u, v});
    }
    return result;
}

// Cone generated by the facet normals active at a vertex; c lies in it iff
// x -> c.x is minimized over p at a face containing the vertex.
inline Cone normal_cone(const ExactPolytope& p, std::size_t v) {
    Cone c;
    c.ambient_dim = p.ambient_dim;
    for (std::size_t f = p.incidence[v].find_first(); f != Bitset::npos;
         f = p.incidence[v].find_next(f))
        c.generators.push_back(p.facets[f].normal);
    // directions orthogonal to the affine hull are lineality of every cone
    for (const auto& e : p.hull_equations) {
        c.generators.push_back(e.first);
        c.generators.push_back(scale(e.first, -1));
    }
    return c;
}

// Exact LP feasibility of v = sum(lambda_i g_i), lambda >= 0.
inline bool cone_contains(const Cone& c, const QVector& v) {
    if (is_zero(v)) return true;
    if (c.generators.empty()) return false;
    const std::size_t d = c.ambient_dim;
    const std::size_t m = c.generators.size();
    QMatrix a(d, QVector(m));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = c.generators[j][i];
    auto out = detail::simplex_solve(a, v, QVector(m, Rational(0)));
    return out.status != detail::SimplexOutcome::Status::Infeasible;
}

// Strict interior point of a full-dimensional cone: the sum of its primitive
// generators clears every supporting hyperplane strictly.
inline QVector cone_interior_point(const Cone& c) {
    if (rank(c.generators) != c.ambient_dim)
        throw NotFullDimensional("cone_interior_point: generators do not span");
    QVector s(c.ambient_dim, Rational(0));
    for (const auto& g : c.generators) s = add(s, normalize_primitive(g));
    return s;
}

inline std::vector<std::size_t> argmin_vertices(const ExactPolytope& p, const QVector& c) {
    std::vector<std::size_t> mins;
    Rational best;
    for (std::size_t i = 0; i < p.f0(); ++i) {
        Rational v = dot(c, p.vertices[i]);
        if (mins.empty() || v < best) {
            best = v;
            mins = {i};
        } else if (v == best) {
            mins.push_back(i);
        }
    }
    return mins;
}

inline Rational support_min(const ExactPolytope& p, const QVector& c) {
    Rational best = dot(c, p.vertices[0]);
    for (const auto& v : p.vertices) best = std::min(best, dot(c, v));
    return best;
}

inline Rational support_max(const ExactPolytope& p, const QVector& c) {
    Rational best = dot(c, p.vertices[0]);
    for (const auto& v : p.vertices) best = std::max(best, dot(c, v));
    return best;
}

namespace detail {

inline bool cones_equal(const Cone& a, const Cone& b) {
    for (const auto& g : a.generators)
        if (!cone_contains(b, g)) return false;
    for (const auto& g : b.generators)
        if (!cone_contains(a, g)) return false;
    return true;
}

} // namespace detail

// True iff there is a vertex bijection matching equal maximal normal cones.
// An interior normal of p minimizing at a non-vertex face of q means the fans
// differ along that direction.
inline bool fans_equal(const ExactPolytope& p, const ExactPolytope& q) {
    if (p.f0() != q.f0()) return false;
    auto directed = [](const ExactPolytope& a, const ExactPolytope& b) {
        for (std::size_t u = 0; u < a.f0(); ++u) {
            Cone na = normal_cone(a, u);
            auto mins = argmin_vertices(b, cone_interior_point(na));
            if (mins.size() != 1) return false;
            if (!detail::cones_equal(na, normal_cone(b, mins[0]))) return false;
        }
        return true;
    };
    return directed(p, q) && directed(q, p);
}

// True iff every maximal cone of p's fan sits inside some maximal cone of q's.
inline bool fan_refines(const ExactPolytope& p, const ExactPolytope& q) {
    for (std::size_t u = 0; u < p.f0(); ++u) {
        Cone np = normal_cone(p, u);
        auto mins = argmin_vertices(q, cone_interior_point(np));
        if (mins.size() != 1) return false;
        Cone nq = normal_cone(q, mins[0]);
        bool inside = true;
        for (const auto& g : np.generators)
            if (!cone_contains(nq, g)) { inside = false; break; }
        if (!inside) return false;
    }
    return true;
}

inline ExactPolytope intersect_halfspace(const ExactPolytope& p, const Halfspace& h) {
    std::vector<Halfspace> hs = p.facets;
    hs.push_back({normalize_primitive(h.normal), h.offset});
    // keep the scale of h consistent with its primitive normal
    for (std::size_t j = 0; j < h.normal.size(); ++j) {
        if (h.normal[j] != 0) {
            hs.back().offset = h.offset / (h.normal[j] / hs.back().normal[j]);
            break;
        }
    }
    try {
        auto verts = enumerate_vertices(hs, p.hull_equations);
        return hull_from_vertices(verts);
    } catch (const EmptyPolytope&) {
        throw EmptyPolytope("intersect_halfspace: empty intersection");
    }
}

inline ExactPolytope hyperplane_section(const ExactPolytope& p, const QVector& normal,
                                        const Rational& offset) {
    auto eqs = p.hull_equations;
    eqs.push_back({normal, offset});
    try {
        return hull_from_vertices(enumerate_vertices(p.facets, eqs));
    } catch (const EmptyPolytope&) {
        throw EmptySection("hyperplane_section: hyperplane misses the polytope");
    }
}

inline ExactPolytope translate(const ExactPolytope& p, const QVector& t) {
    ExactPolytope r = p;
    for (auto& v : r.vertices) v = add(v, t);
    for (auto& f : r.facets) f.offset += dot(f.normal, t);
    for (auto& e : r.hull_equations) e.second += dot(e.first, t);
    return r;
}

inline ExactPolytope scale_polytope(const ExactPolytope& p, const Rational& alpha) {
    assert(alpha > 0);
    ExactPolytope r = p;
    for (auto& v : r.vertices) v = scale(v, alpha);
    for (auto& f : r.facets) f.offset *= alpha;
    for (auto& e : r.hull_equations) e.second *= alpha;
    return r;
}

} // namespace polymink

#endif
