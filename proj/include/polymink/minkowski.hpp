#ifndef POLYMINK_MINKOWSKI_HPP
#define POLYMINK_MINKOWSKI_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "polymink/graph.hpp"
#include "polymink/polytope.hpp"

namespace polymink {

// Minkowski sum polytope plus the map from each sum vertex to its unique
// summand pair of vertices.
struct SumResult {
    ExactPolytope sum;
    std::vector<std::pair<std::size_t, std::size_t>> decomposition; // (in p, in q)
};

namespace detail {

// Relative-interior normal at a vertex: sum of the active facet normals.
// It is minimized over the polytope exactly at that vertex.
inline QVector vertex_interior_normal(const ExactPolytope& p, std::size_t v) {
    QVector c(p.ambient_dim, Rational(0));
    for (std::size_t f = p.incidence[v].find_first(); f != Bitset::npos;
         f = p.incidence[v].find_next(f))
        c = add(c, p.facets[f].normal);
    return c;
}

inline std::size_t vertex_index(const ExactPolytope& p, const QVector& v) {
    auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), v, lex_less);
    if (it == p.vertices.end() || *it != v)
        throw std::logic_error("vertex_index: point is not a vertex");
    return static_cast<std::size_t>(it - p.vertices.begin());
}

} // namespace detail

// Hull of the pairwise vertex sums; the decomposition map is recovered via
// interior normals of the sum's own cones rather than by coordinate matching,
// so coincidental equal sums of non-vertex candidates cannot corrupt it.
inline SumResult minkowski_sum(const ExactPolytope& p, const ExactPolytope& q) {
    assert(p.ambient_dim == q.ambient_dim);
    std::vector<QVector> candidates;
    candidates.reserve(p.f0() * q.f0());
    for (const auto& u : p.vertices)
        for (const auto& v : q.vertices) candidates.push_back(add(u, v));

    SumResult r;
    r.sum = hull_from_vertices(std::move(candidates));
    r.decomposition.reserve(r.sum.f0());
    for (std::size_t w = 0; w < r.sum.f0(); ++w) {
        QVector c = detail::vertex_interior_normal(r.sum, w);
        auto mp = argmin_vertices(p, c);
        auto mq = argmin_vertices(q, c);
        if (mp.size() != 1 || mq.size() != 1)
            throw DecompositionFailure("minkowski_sum: non-unique minimizer");
        if (add(p.vertices[mp[0]], q.vertices[mq[0]]) != r.sum.vertices[w])
            throw DecompositionFailure("minkowski_sum: decomposition does not sum");
        r.decomposition.push_back({mp[0], mq[0]});
    }
    return r;
}

using PhiMap = std::vector<std::size_t>; // p-vertex index -> sum-vertex index

// Injection u -> u + argmin_q(c) with c drawn from the relative interior of
// N_p(u) and deterministically perturbed until generic for q's fan. Walls are
// finitely many, so the perturbation loop terminates.
inline PhiMap phi_injection(const ExactPolytope& p, const ExactPolytope& q,
                            const SumResult& s) {
    PhiMap phi(p.f0());
    for (std::size_t u = 0; u < p.f0(); ++u) {
        QVector base = detail::vertex_interior_normal(p, u);
        QVector chosen;
        bool found = false;
        for (int j = 0; j <= 200 && !found; ++j) {
            for (int k = 1; k <= (j == 0 ? 1 : j) && !found; ++k) {
                QVector c = base;
                if (j > 0) {
                    Rational eps = Rational(1) / (Int(1) << j);
                    Rational t = 1;
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        c[i] += eps * t;
                        t *= k + 1;
                    }
                }
                auto mp = argmin_vertices(p, c);
                if (mp.size() == 1 && mp[0] == u && argmin_vertices(q, c).size() == 1) {
                    chosen = std::move(c);
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("phi_injection: perturbation failed");
        std::size_t v = argmin_vertices(q, chosen)[0];
        phi[u] = detail::vertex_index(s.sum, add(p.vertices[u], q.vertices[v]));
    }
    std::vector<std::size_t> img = phi;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
        throw std::logic_error("phi_injection: map is not injective");
    return phi;
}

inline PhiMap phi_injection(const ExactPolytope& p, const ExactPolytope& q) {
    return phi_injection(p, q, minkowski_sum(p, q));
}

// Gamma subgraph of Definition-style decomposition classes: the sum vertices
// whose P-part is u, with the adjacency induced from the sum's graph.
inline GammaGraph gamma_subgraph(const SumResult& s, const PolytopeGraph& sum_graph,
                                 std::size_t u) {
    GammaGraph g;
    g.base_vertex = u;
    std::map<std::size_t, std::size_t> local;
    for (std::size_t w = 0; w < s.sum.f0(); ++w) {
        if (s.decomposition[w].first == u) {
            local[w] = g.members.size();
            g.members.push_back(w);
        }
    }
    g.graph.vertex_count = g.members.size();
    g.graph.adjacency.resize(g.members.size());
    for (std::size_t i = 0; i < g.members.size(); ++i) {
        for (std::size_t nb : sum_graph.adjacency[g.members[i]]) {
            auto it = local.find(nb);
            if (it != local.end()) g.graph.adjacency[i].push_back(it->second);
        }
    }
    return g;
}

inline GammaGraph gamma_subgraph(const SumResult& s, std::size_t u) {
    return gamma_subgraph(s, build_graph(s.sum), u);
}

// Minkowski difference {x : x + q is contained in p}, via vertex-support
// minima of q over each facet (and hull equation) of p.
inline ExactPolytope erosion(const ExactPolytope& p, const ExactPolytope& q) {
    assert(p.ambient_dim == q.ambient_dim);
    std::vector<Halfspace> hs;
    for (const auto& f : p.facets)
        hs.push_back({f.normal, f.offset - support_min(q, f.normal)});
    std::vector<std::pair<QVector, Rational>> eqs;
    for (const auto& e : p.hull_equations) {
        Rational lo = support_min(q, e.first), hi = support_max(q, e.first);
        if (lo != hi) throw EmptyErosion("erosion: q not parallel to p's affine hull");
        eqs.push_back({e.first, e.second - lo});
    }
    try {
        return hull_from_vertices(enumerate_vertices(hs, eqs));
    } catch (const EmptyPolytope&) {
        throw EmptyErosion("erosion: empty difference");
    }
}

// Q is a summand of P iff (P erode Q) + Q reproduces P's vertex set exactly.
inline bool is_summand(const ExactPolytope& p, const ExactPolytope& q) {
    ExactPolytope rem;
    try {
        rem = erosion(p, q);
    } catch (const EmptyErosion&) {
        return false;
    }
    auto s = minkowski_sum(rem, q);
    return s.sum.vertices == p.vertices;
}

// Vertex-count criterion: P has a summand homothetic to Q iff P and P+Q have
// the same number of vertices.
inline bool has_homothetic_summand(const ExactPolytope& p, const ExactPolytope& q) {
    return minkowski_sum(p, q).sum.f0() == p.f0();
}

struct ScaleResult {
    Rational alpha_lo = 0;
    Rational alpha_hi = 0;
    bool certified = false;
};

// Certified bracket for the maximal alpha with alpha*Q a summand of P, by
// dyadic bisection; alpha = 0 always passes (a point is a trivial summand).
inline ScaleResult max_summand_scale(const ExactPolytope& p, const ExactPolytope& q,
                                     const Rational& tolerance) {
    assert(tolerance > 0);
    // Support-width cap: alpha*Q summand forces alpha*width_q <= width_p.
    bool capped = false;
    Rational cap = 0;
    for (const auto& f : p.facets) {
        Rational wq = support_max(q, f.normal) - support_min(q, f.normal);
        if (wq == 0) continue;
        Rational wp = support_max(p, f.normal) - support_min(p, f.normal);
        Rational ratio = wp / wq;
        if (!capped || ratio < cap) { cap = ratio; capped = true; }
    }
    if (!capped) return {0, 0, false}; // q is a point: every alpha passes

    Rational hi = 1;
    while (hi <= cap) hi *= 2;
    Rational lo = 0;
    auto passes = [&](const Rational& alpha) {
        if (alpha == 0) return true;
        return is_summand(p, scale_polytope(q, alpha));
    };
    assert(!passes(hi));
    while (hi - lo > tolerance) {
        Rational mid = (lo + hi) / 2;
        if (passes(mid)) lo = mid;
        else hi = mid;
    }
    return {lo, hi, true};
}

struct DirectionClass {
    QVector direction; // canonical primitive
    std::vector<std::pair<std::size_t, std::size_t>> edge_list;
    Rational min_length_sq;
    QVector min_edge_vector; // actual shortest edge vector of the class
};

// Edges grouped by primitive direction with canonical sign; squared lengths
// keep everything rational.
inline std::vector<DirectionClass> edge_direction_classes(const ExactPolytope& p) {
    std::vector<DirectionClass> classes;
    for (const auto& [u, v] : edges(p)) {
        QVector e = sub(p.vertices[v], p.vertices[u]);
        QVector dir = canonical_direction(e);
        Rational len = dot(e, e);
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const DirectionClass& c) { return c.direction == dir; });
        if (it == classes.end()) {
            classes.push_back({dir, {{u, v}}, len, e});
        } else {
            it->edge_list.push_back({u, v});
            if (len < it->min_length_sq) {
                it->min_length_sq = len;
                it->min_edge_vector = e;
            }
        }
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return lex_less(a.direction, b.direction);
    });
    return classes;
}

struct ZonotopeResult {
    bool zonotope = false;
    std::vector<std::pair<QVector, Rational>> generators; // (direction, scale)
};

inline ExactPolytope segment_polytope(const QVector& v) {
    return hull_from_vertices({zero_vector(v.size()), v});
}

// Peeling loop: repeatedly erode by the minimal edge of the lexicographically
// smallest direction class; a zonotope peels down to a point.
inline ZonotopeResult is_zonotope(const ExactPolytope& p) {
    ZonotopeResult r;
    ExactPolytope cur = p;
    std::size_t guard = edges(p).size() + p.ambient_dim + 1;
    while (cur.intrinsic_dim > 0) {
        if (guard-- == 0)
            throw std::logic_error("is_zonotope: peeling failed to terminate");
        auto classes = edge_direction_classes(cur);
        const auto& cls = classes.front();
        ExactPolytope seg = segment_polytope(cls.min_edge_vector);
        if (!is_summand(cur, seg)) return {false, {}};
        Rational scale_factor = 0;
        for (std::size_t j = 0; j < cls.direction.size(); ++j) {
            if (cls.direction[j] != 0) {
                scale_factor = cls.min_edge_vector[j] / cls.direction[j];
                break;
            }
        }
        r.generators.push_back({cls.direction, boost::multiprecision::abs(scale_factor)});
        cur = erosion(cur, seg);
    }
    r.zonotope = true;
    return r;
}

// The vertex-count diagnostic run per edge-direction class: the sum of p with
// each of its edges (up to parallelism) keeps f0 unchanged exactly on the
// zonotope directions.
inline std::vector<std::pair<QVector, bool>> per_direction_summand_test(
    const ExactPolytope& p) {
    std::vector<std::pair<QVector, bool>> out;
    for (const auto& cls : edge_direction_classes(p)) {
        ExactPolytope seg = segment_polytope(cls.min_edge_vector);
        out.push_back({cls.direction, has_homothetic_summand(p, seg)});
    }
    return out;
}

} // namespace polymink

#endif
