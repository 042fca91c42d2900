#ifndef POLYMINK_GENERATORS_HPP
#define POLYMINK_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polymink/graph.hpp"
#include "polymink/minkowski.hpp"
#include "polymink/polytope.hpp"

namespace polymink {

// Expected vs observed combinatorial counts gating a generated construction.
struct Census {
    struct Entry {
        std::string name;
        long long expected;
        long long observed;
    };
    std::vector<Entry> entries;

    void add(const std::string& name, long long expected, long long observed) {
        entries.push_back({name, expected, observed});
    }
    bool passes() const {
        for (const auto& e : entries)
            if (e.expected != e.observed) return false;
        return true;
    }
    std::string diff() const {
        std::ostringstream os;
        for (const auto& e : entries)
            if (e.expected != e.observed)
                os << e.name << ": expected " << e.expected << ", observed " << e.observed
                   << "; ";
        return os.str();
    }
    void require(const std::string& what) const {
        if (!passes()) throw CensusMismatch(what + ": " + diff());
    }
};

// ---------------------------------------------------------------------------
// Standard bodies

inline ExactPolytope point_polytope(std::size_t d) {
    return hull_from_vertices({zero_vector(d)});
}

inline ExactPolytope cube(std::size_t d) {
    if (d == 0) return point_polytope(1); // degenerate request; a point
    std::vector<QVector> pts;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
        QVector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = (mask >> j) & 1;
        pts.push_back(std::move(v));
    }
    return hull_from_vertices(std::move(pts));
}

inline ExactPolytope simplex(std::size_t d) {
    std::vector<QVector> pts{zero_vector(d)};
    for (std::size_t j = 0; j < d; ++j) {
        QVector v = zero_vector(d);
        v[j] = 1;
        pts.push_back(std::move(v));
    }
    return hull_from_vertices(std::move(pts));
}

// ---------------------------------------------------------------------------
// Rational convex-position circle polygons

// n rational points in strictly convex position on the unit circle, ccw from
// (1,0), via t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)). For even n the point set is
// centrally symmetric (used by the Xi family: the cut plane M then passes
// through the center).
inline std::vector<QVector> polygon_points(std::size_t n) {
    assert(n >= 3);
    const long denom = 4 * static_cast<long>(n) * static_cast<long>(n);
    auto circle_point = [](const Rational& t) {
        Rational t2 = t * t;
        return QVector{(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
    };
    auto t_for = [&](std::size_t i) {
        double tangent = std::tan(M_PI * static_cast<double>(i) / static_cast<double>(n));
        return Rational(static_cast<long>(std::llround(tangent * denom)), denom);
    };
    std::vector<QVector> pts;
    if (n % 2 == 0) {
        for (std::size_t i = 0; i < n / 2; ++i) pts.push_back(circle_point(t_for(i)));
        for (std::size_t i = 0; i < n / 2; ++i)
            pts.push_back(QVector{-pts[i][0], -pts[i][1]});
    } else {
        for (std::size_t i = 0; i < n; ++i) pts.push_back(circle_point(t_for(i)));
    }
    return pts;
}

inline ExactPolytope rational_polygon(std::size_t n) {
    auto pts = polygon_points(n);
    auto p = hull_from_vertices(pts);
    Census c;
    c.add("polygon vertices", static_cast<long long>(n), static_cast<long long>(p.f0()));
    c.require("rational_polygon");
    return p;
}

// ---------------------------------------------------------------------------
// Combinators

inline ExactPolytope product(const ExactPolytope& p, const ExactPolytope& q) {
    std::vector<QVector> pts;
    for (const auto& u : p.vertices) {
        for (const auto& v : q.vertices) {
            QVector w = u;
            w.insert(w.end(), v.begin(), v.end());
            pts.push_back(std::move(w));
        }
    }
    return hull_from_vertices(std::move(pts));
}

inline ExactPolytope segment(const QVector& v) {
    if (is_zero(v)) throw ZeroVector("segment: zero direction");
    return segment_polytope(v);
}

inline ExactPolytope prism(const ExactPolytope& p) { return product(p, segment({Rational(1)})); }

inline ExactPolytope pyramid(const ExactPolytope& p, const QVector& apex) {
    if (apex.size() != p.ambient_dim)
        throw std::invalid_argument("pyramid: apex dimension mismatch");
    QMatrix diffs;
    for (std::size_t i = 1; i < p.f0(); ++i)
        diffs.push_back(sub(p.vertices[i], p.vertices[0]));
    diffs.push_back(sub(apex, p.vertices[0]));
    if (rank(diffs) != p.intrinsic_dim + 1)
        throw ApexInAffineHull("pyramid: apex lies in the affine hull of the base");
    auto pts = p.vertices;
    pts.push_back(apex);
    return hull_from_vertices(std::move(pts));
}

// ---------------------------------------------------------------------------
// Families with prescribed dimension and diameter

// Polytope of dimension d and diameter exactly k (asserted by BFS).
inline ExactPolytope prop21(std::size_t d, std::size_t k) {
    assert(d >= 1 && k >= 1);
    ExactPolytope p;
    if (k == 1) {
        p = simplex(d);
    } else if (d == 1) {
        throw std::invalid_argument("prop21: no 1-dimensional polytope has diameter > 1");
    } else if (d == 2) {
        p = rational_polygon(2 * k + 1); // odd polygon: graph diameter k
    } else if (k >= d - 1) {
        p = product(rational_polygon(2 * (k - d) + 5), cube(d - 2));
    } else {
        p = product(simplex(d - k + 1), cube(k - 1));
    }
    assert(p.intrinsic_dim == d);
    assert(diameter(build_graph(p)).value == k);
    return p;
}

// Two d-dimensional pyramids of diameter 2 over a common base; the segment
// between the apices passes through the base's relative interior.
inline std::pair<ExactPolytope, ExactPolytope> prop22(std::size_t d, std::size_t k) {
    assert(d >= 3 && k >= 4);
    ExactPolytope base = prop21(d - 1, k - 2);
    std::vector<QVector> embedded;
    for (const auto& v : base.vertices) {
        QVector w = v;
        w.push_back(0);
        embedded.push_back(std::move(w));
    }
    ExactPolytope b = hull_from_vertices(embedded);
    QVector centroid = zero_vector(d);
    for (const auto& v : b.vertices) centroid = add(centroid, v);
    centroid = scale(centroid, Rational(1) / Rational(static_cast<long>(b.f0())));
    QVector apex_p = centroid, apex_q = centroid;
    apex_p[d - 1] = 1;
    apex_q[d - 1] = -1;
    ExactPolytope P = pyramid(b, apex_p);
    ExactPolytope Q = pyramid(b, apex_q);
    assert(diameter(build_graph(P)).value == 2);
    assert(diameter(build_graph(Q)).value == 2);
    return {P, Q};
}

// ---------------------------------------------------------------------------
// The Xi / Theta / Xi-tilde families

struct XiParams {
    long k = 5;
    long l = 4;                // even
    Rational eps{1, 10};       // red/green lift
    Rational H = 1;            // horizontal facet height
    Rational s{1, 5};          // quad-plane inward reach at height H
};

namespace detail {

// Rational vector of roughly unit length parallel to v.
inline QVector approx_unit(const QVector& v) {
    double n2 = 0;
    for (const auto& x : v) n2 += x.convert_to<double>() * x.convert_to<double>();
    const long denom = 1 << 20;
    Rational inv(static_cast<long>(std::llround(denom / std::sqrt(n2))), denom);
    return scale(v, inv);
}

// Base 2k-gon with edge 0 straddling the positive x axis: centrally symmetric
// AND mirror symmetric in the x axis. The mirror symmetry is load bearing:
// the cut plane M = {y = 0} through the midpoints of edges 0 and k then
// passes exactly through the on-axis chain vertices, rim junctions, and
// triangle apexes, which is what makes the section an octagon.
inline std::vector<QVector> xi_base_polygon(long k) {
    const long n = 2 * k;
    const long denom = 4 * n * n;
    // upper-half vertices b_1..b_k at angles (2j-1)*pi/(2k); reciprocal pairs
    // t -> 1/t realize the mirror x -> -x exactly
    std::vector<Rational> t(static_cast<std::size_t>(k) + 1);
    for (long j = 1; j <= k; ++j) {
        if (2 * j - 1 < k) {
            double half = (2.0 * j - 1.0) * M_PI / (4.0 * k);
            t[j] = Rational(static_cast<long>(std::llround(std::tan(half) * denom)), denom);
        } else if (2 * j - 1 == k) {
            t[j] = 1;
        } else {
            t[j] = Rational(1) / t[k + 1 - j];
        }
    }
    std::vector<QVector> pts(n);
    for (long j = 1; j <= k; ++j) {
        Rational t2 = t[j] * t[j];
        pts[j] = {(1 - t2) / (1 + t2), 2 * t[j] / (1 + t2)};
    }
    for (long j = k + 1; j < n; ++j) pts[j] = {-pts[j - k][0], -pts[j - k][1]};
    pts[0] = {-pts[k][0], -pts[k][1]};
    return pts;
}

struct XiData {
    XiParams params;
    std::vector<Halfspace> halfspaces; // 2 horizontal, 2k vertical, 2kl quad, 2k triangle
    std::vector<QVector> base; // 2D vertices of A, ccw, centrally symmetric
    ExactPolytope poly;
    Census census;

    long sigma(long i) const { return i % 2 == 0 ? 1 : -1; }

    // 3D chain point j/l along edge i, lifted by sigma_i * eps * j(l-j)
    QVector chain(long i, long j) const {
        const long n = 2 * params.k;
        const QVector& b1 = base[i % n];
        const QVector& b2 = base[(i + 1) % n];
        Rational f(j, params.l);
        QVector xy = add(scale(b1, 1 - f), scale(b2, f));
        Rational z = Rational(sigma(i)) * params.eps * Rational(j * (params.l - j));
        return {xy[0], xy[1], z};
    }
};

inline Halfspace oriented_through(const std::vector<QVector>& pts) {
    auto [a, b] = solve_affine(pts);
    if (b > 0) {
        for (auto& x : a) x = -x;
        b = -b;
    }
    if (b == 0) throw DegenerateSpan("oriented_through: plane passes through the origin");
    return {a, b};
}

// Floating-point feasibility screen for the rim depth factor beta: the rim
// depth must be small enough that end-quad planes clear the neighboring
// edges' vertices, yet large enough that the flanking planes of each triangle
// meet inward of its base edge. The window depends on (k, l, eps) in a way
// with no pleasant closed form, so candidate depths are screened against the
// full intended skeleton in doubles; the exact census remains the arbiter.
inline double screen_rim_depth(const std::vector<QVector>& base,
                               const std::vector<QVector>& inward, const XiParams& p) {
    const long n = 2 * p.k, l = p.l;
    const double H = p.H.convert_to<double>();
    const double eps = p.eps.convert_to<double>();
    struct P3 {
        double x, y, z;
    };
    std::vector<P3> b(n), inw(n);
    for (long i = 0; i < n; ++i) {
        b[i] = {base[i][0].convert_to<double>(), base[i][1].convert_to<double>(), 0};
        inw[i] = {inward[i][0].convert_to<double>(), inward[i][1].convert_to<double>(), 0};
    }
    auto sigma = [](long i) { return i % 2 == 0 ? 1.0 : -1.0; };
    auto chain = [&](long i, long j) -> P3 {
        double f = double(j) / l;
        return {b[i].x * (1 - f) + b[(i + 1) % n].x * f,
                b[i].y * (1 - f) + b[(i + 1) % n].y * f, sigma(i) * eps * j * (l - j)};
    };
    struct DPlane {
        double nx, ny, nz, off; // inside: n.v >= off, origin strictly inside
    };
    auto through = [](P3 p1, P3 p2, P3 p3) -> DPlane {
        double ux = p2.x - p1.x, uy = p2.y - p1.y, uz = p2.z - p1.z;
        double vx = p3.x - p1.x, vy = p3.y - p1.y, vz = p3.z - p1.z;
        double nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
        double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
        nx /= norm; ny /= norm; nz /= norm;
        double off = nx * p1.x + ny * p1.y + nz * p1.z;
        if (off > 0) { nx = -nx; ny = -ny; nz = -nz; off = -off; }
        return {nx, ny, nz, off};
    };

    auto trial = [&](double beta) -> bool {
        const std::size_t quad0 = 2 + static_cast<std::size_t>(n);
        const std::size_t tri0 = quad0 + static_cast<std::size_t>(n * l);
        std::vector<DPlane> planes(tri0 + n);
        planes[0] = {0, 0, 1, -H};
        planes[1] = {0, 0, -1, -H};
        for (long i = 0; i < n; ++i)
            planes[2 + i] = {inw[i].x, inw[i].y, 0, inw[i].x * b[i].x + inw[i].y * b[i].y};
        auto rim = [&](long i, long j) -> P3 {
            P3 c = chain(i, j);
            double depth = beta * (H - std::abs(c.z));
            return {c.x + depth * inw[i].x, c.y + depth * inw[i].y, sigma(i) * H};
        };
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < l; ++j)
                planes[quad0 + i * l + j] =
                    through(chain(i, j), chain(i, j + 1), rim(i, std::max(j, 1L)));
        std::vector<P3> apex(n);
        for (long i = 0; i < n; ++i) {
            const DPlane& qa = planes[quad0 + ((i + n - 1) % n) * l + (l - 1)];
            const DPlane& qb = planes[quad0 + ((i + 1) % n) * l];
            double z = -sigma(i) * H;
            double r1 = qa.off - qa.nz * z, r2 = qb.off - qb.nz * z;
            double det = qa.nx * qb.ny - qa.ny * qb.nx;
            if (std::abs(det) < 1e-14) return false;
            apex[i] = {(r1 * qb.ny - r2 * qa.ny) / det, (qa.nx * r2 - qb.nx * r1) / det, z};
            planes[tri0 + i] = through(b[i], b[(i + 1) % n], apex[i]);
        }
        // intended vertices with their incident planes
        std::vector<std::pair<P3, std::vector<std::size_t>>> pts;
        for (long i = 0; i < n; ++i) {
            long prev = (i + n - 1) % n;
            pts.push_back({b[i],
                           {2 + static_cast<std::size_t>(prev), 2 + static_cast<std::size_t>(i),
                            quad0 + static_cast<std::size_t>(i * l),
                            quad0 + static_cast<std::size_t>(prev * l + (l - 1)),
                            tri0 + static_cast<std::size_t>(prev),
                            tri0 + static_cast<std::size_t>(i)}});
            for (long j = 1; j < l; ++j) {
                pts.push_back({chain(i, j),
                               {2 + static_cast<std::size_t>(i),
                                quad0 + static_cast<std::size_t>(i * l + j - 1),
                                quad0 + static_cast<std::size_t>(i * l + j)}});
                pts.push_back({rim(i, j),
                               {static_cast<std::size_t>(i % 2 == 0 ? 1 : 0),
                                quad0 + static_cast<std::size_t>(i * l + j - 1),
                                quad0 + static_cast<std::size_t>(i * l + j)}});
            }
            pts.push_back({apex[i],
                           {static_cast<std::size_t>(i % 2 == 0 ? 0 : 1),
                            quad0 + static_cast<std::size_t>(((i + n - 1) % n) * l + (l - 1)),
                            quad0 + static_cast<std::size_t>(((i + 1) % n) * l),
                            tri0 + static_cast<std::size_t>(i)}});
        }
        for (const auto& [v, inc] : pts) {
            for (std::size_t h = 0; h < planes.size(); ++h) {
                double dist = planes[h].nx * v.x + planes[h].ny * v.y + planes[h].nz * v.z -
                              planes[h].off;
                bool incident = std::find(inc.begin(), inc.end(), h) != inc.end();
                if (incident ? std::abs(dist) > 1e-9 : dist < 1e-9) return false;
            }
        }
        return true;
    };

    std::vector<double> passing;
    for (double beta = 0.9; beta > 1e-9; beta *= 0.85)
        if (trial(beta)) passing.push_back(beta);
    if (passing.empty()) return 0.25; // census will report the failure exactly
    return passing[passing.size() / 2];
}

inline XiData build_xi(const XiParams& p) {
    if (p.k < 3 || p.l < 4 || p.l % 2 != 0)
        throw std::invalid_argument("xi: need k >= 3 and even l >= 4");
    if (!(p.eps > 0) || !(p.eps * p.l * p.l < 4 * p.H))
        throw std::invalid_argument("xi: need 0 < eps*l^2/4 < H");
    XiData d;
    d.params = p;
    d.base = xi_base_polygon(p.k);
    const long n = 2 * p.k;
    const long l = p.l;

    std::vector<Halfspace> hs;
    hs.push_back({{0, 0, 1}, -p.H});  // z >= -H
    hs.push_back({{0, 0, -1}, -p.H}); // z <= H

    std::vector<QVector> inward(n); // 2D inward edge normals, roughly unit
    for (long i = 0; i < n; ++i) {
        QVector t = sub(d.base[(i + 1) % n], d.base[i]);
        QVector inw{-t[1], t[0]}; // left normal of a ccw edge points inward
        if (dot(inw, d.base[i]) > 0) inw = {t[1], -t[0]};
        inward[i] = approx_unit(inw);
        if (!(p.s * p.s * dot(inward[i], inward[i]) <
              dot(inward[i], d.base[i]) * dot(inward[i], d.base[i])))
            throw std::invalid_argument("xi: s must be below the inradius of A");
        QVector a3{inward[i][0], inward[i][1], 0};
        hs.push_back({a3, dot(a3, QVector{d.base[i][0], d.base[i][1], 0})});
    }

    // Quad planes: through each chain edge and the rim junction above a chain
    // vertex, pushed inward by beta*(H-|z|) at the horizontal facet the
    // chain's side reaches. With that depth profile the four points p_j,
    // p_{j+1}, g_j, g_{j+1} of every interior quad are exactly coplanar, so
    // the rim of grey junctions is explicit rather than derived from plane
    // intersections. The depth factor beta is screened in doubles (it only
    // steers the choice; the census validates the exact outcome).
    Rational beta;
    {
        const double chosen = screen_rim_depth(d.base, inward, p);
        const long denom = 1 << 28;
        beta = Rational(std::max(1L, static_cast<long>(chosen * denom)), denom);
    }
    std::vector<std::vector<Halfspace>> quad(n);
    for (long i = 0; i < n; ++i) {
        auto rim = [&](long j) {
            QVector c = d.chain(i, j);
            Rational depth = beta * (p.H - boost::multiprecision::abs(c[2]));
            return QVector{c[0] + depth * inward[i][0], c[1] + depth * inward[i][1],
                           Rational(d.sigma(i)) * p.H};
        };
        quad[i].resize(l);
        for (long j = 0; j < l; ++j) {
            QVector c1 = d.chain(i, j), c2 = d.chain(i, j + 1);
            quad[i][j] = oriented_through({c1, c2, rim(std::max(j, 1L))});
            hs.push_back(quad[i][j]);
        }
    }

    // Triangle planes: through each base edge and the apex where the two
    // flanking quad planes meet the opposite horizontal facet. The shared
    // incidences are exact by construction.
    for (long i = 0; i < n; ++i) {
        const Halfspace& qa = quad[(i + n - 1) % n][l - 1];
        const Halfspace& qb = quad[(i + 1) % n][0];
        QMatrix sys{qa.normal, qb.normal, {0, 0, 1}};
        QVector rhs{qa.offset, qb.offset, Rational(-d.sigma(i)) * p.H};
        auto apex = solve_linear(sys, rhs);
        if (!apex) throw DegenerateSpan("xi: flanking quad planes are parallel");
        QVector b1{d.base[i][0], d.base[i][1], 0};
        QVector b2{d.base[(i + 1) % n][0], d.base[(i + 1) % n][1], 0};
        hs.push_back(oriented_through({b1, b2, *apex}));
    }

    d.halfspaces = hs;
    d.poly = vertices_from_halfspaces(hs);

    // Census: vertex classes by height, facet types by direction and size.
    long long blue = 0, red = 0, green = 0, grey = 0;
    for (const auto& v : d.poly.vertices) {
        if (v[2] == 0) ++blue;
        else if (v[2] == p.H || v[2] == -p.H) ++grey;
        else if (v[2] > 0) ++red;
        else ++green;
    }
    Census& c = d.census;
    c.add("vertices", 4LL * p.k * l, static_cast<long long>(d.poly.f0()));
    c.add("blue vertices", 2LL * p.k, blue);
    c.add("red vertices", 1LL * p.k * (l - 1), red);
    c.add("green vertices", 1LL * p.k * (l - 1), green);
    c.add("grey vertices", 2LL * p.k * l, grey);

    std::vector<long long> facet_sizes(d.poly.facets.size(), 0);
    for (const auto& inc : d.poly.incidence)
        for (std::size_t f = inc.find_first(); f != Bitset::npos; f = inc.find_next(f))
            ++facet_sizes[f];
    long long horizontal = 0, vertical = 0, triangles = 0, quads = 0, other = 0;
    bool horizontal_ok = true, vertical_ok = true;
    for (std::size_t f = 0; f < d.poly.facets.size(); ++f) {
        const auto& nrm = d.poly.facets[f].normal;
        if (nrm[0] == 0 && nrm[1] == 0) {
            ++horizontal;
            if (facet_sizes[f] != 1LL * p.k * l) horizontal_ok = false;
        } else if (nrm[2] == 0) {
            ++vertical;
            if (facet_sizes[f] != l + 1) vertical_ok = false;
        } else if (facet_sizes[f] == 3) {
            ++triangles;
        } else if (facet_sizes[f] == 4) {
            ++quads;
        } else {
            ++other;
        }
    }
    c.add("horizontal facets", 2, horizontal);
    c.add("horizontal facets with kl vertices", 1, horizontal_ok ? 1 : 0);
    c.add("vertical facets", 2LL * p.k, vertical);
    c.add("vertical facets with l+1 vertices", 1, vertical_ok ? 1 : 0);
    c.add("triangle facets", 2LL * p.k, triangles);
    c.add("quadrilateral facets", 2LL * p.k * l, quads);
    c.add("other facets", 0, other);
    return d;
}

} // namespace detail

inline std::pair<ExactPolytope, Census> xi(const XiParams& params) {
    auto d = detail::build_xi(params);
    d.census.require("xi(" + std::to_string(params.k) + "," + std::to_string(params.l) + ")");
    return {d.poly, d.census};
}

// Vertical polygon with m+1 vertices: a unit vertical edge e plus m-1 bulge
// vertices at heights j/m, pushed off by eps_bulge*j(m-j) along direction d2.
struct PiParams {
    long m = 2;
    Rational eps_bulge{1, 100};
    QVector direction; // 2D horizontal direction of the bulges
};

inline ExactPolytope pi_polygon(const PiParams& p) {
    assert(p.m >= 2);
    std::vector<QVector> pts{{0, 0, 0}, {0, 0, 1}};
    for (long j = 1; j < p.m; ++j) {
        Rational c = p.eps_bulge * Rational(j * (p.m - j));
        pts.push_back({c * p.direction[0], c * p.direction[1], Rational(j, p.m)});
    }
    auto poly = hull_from_vertices(pts);
    if (poly.f0() != static_cast<std::size_t>(p.m + 1) || poly.intrinsic_dim != 2)
        throw NonConvexBulge("pi_polygon: bulge vertices not in strictly convex position");
    return poly;
}

struct ThetaResult {
    ExactPolytope poly;
    Census census;
    ExactPolytope octagon;
    QVector m_normal;    // 3D normal of the cut plane M (M = {m_normal.x = 0})
    QVector apex;        // the pyramid apex a
    detail::XiData xi;   // the underlying Xi build
};

namespace detail {

inline ThetaResult build_theta(long k, long l) {
    XiParams xp;
    xp.k = k;
    xp.l = l;
    xp.eps = std::min(Rational(1, 10), Rational(1, l * l));
    XiData xd = build_xi(xp);
    xd.census.require("theta: underlying xi(" + std::to_string(k) + "," +
                      std::to_string(l) + ")");

    ThetaResult t;
    t.xi = xd;
    const long n = 2 * k;
    QVector m0 = scale(add(xd.base[0], xd.base[1]), Rational(1, 2));
    QVector n2{-m0[1], m0[0]};
    if (dot(n2, xd.base[1]) < 0) n2 = {m0[1], -m0[0]};
    t.m_normal = {n2[0], n2[1], 0};

    t.octagon = hyperplane_section(xd.poly, t.m_normal, 0);
    long long oct_red = 0, oct_green = 0;
    for (const auto& v : t.octagon.vertices) {
        if (v[2] > 0 && v[2] < xp.H) ++oct_red;
        else if (v[2] < 0 && v[2] > -xp.H) ++oct_green;
    }

    // Kept side: m_normal . x <= 0; the apex sits on the removed side with
    // its projection on M at the center of A.
    std::vector<QVector> pts;
    for (const auto& v : xd.poly.vertices)
        if (dot(t.m_normal, v) < 0) pts.push_back(v);
    for (const auto& v : t.octagon.vertices) pts.push_back(v);
    t.apex = {2 * n2[0], 2 * n2[1], 0};
    pts.push_back(t.apex);
    t.poly = hull_from_vertices(pts);

    // Gates: the octagon section, its chain-vertex colors (paper parity), and
    // the k+3-gon horizontal projection.
    Census& c = t.census;
    c.add("octagon vertices", 8, static_cast<long long>(t.octagon.f0()));
    c.add("octagon red vertices", k % 2 == 0 ? 2 : 1, oct_red);
    c.add("octagon green vertices", k % 2 == 0 ? 0 : 1, oct_green);
    std::vector<QVector> shadow;
    for (const auto& v : t.poly.vertices) shadow.push_back({v[0], v[1]});
    auto proj = hull_from_vertices(shadow);
    c.add("projection vertices", k + 3, static_cast<long long>(proj.f0()));
    (void)n;
    return t;
}

} // namespace detail

inline ThetaResult theta(long k, long l) {
    auto t = detail::build_theta(k, l);
    t.census.require("theta(" + std::to_string(k) + "," + std::to_string(l) + ")");
    return t;
}

struct XiTildeResult {
    ExactPolytope poly;
    Census census;
    ExactPolytope pi;    // the matching summand polygon, |e| = 1
    ThetaResult theta;
};

// Glue homothetic translates of Pi to the vertical facets that have no vertex
// in M: one translate per chain vertex, scaled to the vertical segment from
// that vertex to the facet's horizontal edge.
inline XiTildeResult xi_tilde(long k, long l, long m, Rational eps_bulge = Rational(1, 100)) {
    assert(m >= 2 && l % 2 == 0);
    XiTildeResult r;
    r.theta = detail::build_theta(k, l);
    r.theta.census.require("xi_tilde: underlying theta");
    const auto& xd = r.theta.xi;
    const long n = 2 * k;

    QVector d2{-r.theta.m_normal[0], -r.theta.m_normal[1]}; // away from the apex
    PiParams pp;
    pp.m = m;
    pp.eps_bulge = eps_bulge;
    pp.direction = d2;
    r.pi = pi_polygon(pp);

    std::vector<QVector> pts = r.theta.poly.vertices;
    long long bumps = 0;
    for (long i = k + 1; i < n; ++i) { // kept vertical facets, no vertex in M
        for (long j = 1; j < l; ++j) {
            QVector v = xd.chain(i, j);
            Rational zlen = boost::multiprecision::abs(v[2]);
            for (long t = 1; t < m; ++t) {
                Rational c = eps_bulge * Rational(t * (m - t)) * zlen;
                pts.push_back({v[0] + c * d2[0], v[1] + c * d2[1],
                               Rational(t, m) * v[2]});
                ++bumps;
            }
        }
    }
    r.poly = hull_from_vertices(pts);
    r.census.add("new vertices",
                 1LL * (k - 1) * (l - 1) * (m - 1),
                 static_cast<long long>(r.poly.f0()) -
                     static_cast<long long>(r.theta.poly.f0()));
    r.census.add("bump count", 1LL * (k - 1) * (l - 1) * (m - 1), bumps);
    r.census.require("xi_tilde(" + std::to_string(k) + "," + std::to_string(l) + "," +
                     std::to_string(m) + ")");
    return r;
}

// ---------------------------------------------------------------------------
// Seeded random instances

inline ExactPolytope random_polytope(std::size_t d, std::size_t n, long coord_bound,
                                     std::uint64_t seed) {
    assert(n >= d + 1);
    for (;;) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> dist(-coord_bound, coord_bound);
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            QVector v(d);
            for (auto& x : v) x = dist(rng);
            pts.push_back(std::move(v));
        }
        auto p = hull_from_vertices(pts);
        if (p.intrinsic_dim == d) return p;
        ++seed;
    }
}

} // namespace polymink

#endif
