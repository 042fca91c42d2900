#ifndef POLYMINK_VERIFY_HPP
#define POLYMINK_VERIFY_HPP

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polymink/generators.hpp"
#include "polymink/graph.hpp"
#include "polymink/minkowski.hpp"
#include "polymink/polytope.hpp"

namespace polymink {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // numbers, vertex pairs, geodesics backing the verdict
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks)
            checks.push_back({other.suite + "/" + c.name, c.pass, c.witness});
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "suite,check,status,witness\n";
        for (const auto& c : checks) {
            std::string w = c.witness;
            for (auto& ch : w)
                if (ch == ',' || ch == '\n') ch = ';';
            os << suite << "," << c.name << "," << (c.pass ? "pass" : "FAIL") << "," << w
               << "\n";
        }
        return os.str();
    }
    std::string to_json() const {
        auto esc = [](const std::string& s) {
            std::string o;
            for (char ch : s) {
                if (ch == '"' || ch == '\\') o += '\\';
                if (ch == '\n') { o += "\\n"; continue; }
                o += ch;
            }
            return o;
        };
        std::ostringstream os;
        os << "{\n  \"suite\": \"" << esc(suite) << "\",\n  \"seed\": " << seed
           << ",\n  \"all_pass\": " << (all_pass() ? "true" : "false")
           << ",\n  \"checks\": [\n";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            os << "    {\"name\": \"" << esc(checks[i].name) << "\", \"pass\": "
               << (checks[i].pass ? "true" : "false") << ", \"witness\": \""
               << esc(checks[i].witness) << "\"}" << (i + 1 < checks.size() ? "," : "")
               << "\n";
        }
        os << "  ]\n}\n";
        return os.str();
    }
};

namespace detail {

inline std::string pair_str(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace detail

// Diameter bounds on one sum instance: the max lower bound, the strict
// vertex-count upper bound, the coarse product bound, and the geodesic
// decomposition inequality with an explicit witness path.
inline VerificationReport check_diameter_bounds(const ExactPolytope& p,
                                                const ExactPolytope& q) {
    VerificationReport r;
    r.suite = "diameter_bounds";
    auto s = minkowski_sum(p, q);
    auto gp = build_graph(p);
    auto gq = build_graph(q);
    auto gs = build_graph(s.sum);
    auto dp = diameter(gp), dq = diameter(gq), ds = diameter(gs);

    std::string sizes = "dP=" + std::to_string(dp.value) + " dQ=" + std::to_string(dq.value) +
                        " dS=" + std::to_string(ds.value) + " f0P=" + std::to_string(p.f0()) +
                        " f0Q=" + std::to_string(q.f0());
    r.add("lower_bound_max", ds.value >= std::max(dp.value, dq.value), sizes);
    std::size_t ub = std::min((dp.value + 1) * q.f0(), p.f0() * (dq.value + 1));
    r.add("strict_upper_bound", ds.value < ub,
          sizes + " bound=" + std::to_string(ub));
    r.add("coarse_product_bound", ds.value < p.f0() * q.f0(), sizes);

    // Geodesic inequality: realize the sum diameter by a vertex pair, take the
    // P-parts u, v, a geodesic u = w^0 .. w^l = v in P, and bound dS by
    // l + sum of the Gamma-subgraph diameters along the path.
    std::size_t u = s.decomposition[ds.witness.first].first;
    std::size_t v = s.decomposition[ds.witness.second].first;
    auto path = geodesic(gp, u, v);
    std::size_t rhs = path.size() - 1;
    for (std::size_t w : path) {
        auto g = gamma_subgraph(s, gs, w);
        rhs += diameter(g.graph).value;
    }
    std::ostringstream w;
    w << "pair=" << detail::pair_str(ds.witness.first, ds.witness.second) << " path_len="
      << path.size() - 1 << " rhs=" << rhs;
    r.add("geodesic_decomposition_bound", ds.value <= rhs, w.str());
    return r;
}

// Structural facts about one sum: edge projection, the vertex injection,
// connectivity of every Gamma subgraph, the adjacency transfer in both
// directions, and normal-fan refinement against both summands.
inline VerificationReport check_structure_lemmas(const ExactPolytope& p,
                                                 const ExactPolytope& q) {
    VerificationReport r;
    r.suite = "structure_lemmas";
    auto s = minkowski_sum(p, q);
    auto gp = build_graph(p);
    auto gs = build_graph(s.sum);

    // (a) each sum edge projects to equal-or-adjacent parts in each summand
    auto ep = edges(p);
    auto eq = edges(q);
    std::set<std::pair<std::size_t, std::size_t>> pe(ep.begin(), ep.end());
    std::set<std::pair<std::size_t, std::size_t>> qe(eq.begin(), eq.end());
    auto adjacent_or_equal = [](const std::set<std::pair<std::size_t, std::size_t>>& es,
                                std::size_t a, std::size_t b) {
        if (a == b) return true;
        if (a > b) std::swap(a, b);
        return es.count({a, b}) > 0;
    };
    bool proj_ok = true;
    std::string proj_witness;
    for (const auto& [w1, w2] : edges(s.sum)) {
        auto [u1, v1] = s.decomposition[w1];
        auto [u2, v2] = s.decomposition[w2];
        if (!adjacent_or_equal(pe, u1, u2) || !adjacent_or_equal(qe, v1, v2) ||
            (u1 == u2 && v1 == v2)) {
            proj_ok = false;
            proj_witness = "sum edge " + detail::pair_str(w1, w2);
            break;
        }
    }
    r.add("edge_projection", proj_ok, proj_witness);

    // (b) the injection u -> u + (generic q-minimizer) lands on vertices with
    // the right decomposition
    bool phi_ok = true;
    std::string phi_witness;
    try {
        auto phi = phi_injection(p, q, s);
        for (std::size_t u = 0; u < p.f0(); ++u) {
            if (s.decomposition[phi[u]].first != u) {
                phi_ok = false;
                phi_witness = "u=" + std::to_string(u);
                break;
            }
        }
    } catch (const std::exception& e) {
        phi_ok = false;
        phi_witness = e.what();
    }
    r.add("vertex_injection", phi_ok, phi_witness);

    // (c) every Gamma subgraph is nonempty and connected
    bool gamma_ok = true;
    std::string gamma_witness;
    std::vector<GammaGraph> gammas;
    for (std::size_t u = 0; u < p.f0(); ++u) {
        gammas.push_back(gamma_subgraph(s, gs, u));
        if (gammas.back().members.empty() || !is_connected(gammas.back().graph)) {
            gamma_ok = false;
            gamma_witness = "u=" + std::to_string(u);
        }
    }
    r.add("gamma_connected", gamma_ok, gamma_witness);

    // (d) u~v in P iff some sum edge joins Gamma(u) and Gamma(v)
    bool transfer_ok = true;
    std::string transfer_witness;
    std::vector<std::vector<bool>> joined(p.f0(), std::vector<bool>(p.f0(), false));
    for (const auto& [w1, w2] : edges(s.sum)) {
        std::size_t a = s.decomposition[w1].first, b = s.decomposition[w2].first;
        if (a != b) {
            joined[a][b] = true;
            joined[b][a] = true;
        }
    }
    for (std::size_t u = 0; u < p.f0() && transfer_ok; ++u) {
        for (std::size_t v = u + 1; v < p.f0(); ++v) {
            bool adj = pe.count({u, v}) > 0;
            if (adj != joined[u][v]) {
                transfer_ok = false;
                transfer_witness = "pair " + detail::pair_str(u, v);
                break;
            }
        }
    }
    r.add("adjacency_transfer", transfer_ok, transfer_witness);

    // (e) the sum's normal fan refines each summand's
    r.add("fan_refines_p", fan_refines(s.sum, p));
    r.add("fan_refines_q", fan_refines(s.sum, q));
    return r;
}

// Two independent decomposability routes must agree: the vertex-count test
// against the erosion-based scale bracket, on planted positives and on
// generic pairs.
inline VerificationReport check_decomposability(std::size_t trials, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "decomposability";
    r.seed = seed;
    assert(trials >= 1);
    const Rational tol(1, 64);
    const Rational alphas[] = {Rational(1, 2), Rational(1), Rational(2)};
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t s0 = seed + 101 * t;
        std::size_t d = 2 + t % 2; // planted positives in 2D/3D keep sums cheap
        auto base = random_polytope(d, d + 3, 5, s0);
        auto q = random_polytope(d, d + 2, 3, s0 + 7);
        Rational alpha = alphas[t % 3];
        auto p = minkowski_sum(base, scale_polytope(q, alpha)).sum;

        std::string tag = "positive[" + std::to_string(t) + "]";
        bool homo = has_homothetic_summand(p, q);
        r.add(tag + "/vertex_count_route", homo);
        auto bracket = max_summand_scale(p, q, tol);
        r.add(tag + "/bracket_reaches_alpha",
              bracket.certified && bracket.alpha_hi >= alpha,
              "lo=" + bracket.alpha_lo.str() + " hi=" + bracket.alpha_hi.str());
        r.add(tag + "/routes_agree", homo == (bracket.alpha_lo > 0));
        r.add(tag + "/fans_equal_with_sum", fans_equal(p, minkowski_sum(p, q).sum));
    }
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t s0 = seed + 577 * t + 13;
        std::size_t d = 2 + t % 3;
        auto p = random_polytope(d, d + 4, 7, s0);
        auto q = random_polytope(d, d + 3, 7, s0 + 3);
        bool homo = has_homothetic_summand(p, q);
        bool bracket_pos = max_summand_scale(p, q, tol).alpha_lo > 0;
        r.add("generic[" + std::to_string(t) + "]/routes_agree", homo == bracket_pos,
              std::string(homo ? "homothetic" : "none") + " vs bracket " +
                  (bracket_pos ? "positive" : "zero"));
    }
    return r;
}

enum class RatioKind { Thm41, Thm42 };

// Family diameters against the proved two-sided bounds, with the implied
// ratio column; kind Thm41 sums with a vertical segment, Thm42 with the
// bulge polygon matched to the construction.
inline VerificationReport ratio_tables(RatioKind kind, const std::vector<long>& k_values,
                                       long m = 2) {
    VerificationReport r;
    r.suite = kind == RatioKind::Thm41 ? "ratio_thm41" : "ratio_thm42";
    for (long k : k_values) {
        if (kind == RatioKind::Thm41) {
            const long l = 4;
            XiParams params;
            params.k = k;
            params.l = l;
            auto [poly, census] = xi(params);
            auto sum = minkowski_sum(poly, segment_polytope({0, 0, 1})).sum;
            std::size_t d1 = diameter(build_graph(poly)).value;
            std::size_t d2 = diameter(build_graph(sum)).value;
            std::string tag = "k=" + std::to_string(k);
            r.add(tag + "/upper", d1 <= static_cast<std::size_t>(k + l + 2),
                  "diam=" + std::to_string(d1) + " bound=" + std::to_string(k + l + 2));
            r.add(tag + "/lower_sum", d2 >= static_cast<std::size_t>(2 * k),
                  "diam_sum=" + std::to_string(d2) + " bound=" + std::to_string(2 * k));
            Rational ratio(static_cast<long>(d2), static_cast<long>(d1));
            Rational floor_ratio(2 * k, k + l + 2);
            r.add(tag + "/ratio", ratio >= floor_ratio,
                  "ratio=" + ratio.str() + " floor=" + floor_ratio.str());
        } else {
            const long l = 2 * m + 4;
            // larger k/l need a gentler bulge to keep every bump vertex extreme
            auto fam = xi_tilde(k, l, m, std::min(Rational(1, 100), Rational(1, 4 * k * l)));
            auto sum = minkowski_sum(fam.poly, fam.pi).sum;
            std::size_t d1 = diameter(build_graph(fam.poly)).value;
            std::size_t d2 = diameter(build_graph(sum)).value;
            Rational upper = Rational(k + 3, 2) + l + 2;
            Rational lower = Rational(k * (m + 1), 2) + 1;
            std::string tag = "k=" + std::to_string(k) + ",m=" + std::to_string(m);
            r.add(tag + "/upper", Rational(static_cast<long>(d1)) <= upper,
                  "diam=" + std::to_string(d1) + " bound=" + upper.str());
            r.add(tag + "/lower_sum", Rational(static_cast<long>(d2)) >= lower,
                  "diam_sum=" + std::to_string(d2) + " bound=" + lower.str());
            Rational ratio(static_cast<long>(d2), static_cast<long>(d1));
            Rational floor_ratio = lower / upper;
            r.add(tag + "/ratio", ratio >= floor_ratio,
                  "ratio=" + ratio.str() + " floor=" + floor_ratio.str());
        }
    }
    return r;
}

namespace detail {

// Triangle with one edge parallel to a unit segment: the worked sum whose
// quadrilateral, injection, and Gamma structure are known in full.
inline std::pair<ExactPolytope, ExactPolytope> flat_triangle_and_segment() {
    auto tri = hull_from_vertices({{0, 0}, {2, 0}, {1, 1}});
    auto seg = segment_polytope({1, 0});
    return {tri, seg};
}

} // namespace detail

// Full orchestrated run: deterministic fixtures, seeded batches, and a
// negative control with a deliberately broken graph.
inline VerificationReport run_suite(std::uint64_t seed, std::size_t trials) {
    VerificationReport r;
    r.suite = "all";
    r.seed = seed;

    // worked quadrilateral example
    {
        auto [tri, seg] = detail::flat_triangle_and_segment();
        auto s = minkowski_sum(tri, seg);
        r.add("fig_example/sum_f0", s.sum.f0() == 4, "f0=" + std::to_string(s.sum.f0()));
        std::size_t apex = 0; // vertex (1,1) of the triangle
        for (std::size_t u = 0; u < tri.f0(); ++u)
            if (tri.vertices[u][1] == 1) apex = u;
        auto gs = build_graph(s.sum);
        auto g_apex = gamma_subgraph(s, gs, apex);
        std::size_t apex_edges = 0;
        for (const auto& nb : g_apex.graph.adjacency) apex_edges += nb.size();
        r.add("fig_example/gamma_apex", g_apex.members.size() == 2 && apex_edges == 2,
              "members=" + std::to_string(g_apex.members.size()));
        bool singles = true;
        for (std::size_t u = 0; u < tri.f0(); ++u)
            if (u != apex && gamma_subgraph(s, gs, u).members.size() != 1) singles = false;
        r.add("fig_example/gamma_base_singletons", singles);
        r.merge(check_diameter_bounds(tri, seg));
        r.merge(check_structure_lemmas(tri, seg));
    }

    // dimension/diameter grids
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t k = 1; k <= 6; ++k) {
            auto p = prop21(d, k);
            r.add("prop21/d" + std::to_string(d) + "k" + std::to_string(k),
                  p.intrinsic_dim == d && diameter(build_graph(p)).value == k);
        }
    }
    for (std::size_t k = 4; k <= 6; ++k) {
        auto [P, Q] = prop22(3, k);
        auto s = minkowski_sum(P, Q);
        r.add("prop22/d3k" + std::to_string(k),
              diameter(build_graph(s.sum)).value == k);
    }

    // seeded random pairs
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t s0 = seed + 1000 * t;
        std::size_t d = 2 + t % 3;
        auto p = random_polytope(d, d + 4, 10, s0);
        auto q = random_polytope(d, d + 3, 10, s0 + 1);
        auto rb = check_diameter_bounds(p, q);
        auto rl = check_structure_lemmas(p, q);
        bool ok = rb.all_pass() && rl.all_pass();
        r.add("random_pair[" + std::to_string(t) + "]", ok);
        if (!ok) {
            r.merge(rb);
            r.merge(rl);
        }
    }

    if (trials > 0) r.merge(check_decomposability(std::max<std::size_t>(trials / 4, 1), seed));

    // zonotopes: positive and negative fixtures
    r.add("zonotope/cube3", is_zonotope(cube(3)).zonotope);
    {
        auto sum = minkowski_sum(
            minkowski_sum(segment_polytope({1, 0, 0}), segment_polytope({1, 1, 0})).sum,
            segment_polytope({0, 1, 2})).sum;
        auto z = is_zonotope(sum);
        r.add("zonotope/segment_sum", z.zonotope && z.generators.size() == 3);
    }
    r.add("zonotope/simplex3_negative", !is_zonotope(simplex(3)).zonotope);

    // small ratio table
    r.merge(ratio_tables(RatioKind::Thm41, {3, 4}));

    // negative control: a hand-broken Gamma adjacency must be caught
    {
        auto [tri, seg] = detail::flat_triangle_and_segment();
        auto s = minkowski_sum(tri, seg);
        auto gs = build_graph(s.sum);
        gs.adjacency[0].clear(); // sever vertex 0: connectivity check must fail
        for (auto& nb : gs.adjacency)
            nb.erase(std::remove(nb.begin(), nb.end(), std::size_t(0)), nb.end());
        bool detected = !is_connected(gs);
        r.add("negative_control/broken_adjacency_detected", detected);
    }
    return r;
}

} // namespace polymink

#endif
