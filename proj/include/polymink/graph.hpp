#ifndef POLYMINK_GRAPH_HPP
#define POLYMINK_GRAPH_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "polymink/polytope.hpp"

namespace polymink {

struct PolytopeGraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> adjacency; // sorted neighbor lists
};

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_distances(const PolytopeGraph& g, std::size_t src) {
    std::vector<std::size_t> dist(g.vertex_count, kUnreachable);
    std::queue<std::size_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : g.adjacency[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const PolytopeGraph& g) {
    if (g.vertex_count == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(),
                       [](std::size_t d) { return d != kUnreachable; });
}

inline PolytopeGraph build_graph(const ExactPolytope& p) {
    PolytopeGraph g;
    g.vertex_count = p.f0();
    g.adjacency.resize(g.vertex_count);
    for (const auto& [u, v] : edges(p)) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    if (!is_connected(g))
        throw std::logic_error("build_graph: polytope graph must be connected");
    return g;
}

inline std::size_t distance(const PolytopeGraph& g, std::size_t u, std::size_t v) {
    return bfs_distances(g, u)[v];
}

// Lexicographically least shortest path from u to v.
inline std::vector<std::size_t> geodesic(const PolytopeGraph& g, std::size_t u,
                                         std::size_t v) {
    auto dist_from_v = bfs_distances(g, v);
    assert(dist_from_v[u] != kUnreachable);
    std::vector<std::size_t> path{u};
    std::size_t cur = u;
    while (cur != v) {
        std::size_t next = kUnreachable;
        for (std::size_t nb : g.adjacency[cur]) {
            if (dist_from_v[nb] + 1 == dist_from_v[cur]) { next = nb; break; }
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

struct DiameterResult {
    std::size_t value = 0;
    std::pair<std::size_t, std::size_t> witness{0, 0};
};

// All-pairs BFS; deterministic witness (first maximizing pair in index order).
inline DiameterResult diameter(const PolytopeGraph& g) {
    DiameterResult r;
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
        auto dist = bfs_distances(g, s);
        for (std::size_t t = s + 1; t < g.vertex_count; ++t) {
            if (dist[t] != kUnreachable && dist[t] > r.value) {
                r.value = dist[t];
                r.witness = {s, t};
            }
        }
    }
    return r;
}

// Induced subgraph of a Minkowski sum's graph on the vertices whose
// decomposition has a fixed P-part.
struct GammaGraph {
    std::size_t base_vertex = 0;                // vertex index in P
    std::vector<std::size_t> members;           // sum-vertex indices, sorted
    PolytopeGraph graph;                        // induced adjacency, local indices
};

} // namespace polymink

#endif
