#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ringgraph/errors.hpp"

namespace ringgraph {

// Simple graph: symmetric irreflexive adjacency over vertex ids 0..n-1, plus
// optional opaque label payloads. Values are treated as immutable once built;
// every algorithm below takes a const reference and is pure.
class SimpleGraph {
public:
    explicit SimpleGraph(int vertex_count)
        : adj_(check_count(vertex_count)), labels_(vertex_count) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InputError("self-loops are not allowed");
        if (adjacent(u, v))
            return;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++edges_;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Neighbor ids, ascending.
    const std::vector<int>& neighbors(int u) const {
        check_vertex(u);
        return adj_[u];
    }

    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    void set_label(int u, std::string label) {
        check_vertex(u);
        labels_[u] = std::move(label);
    }
    const std::string& label(int u) const {
        check_vertex(u);
        return labels_[u];
    }

    void check_vertex(int u) const {
        if (u < 0 || u >= vertex_count())
            throw InputError("vertex id " + std::to_string(u) + " out of range");
    }

private:
    static int check_count(int n) {
        if (n < 0)
            throw InputError("negative vertex count");
        return n;
    }
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int edges_ = 0;
};

// Shortest-path hop counts from u to every vertex; nullopt = unreachable.
inline std::vector<std::optional<int>> bfs_distances(const SimpleGraph& g, int u) {
    g.check_vertex(u);
    std::vector<std::optional<int>> dist(g.vertex_count());
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

// Shortest-path length between u and v; 0 when u == v, nullopt when no path.
inline std::optional<int> distance(const SimpleGraph& g, int u, int v) {
    g.check_vertex(v);
    return bfs_distances(g, u)[v];
}

// Greatest distance from u to any vertex; nullopt when some vertex is
// unreachable from u. A single-vertex graph gives 0.
inline std::optional<int> eccentricity(const SimpleGraph& g, int u) {
    auto dist = bfs_distances(g, u);
    int worst = 0;
    for (const auto& d : dist) {
        if (!d)
            return std::nullopt;
        worst = std::max(worst, *d);
    }
    return worst;
}

struct DiameterRadius {
    std::optional<int> diameter; // nullopt = unbounded
    std::optional<int> radius;
};

inline DiameterRadius diameter_radius(const SimpleGraph& g) {
    if (g.vertex_count() == 0)
        throw InputError("diameter of an empty graph");
    DiameterRadius out{0, std::nullopt};
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto e = eccentricity(g, u);
        if (!e) {
            // One unreachable pair makes every eccentricity unbounded.
            return {std::nullopt, std::nullopt};
        }
        if (out.diameter && *e > *out.diameter)
            out.diameter = e;
        if (!out.radius || *e < *out.radius)
            out.radius = e;
    }
    return out;
}

namespace detail {

// Shortest u..v path length with the single edge u-v removed.
inline std::optional<int> distance_avoiding_edge(const SimpleGraph& g, int u, int v) {
    std::vector<std::optional<int>> dist(g.vertex_count());
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if ((x == u && y == v) || (x == v && y == u))
                continue;
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                if (y == v)
                    return dist[v];
                q.push(y);
            }
        }
    }
    return dist[v];
}

} // namespace detail

// Length of the shortest cycle anywhere in g; nullopt when g is a forest.
// Every cycle uses some edge (u,v); the rest of it is a u..v path avoiding
// that edge, so scanning edges with one BFS each is exact.
inline std::optional<int> girth(const SimpleGraph& g) {
    std::optional<int> best;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u)
                continue;
            auto d = detail::distance_avoiding_edge(g, u, v);
            if (d && (!best || *d + 1 < *best))
                best = *d + 1;
        }
    }
    return best;
}

// Vertices adjacent to both u and v, ascending.
inline std::vector<int> common_neighbors(const SimpleGraph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vertex_on_triangle(const SimpleGraph& g, int u) {
    const auto& nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i], nb[j]))
                return true;
    return false;
}

inline bool edge_on_triangle(const SimpleGraph& g, int u, int v) {
    if (!g.adjacent(u, v))
        throw InputError("edge_on_triangle needs an edge");
    return !common_neighbors(g, u, v).empty();
}

struct TriangulationReport {
    bool triangulated = false;      // every vertex lies on a triangle
    bool hypertriangulated = false; // every edge lies on a triangle
};

inline TriangulationReport triangulation_predicates(const SimpleGraph& g) {
    TriangulationReport r{true, true};
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!vertex_on_triangle(g, u))
            r.triangulated = false;
        for (int v : g.neighbors(u)) {
            if (v > u && common_neighbors(g, u, v).empty())
                r.hypertriangulated = false;
        }
    }
    return r;
}

// u ⊥ v: adjacent with no vertex adjacent to both.
inline bool orthogonal(const SimpleGraph& g, int u, int v) {
    return g.adjacent(u, v) && common_neighbors(g, u, v).empty();
}

// Smallest partner orthogonal to u, if any.
inline std::optional<int> complement_partner(const SimpleGraph& g, int u) {
    for (int v : g.neighbors(u))
        if (common_neighbors(g, u, v).empty())
            return v;
    return std::nullopt;
}

struct ComplementednessResult {
    bool complemented = false;
    std::vector<int> partner;          // one orthogonal partner per vertex when complemented
    std::optional<int> counterexample; // a partnerless vertex otherwise
};

inline ComplementednessResult is_complemented(const SimpleGraph& g) {
    ComplementednessResult r;
    r.partner.assign(g.vertex_count(), -1);
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto p = complement_partner(g, u);
        if (!p) {
            r.partner.clear();
            r.counterexample = u;
            return r;
        }
        r.partner[u] = *p;
    }
    r.complemented = true;
    return r;
}

struct GraphMetricsReport {
    std::optional<int> diameter;
    std::optional<int> radius;
    std::optional<int> girth; // nullopt = acyclic
    std::vector<std::optional<int>> eccentricities;
    bool triangulated = false;
    bool hypertriangulated = false;
    bool complemented = false;
};

inline GraphMetricsReport metrics_report(const SimpleGraph& g) {
    GraphMetricsReport r;
    auto dr = diameter_radius(g);
    r.diameter = dr.diameter;
    r.radius = dr.radius;
    r.girth = girth(g);
    r.eccentricities.reserve(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        r.eccentricities.push_back(eccentricity(g, u));
    auto t = triangulation_predicates(g);
    r.triangulated = t.triangulated;
    r.hypertriangulated = t.hypertriangulated;
    r.complemented = is_complemented(g).complemented;
    return r;
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

// Deterministic DOT rendering: one vertex line per id, then each edge once
// with the smaller endpoint first, both ascending. Byte-stable across runs.
inline std::string to_dot(const SimpleGraph& g, std::string_view name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        out << "  v" << u;
        if (!g.label(u).empty())
            out << " [label=\"" << detail::dot_escape(g.label(u)) << "\"]";
        out << ";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace ringgraph
