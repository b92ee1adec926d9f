#pragma once

#include <climits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "ringgraph/graph.hpp"

namespace ringgraph {

namespace detail {

// Menger check: do two internally-vertex-disjoint u..v paths exist?
// Unit-capacity max-flow on the split digraph; two augmenting steps suffice.
inline bool two_disjoint_paths(const SimpleGraph& g, int u, int v) {
    const int n = g.vertex_count();
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add = [&](int a, int b, int cap) {
        arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    };
    auto in = [](int w) { return 2 * w; };
    auto out = [](int w) { return 2 * w + 1; };
    for (int w = 0; w < n; ++w)
        add(in(w), out(w), 1);
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x))
            add(out(x), in(y), 1);

    const int s = out(u), t = in(v);
    int flow = 0;
    while (flow < 2) {
        std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});
        std::vector<char> seen(2 * n, 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int x = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(arcs[x].size()); ++i) {
                const Arc& a = arcs[x][i];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    parent[a.to] = {x, i};
                    q.push(a.to);
                }
            }
        }
        if (!seen[t])
            break;
        for (int cur = t; cur != s;) {
            auto [px, pi] = parent[cur];
            arcs[px][pi].cap -= 1;
            arcs[arcs[px][pi].to][arcs[px][pi].rev].cap += 1;
            cur = px;
        }
        ++flow;
    }
    return flow >= 2;
}

// State for the branch-and-bound enumeration of first legs u..v.
struct CycleSearch {
    const SimpleGraph& g;
    int u, v, d_uv;
    std::vector<std::optional<int>> dist_to_v;
    std::vector<char> on_path;
    std::vector<int> path;
    int best = INT_MAX;

    CycleSearch(const SimpleGraph& graph, int a, int b)
        : g(graph), u(a), v(b), dist_to_v(bfs_distances(graph, b)), on_path(graph.vertex_count(), 0) {
        d_uv = dist_to_v[u].value(); // caller guarantees reachability
        on_path[u] = 1;
        path.push_back(u);
    }

    // Shortest second leg u..v avoiding the first leg's interior vertices
    // (and the direct edge when the first leg is exactly that edge).
    std::optional<int> second_leg() const {
        const int n = g.vertex_count();
        const bool first_is_edge = path.size() == 2;
        std::vector<int> dist(n, -1);
        for (size_t i = 1; i + 1 < path.size(); ++i)
            dist[path[i]] = -2;
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (first_is_edge && x == u && y == v)
                    continue;
                if (dist[y] != -1)
                    continue;
                dist[y] = dist[x] + 1;
                if (y == v)
                    return dist[y];
                q.push(y);
            }
        }
        return std::nullopt;
    }

    void dfs(int cur, int len, int cap) {
        if (cur == v) {
            if (auto l2 = second_leg(); l2 && len + *l2 < best)
                best = len + *l2;
            return;
        }
        if (len == cap)
            return;
        for (int w : g.neighbors(cur)) {
            if (on_path[w] || !dist_to_v[w])
                continue;
            if (len + 1 + *dist_to_v[w] > cap)
                continue; // cannot reach v within this leg budget
            if (len + 1 + *dist_to_v[w] + d_uv >= best)
                continue; // cannot beat the best cycle found so far
            on_path[w] = 1;
            path.push_back(w);
            dfs(w, len + 1, cap);
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

} // namespace detail

// Length of the smallest simple cycle containing both u and v, or nullopt
// when no such cycle exists. Exhaustive over first legs with iterative
// deepening and distance-based pruning; exact at toolkit scales.
inline std::optional<int> smallest_cycle_through_pair(const SimpleGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw InputError("smallest_cycle_through_pair needs distinct vertices");
    auto d = distance(g, u, v);
    if (!d)
        return std::nullopt;
    if (!detail::two_disjoint_paths(g, u, v))
        return std::nullopt;

    detail::CycleSearch search(g, u, v);
    const int n = g.vertex_count();
    for (int cap = search.d_uv; cap <= n - 1; ++cap) {
        search.dfs(u, 0, cap);
        // A longer first leg costs at least cap+1 plus the return distance.
        if (cap + 1 + search.d_uv >= search.best)
            break;
    }
    if (search.best == INT_MAX)
        return std::nullopt;
    return search.best;
}

} // namespace ringgraph
