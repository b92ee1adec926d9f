#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "ringgraph/graph.hpp"

namespace ringgraph {

namespace detail {

// Joint color refinement: colors are comparable across the two graphs, and
// candidate images of a vertex are the same-color vertices of the other graph.
struct Refinement {
    std::vector<int> color_a, color_b;
    bool compatible = true;
};

inline Refinement refine_colors(const SimpleGraph& a, const SimpleGraph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    Refinement r;
    r.color_a.assign(na, 0);
    r.color_b.assign(nb, 0);

    auto histograms_match = [&] {
        std::map<int, int> ha, hb;
        for (int c : r.color_a)
            ++ha[c];
        for (int c : r.color_b)
            ++hb[c];
        return ha == hb;
    };

    for (int u = 0; u < na; ++u)
        r.color_a[u] = a.degree(u);
    for (int u = 0; u < nb; ++u)
        r.color_b[u] = b.degree(u);

    for (int round = 0; round < na + 1; ++round) {
        if (!histograms_match()) {
            r.compatible = false;
            return r;
        }
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const SimpleGraph& g, const std::vector<int>& col, int u) {
            std::vector<int> nc;
            nc.reserve(g.degree(u));
            for (int w : g.neighbors(u))
                nc.push_back(col[w]);
            std::sort(nc.begin(), nc.end());
            return Sig{col[u], std::move(nc)};
        };
        std::map<Sig, int> pool;
        std::vector<Sig> sa(na), sb(nb);
        for (int u = 0; u < na; ++u)
            pool.emplace(sa[u] = signature(a, r.color_a, u), 0);
        for (int u = 0; u < nb; ++u)
            pool.emplace(sb[u] = signature(b, r.color_b, u), 0);
        int next = 0;
        for (auto& [sig, id] : pool)
            id = next++;
        std::vector<int> ca(na), cb(nb);
        for (int u = 0; u < na; ++u)
            ca[u] = pool[sa[u]];
        for (int u = 0; u < nb; ++u)
            cb[u] = pool[sb[u]];
        if (ca == r.color_a && cb == r.color_b)
            break; // stable
        r.color_a = std::move(ca);
        r.color_b = std::move(cb);
    }
    r.compatible = histograms_match();
    return r;
}

} // namespace detail

// Adjacency-preserving bijection between the vertex sets, or nullopt when the
// graphs are not isomorphic. Backtracking over color-refined classes, most
// constrained vertex first; deterministic for a given input ordering.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                                        int vertex_cap = 200) {
    if (a.vertex_count() == 0 || b.vertex_count() == 0)
        throw InputError("find_isomorphism needs nonempty graphs");
    if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
        throw ResourceError("graph exceeds the isomorphism search cap of " + std::to_string(vertex_cap) +
                            " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;

    const int n = a.vertex_count();
    auto refinement = detail::refine_colors(a, b);
    if (!refinement.compatible)
        return std::nullopt;

    std::map<int, std::vector<int>> classes_b;
    for (int u = 0; u < n; ++u)
        classes_b[refinement.color_b[u]].push_back(u);
    std::map<int, int> class_size;
    for (const auto& [c, members] : classes_b)
        class_size[c] = static_cast<int>(members.size());

    // Smallest candidate class first; ties by id for determinism.
    std::vector<int> order(n);
    for (int u = 0; u < n; ++u)
        order[u] = u;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = refinement.color_a[x], cy = refinement.color_a[y];
        if (class_size[cx] != class_size[cy])
            return class_size[cx] < class_size[cy];
        if (cx != cy)
            return cx < cy;
        return x < y;
    });

    std::vector<int> mapping(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int pos, int img) {
        int src = order[pos];
        for (int i = 0; i < pos; ++i) {
            int prev = order[i];
            if (a.adjacent(src, prev) != b.adjacent(img, mapping[prev]))
                return false;
        }
        return true;
    };

    auto backtrack = [&](auto&& self, int pos) -> bool {
        if (pos == n)
            return true;
        int src = order[pos];
        for (int img : classes_b[refinement.color_a[src]]) {
            if (used[img] || !consistent(pos, img))
                continue;
            used[img] = 1;
            mapping[src] = img;
            if (self(self, pos + 1))
                return true;
            used[img] = 0;
            mapping[src] = -1;
        }
        return false;
    };

    if (!backtrack(backtrack, 0))
        return std::nullopt;
    return mapping;
}

// Exhaustive audit that psi is an isomorphism from a onto b.
inline bool is_isomorphism(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& psi) {
    const int n = a.vertex_count();
    if (b.vertex_count() != n || static_cast<int>(psi.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int u = 0; u < n; ++u) {
        if (psi[u] < 0 || psi[u] >= n || hit[psi[u]])
            return false;
        hit[psi[u]] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.adjacent(u, v) != b.adjacent(psi[u], psi[v]))
                return false;
    return true;
}

} // namespace ringgraph
