#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ringgraph/isomorphism.hpp"
#include "ringgraph/model.hpp"

using namespace ringgraph;

namespace {

SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

TEST_CASE("identity-style isomorphism on equal graphs") {
    SimpleGraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    auto psi = find_isomorphism(tri, tri);
    REQUIRE(psi.has_value());
    CHECK(is_isomorphism(tri, tri, *psi));
}

TEST_CASE("recovers a hidden permutation") {
    for (unsigned seed : {41u, 42u, 43u}) {
        auto g = test_oracles::random_graph(12, 0.4, seed);
        std::vector<int> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 rng(seed * 7 + 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = permuted(g, perm);
        auto psi = find_isomorphism(g, h);
        REQUIRE(psi.has_value());
        CHECK(is_isomorphism(g, h, *psi));
    }
}

TEST_CASE("distinguishes regular non-isomorphic graphs") {
    // C6 versus two disjoint triangles: both 2-regular on six vertices, so
    // degree pruning alone cannot separate them.
    SimpleGraph c6(6);
    for (int i = 0; i < 6; ++i)
        c6.add_edge(i, (i + 1) % 6);
    SimpleGraph two_triangles(6);
    two_triangles.add_edge(0, 1);
    two_triangles.add_edge(1, 2);
    two_triangles.add_edge(2, 0);
    two_triangles.add_edge(3, 4);
    two_triangles.add_edge(4, 5);
    two_triangles.add_edge(5, 3);
    CHECK_FALSE(find_isomorphism(c6, two_triangles).has_value());
}

TEST_CASE("rejects on size or degree mismatch") {
    SimpleGraph p3(3), star(4), path4(4);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    path4.add_edge(0, 1);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    CHECK_FALSE(find_isomorphism(p3, star).has_value());
    CHECK_FALSE(find_isomorphism(star, path4).has_value());
}

TEST_CASE("input validation and the vertex cap") {
    SimpleGraph empty(0), one(1);
    CHECK_THROWS_AS(find_isomorphism(empty, one), InputError);
    SimpleGraph big(201), other(201);
    CHECK_THROWS_AS(find_isomorphism(big, other), ResourceError);
    CHECK_THROWS_AS(find_isomorphism(one, one, 0), ResourceError);
}

TEST_CASE("model graphs: two points agree, three points differ") {
    auto cfg2 = make_model(2, 3);
    auto zd2 = build_graph(cfg2, GraphKind::ZeroDivisor);
    auto comax2 = build_graph(cfg2, GraphKind::Comaximal);
    auto psi = find_isomorphism(zd2.graph, comax2.graph);
    REQUIRE(psi.has_value());
    CHECK(is_isomorphism(zd2.graph, comax2.graph, *psi));

    auto cfg3 = make_model(3, 3);
    auto zd3 = build_graph(cfg3, GraphKind::ZeroDivisor);
    auto comax3 = build_graph(cfg3, GraphKind::Comaximal);
    CHECK_FALSE(find_isomorphism(zd3.graph, comax3.graph).has_value());
}
