#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ringgraph/cycle_search.hpp"
#include "ringgraph/model.hpp"

using namespace ringgraph;

namespace {

int vid(const ModelGraph& mg, std::vector<int> values) {
    auto idx = mg.vertex_index(RingElement(std::move(values), mg.config.alphabet));
    REQUIRE(idx.has_value());
    return *idx;
}

} // namespace

TEST_CASE("cycles through pairs on hand-built graphs") {
    SimpleGraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    CHECK(smallest_cycle_through_pair(tri, 0, 1) == 3);
    CHECK(smallest_cycle_through_pair(tri, 0, 2) == 3);
    CHECK_THROWS_AS(smallest_cycle_through_pair(tri, 1, 1), InputError);

    SimpleGraph square(4);
    square.add_edge(0, 1);
    square.add_edge(1, 2);
    square.add_edge(2, 3);
    square.add_edge(3, 0);
    CHECK(smallest_cycle_through_pair(square, 0, 2) == 4);

    SimpleGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK_FALSE(smallest_cycle_through_pair(path, 0, 3).has_value());
}

TEST_CASE("no cycle spans two blocks joined at a cut vertex") {
    // Two triangles sharing vertex 0: any closed walk visiting both sides
    // repeats the cut vertex, so no simple cycle holds one vertex of each.
    SimpleGraph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 0);
    bowtie.add_edge(0, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(4, 0);
    CHECK(smallest_cycle_through_pair(bowtie, 1, 2) == 3);
    CHECK(smallest_cycle_through_pair(bowtie, 3, 4) == 3);
    CHECK_FALSE(smallest_cycle_through_pair(bowtie, 1, 3).has_value());
    CHECK_FALSE(smallest_cycle_through_pair(bowtie, 2, 4).has_value());
}

TEST_CASE("frozen cycle lengths in the three-point models") {
    auto zd3 = build_graph(make_model(3, 3), GraphKind::ZeroDivisor);
    CHECK(smallest_cycle_through_pair(zd3.graph, vid(zd3, {1, 0, 0}), vid(zd3, {0, 1, 1})) == 4);
    CHECK(smallest_cycle_through_pair(zd3.graph, vid(zd3, {1, 0, 0}), vid(zd3, {0, 1, 0})) == 3);
    CHECK(smallest_cycle_through_pair(zd3.graph, vid(zd3, {1, 1, 0}), vid(zd3, {1, 0, 1})) == 6);

    // With only one nonzero value the second witness per zero set is missing:
    // (0,1,1) has degree 1, so no cycle reaches it.
    auto zd2 = build_graph(make_model(3, 2), GraphKind::ZeroDivisor);
    CHECK_FALSE(
        smallest_cycle_through_pair(zd2.graph, vid(zd2, {1, 0, 0}), vid(zd2, {0, 1, 1})).has_value());
    CHECK(zd2.graph.degree(vid(zd2, {0, 1, 1})) == 1);
}

TEST_CASE("matches brute-force cycle enumeration on random graphs") {
    for (unsigned seed : {31u, 32u, 33u, 34u, 35u}) {
        auto g = test_oracles::random_graph(8, 0.3, seed);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                CHECK(smallest_cycle_through_pair(g, u, v) == test_oracles::brute_cycle_through(g, u, v));
    }
}

TEST_CASE("girth bounds every pair cycle from below") {
    auto mg = build_graph(make_model(3, 3), GraphKind::Comaximal);
    auto gr = girth(mg.graph);
    REQUIRE(gr.has_value());
    for (int u = 0; u < mg.graph.vertex_count(); ++u)
        for (int v = u + 1; v < mg.graph.vertex_count(); ++v) {
            auto c = smallest_cycle_through_pair(mg.graph, u, v);
            if (c)
                CHECK(*gr <= *c);
        }
}
