#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ringgraph/graph.hpp"
#include "ringgraph/model.hpp"

using namespace ringgraph;

namespace {

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

int vid(const ModelGraph& mg, std::vector<int> values) {
    auto idx = mg.vertex_index(RingElement(std::move(values), mg.config.alphabet));
    REQUIRE(idx.has_value());
    return *idx;
}

} // namespace

TEST_CASE("simple graph construction and validation") {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1); // idempotent
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(g.adjacent(-1, 0), InputError);
}

TEST_CASE("distance basics") {
    auto tri = complete_graph(3);
    CHECK(distance(tri, 1, 1) == 0);
    CHECK(distance(tri, 0, 2) == 1);

    auto p3 = path_graph(3);
    CHECK(distance(p3, 0, 2) == 2);

    SimpleGraph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_FALSE(distance(split, 0, 3).has_value());
    CHECK_THROWS_AS(distance(split, 0, 9), InputError);
}

TEST_CASE("distance 3 in the two-valued three-point zero-divisor graph") {
    auto mg = build_graph(make_model(3, 2), GraphKind::ZeroDivisor);
    CHECK(distance(mg.graph, vid(mg, {1, 1, 0}), vid(mg, {1, 0, 1})) == 3);
}

TEST_CASE("distance matches floyd-warshall on random graphs") {
    for (unsigned seed : {11u, 12u, 13u}) {
        auto g = test_oracles::random_graph(9, 0.3, seed);
        auto expected = test_oracles::floyd_warshall(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto row = bfs_distances(g, u);
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(row[v] == expected[u][v]);
        }
    }
}

TEST_CASE("eccentricity") {
    SimpleGraph one(1);
    CHECK(eccentricity(one, 0) == 0);

    auto mg = build_graph(make_model(3, 3), GraphKind::ZeroDivisor);
    CHECK(eccentricity(mg.graph, vid(mg, {1, 0, 0})) == 2);
    CHECK(eccentricity(mg.graph, vid(mg, {1, 2, 0})) == 3);
}

TEST_CASE("diameter and radius") {
    CHECK(diameter_radius(complete_graph(3)).diameter == 1);
    CHECK(diameter_radius(complete_graph(3)).radius == 1);

    auto zd = build_graph(make_model(3, 3), GraphKind::ZeroDivisor);
    CHECK(diameter_radius(zd.graph).diameter == 3);

    auto comax2 = build_graph(make_model(2, 3), GraphKind::Comaximal);
    CHECK(diameter_radius(comax2.graph).diameter == 2);

    SimpleGraph empty(0);
    CHECK_THROWS_AS(diameter_radius(empty), InputError);

    SimpleGraph split(3);
    split.add_edge(0, 1);
    auto dr = diameter_radius(split);
    CHECK_FALSE(dr.diameter.has_value());
    CHECK_FALSE(dr.radius.has_value());
}

TEST_CASE("girth") {
    CHECK_FALSE(girth(path_graph(3)).has_value());
    CHECK(girth(cycle_graph(4)) == 4);
    CHECK(girth(build_graph(make_model(3, 3), GraphKind::ZeroDivisor).graph) == 3);

    for (unsigned seed : {21u, 22u, 23u, 24u}) {
        auto g = test_oracles::random_graph(9, 0.25, seed);
        CHECK(girth(g) == test_oracles::brute_girth(g));
    }
}

TEST_CASE("triangulation predicates") {
    auto k3 = triangulation_predicates(complete_graph(3));
    CHECK(k3.triangulated);
    CHECK(k3.hypertriangulated);

    for (auto kind : {GraphKind::ZeroDivisor, GraphKind::Comaximal}) {
        auto mg = build_graph(make_model(3, 3), kind);
        auto t = triangulation_predicates(mg.graph);
        CHECK_FALSE(t.triangulated);
        CHECK_FALSE(t.hypertriangulated);
    }
}

TEST_CASE("complementedness") {
    SimpleGraph edge(2);
    edge.add_edge(0, 1);
    auto r = is_complemented(edge);
    REQUIRE(r.complemented);
    CHECK(r.partner[0] == 1);
    CHECK(r.partner[1] == 0);

    // Triangle with one pendant: the two pure triangle vertices have no
    // orthogonal partner.
    SimpleGraph lollipop(4);
    lollipop.add_edge(0, 1);
    lollipop.add_edge(1, 2);
    lollipop.add_edge(2, 0);
    lollipop.add_edge(0, 3);
    auto bad = is_complemented(lollipop);
    CHECK_FALSE(bad.complemented);
    CHECK(bad.counterexample == 1);

    auto zd = build_graph(make_model(3, 3), GraphKind::ZeroDivisor);
    auto zr = is_complemented(zd.graph);
    CHECK(zr.complemented);
    CHECK(orthogonal(zd.graph, vid(zd, {1, 2, 0}), vid(zd, {0, 0, 1})));
    for (int u = 0; u < zd.graph.vertex_count(); ++u)
        CHECK(orthogonal(zd.graph, u, zr.partner[u]));
}

TEST_CASE("metric invariants across swept models") {
    for (int x : {2, 3, 4})
        for (int a : {2, 3})
            for (auto kind : {GraphKind::ZeroDivisor, GraphKind::Comaximal}) {
                auto mg = build_graph(make_model(x, a), kind);
                const int n = mg.graph.vertex_count();
                std::vector<std::vector<std::optional<int>>> dist;
                for (int u = 0; u < n; ++u)
                    dist.push_back(bfs_distances(mg.graph, u));

                int symmetry_violations = 0, triangle_violations = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (dist[u][v] != dist[v][u])
                            ++symmetry_violations;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            if (dist[i][j] && dist[j][k] && dist[i][k] &&
                                *dist[i][k] > *dist[i][j] + *dist[j][k])
                                ++triangle_violations;
                CHECK(symmetry_violations == 0);
                CHECK(triangle_violations == 0);

                int ecc_mismatches = 0;
                for (int u = 0; u < n; ++u) {
                    int row_max = 0;
                    bool bounded = true;
                    for (int v = 0; v < n; ++v) {
                        if (!dist[u][v])
                            bounded = false;
                        else
                            row_max = std::max(row_max, *dist[u][v]);
                    }
                    auto e = eccentricity(mg.graph, u);
                    if (e.has_value() != bounded || (bounded && *e != row_max))
                        ++ecc_mismatches;
                }
                CHECK(ecc_mismatches == 0);

                auto report = metrics_report(mg.graph);
                if (report.diameter && report.radius)
                    CHECK(*report.radius <= *report.diameter);
                if (report.girth)
                    CHECK(*report.girth >= 3);
            }
}

TEST_CASE("dot export is deterministic and escaped") {
    auto mg = build_graph(make_model(3, 2), GraphKind::ZeroDivisor);
    const std::string expected = "graph G {\n"
                                 "  v0 [label=\"(0,0,1)\"];\n"
                                 "  v1 [label=\"(0,1,0)\"];\n"
                                 "  v2 [label=\"(0,1,1)\"];\n"
                                 "  v3 [label=\"(1,0,0)\"];\n"
                                 "  v4 [label=\"(1,0,1)\"];\n"
                                 "  v5 [label=\"(1,1,0)\"];\n"
                                 "  v0 -- v1;\n"
                                 "  v0 -- v3;\n"
                                 "  v0 -- v5;\n"
                                 "  v1 -- v3;\n"
                                 "  v1 -- v4;\n"
                                 "  v2 -- v3;\n"
                                 "}\n";
    CHECK(to_dot(mg.graph) == expected);
    CHECK(to_dot(mg.graph) == to_dot(mg.graph));

    SimpleGraph quoted(1);
    quoted.set_label(0, "say \"hi\"");
    CHECK(to_dot(quoted).find("say \\\"hi\\\"") != std::string::npos);
}
