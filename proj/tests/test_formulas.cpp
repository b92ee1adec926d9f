#include <catch2/catch_amalgamated.hpp>

#include "ringgraph/cycle_search.hpp"
#include "ringgraph/formulas.hpp"

using namespace ringgraph;

namespace {

RingElement el(std::vector<int> values, int alphabet) { return RingElement(std::move(values), alphabet); }

} // namespace

TEST_CASE("zero-divisor distance trichotomy on frozen pairs") {
    auto cfg = make_model(3, 2);
    auto p1 = predict_distance_zero_divisor(cfg, el({1, 0, 0}, 2), el({0, 1, 1}, 2));
    CHECK(p1.value == 1);
    CHECK(p1.rule == "2.4(1)");
    auto p2 = predict_distance_zero_divisor(cfg, el({1, 0, 0}, 2), el({1, 1, 0}, 2));
    CHECK(p2.value == 2);
    CHECK(p2.rule == "2.4(2)");
    auto p3 = predict_distance_zero_divisor(cfg, el({1, 1, 0}, 2), el({1, 0, 1}, 2));
    CHECK(p3.value == 3);
    CHECK(p3.rule == "2.4(3)");

    CHECK_THROWS_AS(predict_distance_zero_divisor(cfg, el({1, 0, 0}, 2), el({1, 0, 0}, 2)), InputError);
    CHECK_THROWS_AS(predict_distance_zero_divisor(cfg, el({1, 1, 1}, 2), el({1, 0, 0}, 2)), InputError);
}

TEST_CASE("comaximal distance trichotomy on frozen pairs") {
    auto cfg = make_model(3, 2);
    auto p1 = predict_distance_comaximal(cfg, el({1, 1, 0}, 2), el({1, 0, 1}, 2));
    CHECK(p1.value == 1);
    CHECK(p1.rule == "4.2(1)");
    auto p2 = predict_distance_comaximal(cfg, el({1, 0, 0}, 2), el({1, 1, 0}, 2));
    CHECK(p2.value == 2);
    CHECK(p2.rule == "4.2(2)");
    auto p3 = predict_distance_comaximal(cfg, el({1, 0, 0}, 2), el({0, 1, 0}, 2));
    CHECK(p3.value == 3);
    CHECK(p3.rule == "4.2(3)");
}

TEST_CASE("distance rules equal BFS across swept models") {
    for (int x : {2, 3, 4})
        for (int a : {2, 3}) {
            auto cfg = make_model(x, a);
            for (auto kind : {GraphKind::ZeroDivisor, GraphKind::Comaximal}) {
                auto mg = build_graph(cfg, kind);
                int mismatches = 0, clause3_with_two_points = 0;
                for (int i = 0; i < mg.graph.vertex_count(); ++i) {
                    auto dist = bfs_distances(mg.graph, i);
                    for (int j = 0; j < mg.graph.vertex_count(); ++j) {
                        if (i == j)
                            continue;
                        auto p = kind == GraphKind::ZeroDivisor
                                     ? predict_distance_zero_divisor(cfg, mg.vertex(i), mg.vertex(j))
                                     : predict_distance_comaximal(cfg, mg.vertex(i), mg.vertex(j));
                        if (!dist[j] || *dist[j] != p.value)
                            ++mismatches;
                        if (kind == GraphKind::Comaximal && x == 2 && p.value == 3)
                            ++clause3_with_two_points;
                    }
                }
                CHECK(mismatches == 0);
                CHECK(clause3_with_two_points == 0);
            }
        }
}

TEST_CASE("eccentricity rule") {
    auto cfg = make_model(3, 3);
    CHECK(predict_eccentricity_zero_divisor(cfg, el({1, 0, 0}, 3)) == 2);
    CHECK(predict_eccentricity_zero_divisor(cfg, el({0, 2, 0}, 3)) == 2);
    CHECK(predict_eccentricity_zero_divisor(cfg, el({1, 2, 0}, 3)) == 3);
    CHECK_THROWS_AS(predict_eccentricity_zero_divisor(make_model(2, 3), el({1, 0}, 3)),
                    UnsupportedError);

    for (int x : {3, 4})
        for (int a : {2, 3}) {
            auto sweep_cfg = make_model(x, a);
            auto mg = build_graph(sweep_cfg, GraphKind::ZeroDivisor);
            int mismatches = 0;
            for (int i = 0; i < mg.graph.vertex_count(); ++i) {
                auto e = eccentricity(mg.graph, i);
                if (!e || *e != predict_eccentricity_zero_divisor(sweep_cfg, mg.vertex(i)))
                    ++mismatches;
            }
            CHECK(mismatches == 0);
        }
}

TEST_CASE("cycle rules on frozen pairs") {
    auto cfg = make_model(3, 3);
    auto z1 = predict_cycle_zero_divisor(cfg, el({1, 0, 0}, 3), el({0, 1, 0}, 3));
    CHECK(z1.value == 3);
    CHECK(z1.rule == "2.11(1)");
    auto z2 = predict_cycle_zero_divisor(cfg, el({1, 0, 0}, 3), el({0, 1, 1}, 3));
    CHECK(z2.value == 4);
    CHECK(z2.rule == "2.11(2)");
    auto z2b = predict_cycle_zero_divisor(cfg, el({1, 1, 0}, 3), el({0, 0, 1}, 3));
    CHECK(z2b.value == 4);
    auto z3 = predict_cycle_zero_divisor(cfg, el({1, 1, 0}, 3), el({1, 0, 1}, 3));
    CHECK(z3.value == 6);
    CHECK(z3.rule == "2.11(3)");

    auto c1 = predict_cycle_comaximal(cfg, el({1, 1, 0}, 3), el({1, 0, 1}, 3));
    CHECK(c1.value == 3);
    CHECK(c1.rule == "4.8(1a)");
    auto c2 = predict_cycle_comaximal(cfg, el({1, 0, 0}, 3), el({0, 1, 1}, 3));
    CHECK(c2.value == 4);
    CHECK(c2.rule == "4.8(1b)");
    auto c3 = predict_cycle_comaximal(cfg, el({1, 0, 0}, 3), el({1, 1, 0}, 3));
    CHECK(c3.value == 4);
    CHECK(c3.rule == "4.8(2a)");
    auto c4 = predict_cycle_comaximal(cfg, el({1, 0, 0}, 3), el({0, 1, 0}, 3));
    CHECK(c4.value == 6);
    CHECK(c4.rule == "4.8(2b)");
}

TEST_CASE("cycle rules equal the exhaustive oracle at three values") {
    auto cfg = make_model(3, 3);
    for (auto kind : {GraphKind::ZeroDivisor, GraphKind::Comaximal}) {
        auto mg = build_graph(cfg, kind);
        int mismatches = 0;
        for (int i = 0; i < mg.graph.vertex_count(); ++i)
            for (int j = i + 1; j < mg.graph.vertex_count(); ++j) {
                auto p = kind == GraphKind::ZeroDivisor
                             ? predict_cycle_zero_divisor(cfg, mg.vertex(i), mg.vertex(j))
                             : predict_cycle_comaximal(cfg, mg.vertex(i), mg.vertex(j));
                auto oracle = smallest_cycle_through_pair(mg.graph, i, j);
                if (!oracle || *oracle != p.value)
                    ++mismatches;
            }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("two-valued collapse leaves a no-cycle pair against prediction 4") {
    auto cfg = make_model(3, 2);
    auto mg = build_graph(cfg, GraphKind::ZeroDivisor);
    int nocycle_vs_4 = 0;
    for (int i = 0; i < mg.graph.vertex_count(); ++i)
        for (int j = i + 1; j < mg.graph.vertex_count(); ++j) {
            auto p = predict_cycle_zero_divisor(cfg, mg.vertex(i), mg.vertex(j));
            if (!smallest_cycle_through_pair(mg.graph, i, j) && p.value == 4)
                ++nocycle_vs_4;
        }
    CHECK(nocycle_vs_4 > 0);
}

TEST_CASE("triangle membership rules") {
    auto cfg3 = make_model(3, 2);
    CHECK_FALSE(on_triangle_zero_divisor(cfg3, el({1, 1, 0}, 2)));
    CHECK(on_triangle_zero_divisor(cfg3, el({1, 0, 0}, 2)));
    CHECK_FALSE(on_triangle_comaximal(cfg3, el({1, 0, 0}, 2)));
    CHECK(on_triangle_comaximal(make_model(3, 3), el({1, 2, 0}, 3)));

    for (int x : {2, 3, 4})
        for (int a : {2, 3}) {
            auto cfg = make_model(x, a);
            for (auto kind : {GraphKind::ZeroDivisor, GraphKind::Comaximal}) {
                auto mg = build_graph(cfg, kind);
                int mismatches = 0;
                for (int i = 0; i < mg.graph.vertex_count(); ++i) {
                    bool predicted = kind == GraphKind::ZeroDivisor
                                         ? on_triangle_zero_divisor(cfg, mg.vertex(i))
                                         : on_triangle_comaximal(cfg, mg.vertex(i));
                    if (predicted != vertex_on_triangle(mg.graph, i))
                        ++mismatches;
                }
                CHECK(mismatches == 0);
            }
        }
}

TEST_CASE("orthogonality rule and witnesses") {
    auto cfg = make_model(3, 3);
    CHECK(orthogonal_zero_divisor(cfg, el({1, 0, 0}, 3), el({0, 1, 1}, 3)));
    CHECK_FALSE(orthogonal_zero_divisor(cfg, el({1, 0, 0}, 3), el({0, 1, 0}, 3)));
    CHECK(complement_witness(cfg, el({1, 0, 0}, 3)) == el({0, 1, 1}, 3));
    CHECK(complement_witness(cfg, el({1, 2, 0}, 3)) == el({0, 0, 1}, 3));

    // Witness orthogonality holds for every vertex of every swept model, and
    // matches the graph-level definition (adjacent, no common neighbor).
    for (int x : {2, 3, 4})
        for (int a : {2, 3}) {
            auto sweep_cfg = make_model(x, a);
            auto mg = build_graph(sweep_cfg, GraphKind::ZeroDivisor);
            int failures = 0;
            for (int i = 0; i < mg.graph.vertex_count(); ++i) {
                RingElement w = complement_witness(sweep_cfg, mg.vertex(i));
                auto j = mg.vertex_index(w);
                if (!j || !orthogonal(mg.graph, i, *j) ||
                    !orthogonal_zero_divisor(sweep_cfg, mg.vertex(i), w))
                    ++failures;
            }
            CHECK(failures == 0);
        }
}

TEST_CASE("complementedness prediction is constant on finite discrete models") {
    CHECK(predict_complemented(make_model(3, 2), GraphKind::ZeroDivisor));
    CHECK(predict_complemented(make_model(4, 3), GraphKind::Comaximal));
}
