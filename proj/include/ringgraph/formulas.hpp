#pragma once

#include <string_view>

#include "ringgraph/model.hpp"

namespace ringgraph {

// Closed-form rules over zero sets and interiors. Each prediction carries the
// tag of the clause that fired, so a failed comparison names the exact rule.
// The interior hook is applied wherever a rule reads "int Z(f)"; it is never
// folded away even though the discrete models make it the identity.

struct DistancePrediction {
    int value; // 1, 2 or 3
    std::string_view rule;
};

struct CyclePrediction {
    int value; // 3, 4 or 6
    std::string_view rule;
};

namespace detail {

inline void check_vertex_pair(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_vertex_element(cfg, f);
    check_vertex_element(cfg, g);
    if (f == g)
        throw InputError("rule needs two distinct vertices");
}

} // namespace detail

// Zero-divisor distance trichotomy:
//   1  iff Z(f) ∪ Z(g) = X
//   2  iff Z(f) ∪ Z(g) ≠ X and int Z(f) ∩ int Z(g) ≠ ∅
//   3  otherwise
inline DistancePrediction predict_distance_zero_divisor(const ModelConfig& cfg, const RingElement& f,
                                                        const RingElement& g) {
    detail::check_vertex_pair(cfg, f, g);
    const bool zero_sets_cover = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    const bool interiors_meet =
        !interior(cfg.space, f.zero_set()).intersect(interior(cfg.space, g.zero_set())).empty();
    if (zero_sets_cover)
        return {1, "2.4(1)"};
    if (interiors_meet)
        return {2, "2.4(2)"};
    return {3, "2.4(3)"};
}

// Comaximal distance trichotomy:
//   1  iff Z(f) ∩ Z(g) = ∅
//   2  iff Z(f) ∩ Z(g) ≠ ∅ and Z(f) ∪ Z(g) ≠ X
//   3  otherwise (needs |X| ≥ 3 to occur)
inline DistancePrediction predict_distance_comaximal(const ModelConfig& cfg, const RingElement& f,
                                                     const RingElement& g) {
    detail::check_vertex_pair(cfg, f, g);
    const bool zero_sets_meet = !f.zero_set().intersect(g.zero_set()).empty();
    const bool zero_sets_cover = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    if (!zero_sets_meet)
        return {1, "4.2(1)"};
    if (!zero_sets_cover)
        return {2, "4.2(2)"};
    return {3, "4.2(3)"};
}

// Zero-divisor eccentricity: 2 when the cozero set is a single point, else 3.
// Stated for spaces with at least three points; smaller spaces are refused.
inline int predict_eccentricity_zero_divisor(const ModelConfig& cfg, const RingElement& f) {
    if (cfg.space.size() < 3)
        throw UnsupportedError("eccentricity rule needs |X| >= 3");
    check_vertex_element(cfg, f);
    return f.cozero_set().size() == 1 ? 2 : 3;
}

// Smallest cycle through a zero-divisor pair:
//   3  iff Z∪Z = X and interiors meet
//   4  iff exactly one of (Z∪Z = X), (interiors meet)
//   6  iff Z∪Z ≠ X and interiors disjoint
// Faithful to the graph only when the alphabet has at least three values;
// below that the model collapses onto its own quotient.
inline CyclePrediction predict_cycle_zero_divisor(const ModelConfig& cfg, const RingElement& f,
                                                  const RingElement& g) {
    detail::check_vertex_pair(cfg, f, g);
    const bool zero_sets_cover = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    const bool interiors_meet =
        !interior(cfg.space, f.zero_set()).intersect(interior(cfg.space, g.zero_set())).empty();
    if (zero_sets_cover && interiors_meet)
        return {3, "2.11(1)"};
    if (!zero_sets_cover && interiors_meet)
        return {4, "2.11(2)"};
    if (zero_sets_cover)
        return {4, "2.11(2)"};
    return {6, "2.11(3)"};
}

// Smallest cycle through a comaximal pair, split on whether the zero sets meet.
inline CyclePrediction predict_cycle_comaximal(const ModelConfig& cfg, const RingElement& f,
                                               const RingElement& g) {
    detail::check_vertex_pair(cfg, f, g);
    const bool zero_sets_meet = !f.zero_set().intersect(g.zero_set()).empty();
    const bool zero_sets_cover = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    if (!zero_sets_meet)
        return zero_sets_cover ? CyclePrediction{4, "4.8(1b)"} : CyclePrediction{3, "4.8(1a)"};
    return zero_sets_cover ? CyclePrediction{6, "4.8(2b)"} : CyclePrediction{4, "4.8(2a)"};
}

// f lies on a triangle of the zero-divisor graph iff int Z(f) has >= 2 points.
inline bool on_triangle_zero_divisor(const ModelConfig& cfg, const RingElement& f) {
    check_vertex_element(cfg, f);
    return interior(cfg.space, f.zero_set()).size() >= 2;
}

// f lies on a triangle of the comaximal graph iff coz f has >= 2 points.
inline bool on_triangle_comaximal(const ModelConfig& cfg, const RingElement& f) {
    check_vertex_element(cfg, f);
    return f.cozero_set().size() >= 2;
}

// f ⊥ g in the zero-divisor graph: zero sets cover X and interiors disjoint.
inline bool orthogonal_zero_divisor(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_vertex_element(cfg, f);
    check_vertex_element(cfg, g);
    const bool zero_sets_cover = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    const bool interiors_meet =
        !interior(cfg.space, f.zero_set()).intersect(interior(cfg.space, g.zero_set())).empty();
    return zero_sets_cover && !interiors_meet;
}

// χ_{Z(f)} is an orthogonal partner of f in both graphs of a discrete model.
inline RingElement complement_witness(const ModelConfig& cfg, const RingElement& f) {
    check_vertex_element(cfg, f);
    return characteristic_function(cfg, f.zero_set());
}

// Finite discrete spaces are P-spaces and have compact minimal-prime spaces,
// so both graphs are predicted complemented on every model in range.
inline bool predict_complemented(const ModelConfig&, GraphKind) { return true; }

} // namespace ringgraph
