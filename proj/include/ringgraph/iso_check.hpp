#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringgraph/isomorphism.hpp"
#include "ringgraph/quotient.hpp"

namespace ringgraph {

inline std::map<int, int> degree_multiset(const SimpleGraph& g) {
    std::map<int, int> counts;
    for (int u = 0; u < g.vertex_count(); ++u)
        ++counts[g.degree(u)];
    return counts;
}

inline std::string degree_multiset_text(const std::map<int, int>& counts) {
    std::string out = "{";
    bool first = true;
    for (auto [deg, n] : counts) {
        if (!first)
            out += ", ";
        out += std::to_string(deg) + "^" + std::to_string(n);
        first = false;
    }
    return out + "}";
}

// Verdict on whether the two graphs of one model are isomorphic: try the
// support-complement quotient lift first, then the degree-multiset
// obstruction, then exhaustive search.
struct IsoVerdict {
    bool isomorphic = false;
    std::string method;                  // quotient-lift | degree-multiset | exhaustive-search
    std::optional<std::vector<int>> mapping;
    std::vector<int> mismatched_classes; // lift obstruction, when the lift failed
    std::map<int, int> zero_divisor_degrees, comaximal_degrees;
};

inline IsoVerdict model_isomorphism_verdict(const ModelConfig& cfg, long long cap = 100000,
                                            int iso_cap = 200) {
    CanonicalPhi c = canonical_phi(cfg, cap);
    IsoVerdict verdict;
    verdict.zero_divisor_degrees = degree_multiset(c.zero_divisor.graph);
    verdict.comaximal_degrees = degree_multiset(c.comaximal.graph);

    auto lift = lift_isomorphism(c.zero_divisor.graph, c.comaximal.graph, c.zero_divisor_quotient,
                                 c.comaximal_quotient, c.phi);
    if (lift.mapping) {
        if (!is_isomorphism(c.zero_divisor.graph, c.comaximal.graph, *lift.mapping))
            throw std::logic_error("lifted mapping failed the adjacency audit");
        verdict.isomorphic = true;
        verdict.method = "quotient-lift";
        verdict.mapping = std::move(lift.mapping);
        return verdict;
    }
    verdict.mismatched_classes = std::move(lift.size_mismatches);

    if (verdict.zero_divisor_degrees != verdict.comaximal_degrees) {
        verdict.isomorphic = false;
        verdict.method = "degree-multiset";
        return verdict;
    }

    auto mapping = find_isomorphism(c.zero_divisor.graph, c.comaximal.graph, iso_cap);
    verdict.isomorphic = mapping.has_value();
    verdict.method = "exhaustive-search";
    verdict.mapping = std::move(mapping);
    return verdict;
}

} // namespace ringgraph
