#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringgraph/graph.hpp"
#include "ringgraph/model.hpp"

namespace ringgraph {

// Vertices with identical neighbor sets, collapsed to one quotient vertex.
struct EquivClass {
    int representative = -1;       // smallest member
    std::vector<int> members;      // ascending
    std::vector<int> neighborhood; // the shared parent-level neighbor set
};

// The neighborhood-class quotient of a simple graph: classes ordered by
// smallest member, induced adjacency between distinct classes.
struct QuotientGraph {
    std::vector<EquivClass> classes;
    SimpleGraph graph;         // adjacency on class indices
    std::vector<int> class_of; // parent vertex -> class index

    QuotientGraph() : graph(0) {}
    int class_count() const { return static_cast<int>(classes.size()); }
};

// The neighbor set [u] of a vertex, ascending.
inline std::vector<int> neighborhood_class(const SimpleGraph& g, int u) { return g.neighbors(u); }

inline QuotientGraph build_quotient(const SimpleGraph& g) {
    std::map<std::vector<int>, std::vector<int>> fibers;
    for (int u = 0; u < g.vertex_count(); ++u)
        fibers[g.neighbors(u)].push_back(u);

    QuotientGraph q;
    q.classes.reserve(fibers.size());
    for (auto& [nbhd, members] : fibers)
        q.classes.push_back(EquivClass{members.front(), members, nbhd});
    std::sort(q.classes.begin(), q.classes.end(),
              [](const EquivClass& a, const EquivClass& b) { return a.representative < b.representative; });

    q.class_of.assign(g.vertex_count(), -1);
    for (size_t c = 0; c < q.classes.size(); ++c)
        for (int u : q.classes[c].members)
            q.class_of[u] = static_cast<int>(c);

    // Adjacency via representatives; representative-independence is audited
    // separately by verify_well_defined.
    q.graph = SimpleGraph(static_cast<int>(q.classes.size()));
    for (size_t i = 0; i < q.classes.size(); ++i)
        for (size_t j = i + 1; j < q.classes.size(); ++j)
            if (g.adjacent(q.classes[i].representative, q.classes[j].representative))
                q.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return q;
}

// Independent audit of a quotient against its parent: the classes partition
// the vertex set, members of one class share their neighbor set and are
// mutually non-adjacent, and class adjacency matches every cross pair.
inline bool verify_well_defined(const SimpleGraph& g, const QuotientGraph& q) {
    if (static_cast<int>(q.class_of.size()) != g.vertex_count())
        throw InputError("quotient was not built from this graph");
    std::vector<int> seen(g.vertex_count(), 0);
    for (size_t c = 0; c < q.classes.size(); ++c) {
        const auto& cls = q.classes[c];
        if (cls.members.empty() || cls.representative != cls.members.front())
            return false;
        for (int u : cls.members) {
            if (u < 0 || u >= g.vertex_count() || seen[u]++ || q.class_of[u] != static_cast<int>(c))
                return false;
            if (g.neighbors(u) != cls.neighborhood)
                return false;
        }
        for (size_t i = 0; i < cls.members.size(); ++i)
            for (size_t j = i + 1; j < cls.members.size(); ++j)
                if (g.adjacent(cls.members[i], cls.members[j]))
                    return false;
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!seen[u])
            return false;
    for (int i = 0; i < q.class_count(); ++i)
        for (int j = i + 1; j < q.class_count(); ++j) {
            bool class_edge = q.graph.adjacent(i, j);
            for (int a : q.classes[i].members)
                for (int b : q.classes[j].members)
                    if (g.adjacent(a, b) != class_edge)
                        return false;
        }
    return true;
}

// Bijection check plus adjacency preservation in both directions.
inline bool is_quotient_isomorphism(const QuotientGraph& a, const QuotientGraph& b,
                                    const std::vector<int>& phi) {
    const int n = a.class_count();
    if (b.class_count() != n || static_cast<int>(phi.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int c : phi) {
        if (c < 0 || c >= n || hit[c])
            return false;
        hit[c] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.graph.adjacent(i, j) != b.graph.adjacent(phi[i], phi[j]))
                return false;
    return true;
}

// Both graphs over one model together with their quotients and the explicit
// support-complement map between the quotients: the class of elements
// supported on T goes to the class of elements supported on X \ T.
struct CanonicalPhi {
    ModelGraph zero_divisor;
    ModelGraph comaximal;
    QuotientGraph zero_divisor_quotient;
    QuotientGraph comaximal_quotient;
    std::vector<int> phi; // zero-divisor quotient class -> comaximal quotient class
};

namespace detail {

inline PointSet class_support(const ModelGraph& mg, const QuotientGraph& q, int cls) {
    return mg.vertex(q.classes[cls].representative).cozero_set();
}

} // namespace detail

inline CanonicalPhi canonical_phi(const ModelConfig& cfg, long long cap = 100000) {
    if (cfg.space.size() < 2)
        throw InputError("canonical quotient map needs |X| >= 2");
    CanonicalPhi out{build_graph(cfg, GraphKind::ZeroDivisor, cap),
                     build_graph(cfg, GraphKind::Comaximal, cap), {}, {}, {}};
    out.zero_divisor_quotient = build_quotient(out.zero_divisor.graph);
    out.comaximal_quotient = build_quotient(out.comaximal.graph);

    std::map<std::vector<int>, int> comax_class_by_support;
    for (int c = 0; c < out.comaximal_quotient.class_count(); ++c)
        comax_class_by_support[detail::class_support(out.comaximal, out.comaximal_quotient, c).members()] =
            c;

    out.phi.assign(out.zero_divisor_quotient.class_count(), -1);
    for (int c = 0; c < out.zero_divisor_quotient.class_count(); ++c) {
        PointSet support = detail::class_support(out.zero_divisor, out.zero_divisor_quotient, c);
        auto it = comax_class_by_support.find(support.complement().members());
        if (it == comax_class_by_support.end())
            throw InputError("comaximal quotient is missing a support class");
        out.phi[c] = it->second;
    }
    return out;
}

inline int class_size(const QuotientGraph& q, int cls) {
    if (cls < 0 || cls >= q.class_count())
        throw InputError("class index out of range");
    return static_cast<int>(q.classes[cls].members.size());
}

// (a-1)^s: elements sharing a fixed support of size s.
inline long long class_size_formula(const ModelConfig& cfg, int support_size) {
    if (support_size < 1 || support_size > cfg.space.size() - 1)
        throw InputError("support size outside 1..|X|-1");
    long long out = 1;
    for (int i = 0; i < support_size; ++i)
        out *= cfg.alphabet - 1;
    return out;
}

// Outcome of rebuilding a parent-level isomorphism from a quotient
// isomorphism: either the assembled vertex mapping (members matched in
// sorted order) or the list of classes whose sizes rule it out. A size
// mismatch is a finding about the model, not an error.
struct LiftOutcome {
    std::optional<std::vector<int>> mapping;
    std::vector<int> size_mismatches; // class indices in the first quotient
};

inline LiftOutcome lift_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const QuotientGraph& q1,
                                    const QuotientGraph& q2, const std::vector<int>& phi) {
    if (!verify_well_defined(g1, q1) || !verify_well_defined(g2, q2))
        throw InputError("lift needs quotients built from the given graphs");
    if (!is_quotient_isomorphism(q1, q2, phi))
        throw InputError("lift needs a verified quotient isomorphism");

    LiftOutcome out;
    for (int c = 0; c < q1.class_count(); ++c)
        if (q1.classes[c].members.size() != q2.classes[phi[c]].members.size())
            out.size_mismatches.push_back(c);
    if (!out.size_mismatches.empty())
        return out;

    std::vector<int> psi(g1.vertex_count(), -1);
    for (int c = 0; c < q1.class_count(); ++c) {
        const auto& from = q1.classes[c].members;
        const auto& to = q2.classes[phi[c]].members;
        for (size_t i = 0; i < from.size(); ++i)
            psi[from[i]] = to[i];
    }
    for (int u = 0; u < g1.vertex_count(); ++u)
        for (int v = u + 1; v < g1.vertex_count(); ++v)
            if (g1.adjacent(u, v) != g2.adjacent(psi[u], psi[v]))
                throw std::logic_error("lifted mapping failed the adjacency audit");
    out.mapping = std::move(psi);
    return out;
}

// DOT rendering of a model graph's quotient, classes labelled
// "supp={...}×size". Deterministic like to_dot.
inline std::string quotient_dot(const ModelGraph& mg, const QuotientGraph& q,
                                std::string_view name = "quotient") {
    SimpleGraph labelled = q.graph;
    for (int c = 0; c < q.class_count(); ++c) {
        std::ostringstream label;
        label << "supp=" << detail::class_support(mg, q, c).to_string() << "×"
              << q.classes[c].members.size();
        labelled.set_label(c, label.str());
    }
    return to_dot(labelled, name);
}

} // namespace ringgraph
