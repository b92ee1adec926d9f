#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ringgraph/model.hpp"

namespace ringgraph {

// The fully materialized model ring in prime-field mode: a finite product of
// copies of Z_p, one factor per point. Von Neumann regular, so its minimal
// primes are exactly the fixed maximal ideals M_p = {f : f(p) = 0}.
class RingTable {
public:
    explicit RingTable(const ModelConfig& cfg, long long cap = 100000) : cfg_(cfg) {
        if (cfg.mode != ArithmeticMode::PrimeField)
            throw UnsupportedError("ideal machinery needs prime-field mode");
        elems_ = enumerate_elements(cfg, cap);
    }

    const ModelConfig& config() const { return cfg_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<RingElement>& elements() const { return elems_; }
    const RingElement& zero() const { return elems_.front(); }

    RingElement mul(const RingElement& f, const RingElement& g) const {
        return ringgraph::mul(cfg_, f, g);
    }
    RingElement add(const RingElement& f, const RingElement& g) const {
        return ringgraph::add(cfg_, f, g);
    }

private:
    ModelConfig cfg_;
    std::vector<RingElement> elems_;
};

// Explicit element set closed under addition and ring multiplication,
// optionally remembering generators. Elements kept sorted.
struct IdealSet {
    std::vector<RingElement> elements;
    std::vector<RingElement> generators;
};

inline bool is_ideal(const RingTable& table, const std::vector<RingElement>& elements) {
    auto member = [&](const RingElement& f) {
        return std::binary_search(elements.begin(), elements.end(), f);
    };
    for (const auto& f : elements) {
        for (const auto& g : elements)
            if (!member(table.add(f, g)))
                return false;
        for (const auto& r : table.elements())
            if (!member(table.mul(f, r)))
                return false;
    }
    return true;
}

// Ann(S) = {f : fg = 0 for every g in S}: exactly the elements supported
// inside the common zero set of S. The brute-force product filter is kept in
// the test suite as the independent oracle for this computation.
inline IdealSet annihilator(const RingTable& table, const std::vector<RingElement>& s) {
    PointSet common_zero = PointSet::all(table.config().space.size());
    for (const auto& g : s) {
        check_element(table.config(), g);
        common_zero = common_zero.intersect(g.zero_set());
    }
    IdealSet out;
    for (const auto& f : table.elements())
        if (f.cozero_set().subset_of(common_zero))
            out.elements.push_back(f);
    return out;
}

inline IdealSet annihilator(const RingTable& table, const RingElement& f) {
    return annihilator(table, std::vector<RingElement>{f});
}

struct MinimalPrime {
    int point = -1;
    std::vector<RingElement> elements; // {f : f(point) = 0}
};

inline std::vector<MinimalPrime> minimal_primes(const RingTable& table) {
    std::vector<MinimalPrime> out;
    for (int p = 0; p < table.config().space.size(); ++p) {
        MinimalPrime mp{p, {}};
        for (const auto& f : table.elements())
            if (f.value(p) == 0)
                mp.elements.push_back(f);
        out.push_back(std::move(mp));
    }
    return out;
}

// h(S): the minimal primes containing S, as point ids. M_p contains S exactly
// when every member of S vanishes at p.
inline std::vector<int> hull(const RingTable& table, const std::vector<RingElement>& s) {
    std::vector<int> out;
    for (int p = 0; p < table.config().space.size(); ++p) {
        bool contains = true;
        for (const auto& f : s)
            if (f.value(p) != 0) {
                contains = false;
                break;
            }
        if (contains)
            out.push_back(p);
    }
    return out;
}

inline std::vector<int> hull(const RingTable& table, const RingElement& f) {
    return hull(table, std::vector<RingElement>{f});
}

// k(S): the intersection of the named minimal primes.
inline std::vector<RingElement> kernel(const RingTable& table, const std::vector<int>& prime_points) {
    std::vector<RingElement> out;
    for (const auto& f : table.elements()) {
        bool in_all = true;
        for (int p : prime_points)
            if (f.value(p) != 0) {
                in_all = false;
                break;
            }
        if (in_all)
            out.push_back(f);
    }
    return out;
}

// Every ideal of a finite product of fields is the set of elements supported
// inside some subset T of the points; χ_T generates it.
inline std::vector<IdealSet> enumerate_ideals(const RingTable& table) {
    const int n = table.config().space.size();
    std::vector<IdealSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        PointSet support(n);
        for (int p = 0; p < n; ++p)
            if ((mask >> p) & 1)
                support.insert(p);
        IdealSet ideal;
        ideal.generators.push_back(characteristic_function(table.config(), support));
        for (const auto& f : table.elements())
            if (f.cozero_set().subset_of(support))
                ideal.elements.push_back(f);
        out.push_back(std::move(ideal));
    }
    return out;
}

// ⟨g⟩ by enumeration.
inline std::vector<RingElement> principal_ideal(const RingTable& table, const RingElement& g) {
    check_element(table.config(), g);
    std::vector<RingElement> out;
    for (const auto& h : table.elements())
        out.push_back(table.mul(h, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct IdentityCheck {
    std::string tag;
    bool pass = false;
    std::string counterexample; // empty when pass
};

namespace detail {

inline std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<RingElement> element_intersection(const std::vector<RingElement>& a,
                                                     const std::vector<RingElement>& b) {
    std::vector<RingElement> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool element_subset(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool int_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

// The hull/kernel identity suite. Hulls and kernels of ideals go through the
// operators above; failures carry a printable counterexample.
inline std::vector<IdentityCheck> check_hull_kernel_identities(const RingTable& table) {
    std::vector<IdentityCheck> out;
    auto ideals = enumerate_ideals(table);
    const auto& elems = table.elements();

    auto record = [&](std::string tag, bool pass, std::string counterexample) {
        out.push_back(IdentityCheck{std::move(tag), pass, pass ? "" : std::move(counterexample)});
    };

    // Monotonicity of h on nested ideals.
    {
        bool pass = true;
        std::string ce;
        for (const auto& i1 : ideals)
            for (const auto& i2 : ideals) {
                if (!detail::element_subset(i1.elements, i2.elements))
                    continue;
                if (!detail::int_subset(hull(table, i2.elements),
                                        hull(table, i1.elements))) {
                    pass = false;
                    ce = "S1 gen " + i1.generators.front().to_string() + ", S2 gen " +
                         i2.generators.front().to_string();
                }
            }
        record("3.5(1)", pass, ce);
    }

    // Monotonicity of k on nested prime families.
    {
        bool pass = true;
        std::string ce;
        const int n = table.config().space.size();
        for (int m1 = 0; m1 < (1 << n); ++m1)
            for (int m2 = m1;; m2 = (m2 + 1) | m1) { // supersets of m1
                std::vector<int> p1, p2;
                for (int p = 0; p < n; ++p) {
                    if ((m1 >> p) & 1)
                        p1.push_back(p);
                    if ((m2 >> p) & 1)
                        p2.push_back(p);
                }
                if (!detail::element_subset(kernel(table, p2), kernel(table, p1))) {
                    pass = false;
                    ce = "prime families " + std::to_string(m1) + " within " + std::to_string(m2);
                }
                if (m2 == (1 << n) - 1)
                    break;
            }
        record("3.5(2)", pass, ce);
    }

    // h(S1 ∩ S2) = h(S1) ∪ h(S2) for ideals.
    {
        bool pass = true;
        std::string ce;
        for (const auto& i1 : ideals)
            for (const auto& i2 : ideals) {
                auto lhs = hull(table, detail::element_intersection(i1.elements, i2.elements));
                auto rhs = detail::sorted_union(hull(table, i1.elements),
                                                hull(table, i2.elements));
                if (lhs != rhs) {
                    pass = false;
                    ce = "S1 gen " + i1.generators.front().to_string() + ", S2 gen " +
                         i2.generators.front().to_string();
                }
            }
        record("3.5(3)", pass, ce);
    }

    // k(F1 ∪ F2) = k(F1) ∩ k(F2).
    {
        bool pass = true;
        std::string ce;
        const int n = table.config().space.size();
        for (int m1 = 0; m1 < (1 << n); ++m1)
            for (int m2 = 0; m2 < (1 << n); ++m2) {
                std::vector<int> p1, p2;
                for (int p = 0; p < n; ++p) {
                    if ((m1 >> p) & 1)
                        p1.push_back(p);
                    if ((m2 >> p) & 1)
                        p2.push_back(p);
                }
                auto united = detail::sorted_union(p1, p2);
                auto lhs = kernel(table, united);
                auto rhs = detail::element_intersection(kernel(table, p1),
                                                        kernel(table, p2));
                if (lhs != rhs)
                    pass = false;
            }
        record("3.5(4)", pass, ce);
    }

    // h(Ann(f)) is the complement of h(f), for every element.
    {
        bool pass = true;
        std::string ce;
        const int n = table.config().space.size();
        for (const auto& f : elems) {
            auto h_ann = hull(table, annihilator(table, f).elements);
            std::vector<int> expected;
            auto h_f = hull(table, f);
            for (int p = 0; p < n; ++p)
                if (!std::binary_search(h_f.begin(), h_f.end(), p))
                    expected.push_back(p);
            if (h_ann != expected) {
                pass = false;
                ce = "f = " + f.to_string();
            }
        }
        record("3.6", pass, ce);
    }

    // kh(Ann(S)) = Ann(S) over singleton and pair sets.
    {
        bool pass = true;
        std::string ce;
        auto check_set = [&](const std::vector<RingElement>& s, const std::string& desc) {
            auto ann = annihilator(table, s).elements;
            auto kh = kernel(table, hull(table, ann));
            if (kh != ann) {
                pass = false;
                ce = desc;
            }
        };
        for (const auto& f : elems)
            check_set({f}, "S = {" + f.to_string() + "}");
        for (const auto& f : elems)
            for (const auto& g : elems)
                check_set({f, g}, "S = {" + f.to_string() + ", " + g.to_string() + "}");
        record("3.7(1)", pass, ce);
    }

    // Ann(l) = Ann(f) ∩ Ann(g)  ⇔  h(l) = h(f) ∩ h(g), over all triples.
    {
        bool pass = true;
        std::string ce;
        std::vector<std::vector<RingElement>> ann;
        std::vector<std::vector<int>> hulls;
        for (const auto& f : elems) {
            ann.push_back(annihilator(table, f).elements);
            hulls.push_back(hull(table, f));
        }
        const int count = table.size();
        for (int fi = 0; fi < count && pass; ++fi)
            for (int gi = 0; gi < count && pass; ++gi) {
                auto ann_meet = detail::element_intersection(ann[fi], ann[gi]);
                auto hull_meet = detail::sorted_intersection(hulls[fi], hulls[gi]);
                for (int li = 0; li < count; ++li) {
                    bool lhs = ann[li] == ann_meet;
                    bool rhs = hulls[li] == hull_meet;
                    if (lhs != rhs) {
                        pass = false;
                        ce = "f = " + elems[fi].to_string() + ", g = " + elems[gi].to_string() +
                             ", l = " + elems[li].to_string();
                        break;
                    }
                }
            }
        record("3.7(2)", pass, ce);
    }

    // Ann(Ann(f)) = Ann(g)  ⇔  h(f) = h(Ann(g)), over all pairs.
    {
        bool pass = true;
        std::string ce;
        for (const auto& f : elems) {
            auto ann_ann_f = annihilator(table, annihilator(table, f).elements).elements;
            auto h_f = hull(table, f);
            for (const auto& g : elems) {
                bool lhs = ann_ann_f == annihilator(table, g).elements;
                bool rhs = h_f == hull(table, annihilator(table, g).elements);
                if (lhs != rhs) {
                    pass = false;
                    ce = "f = " + f.to_string() + ", g = " + g.to_string();
                }
            }
        }
        record("3.7(3)", pass, ce);
    }

    return out;
}

// Witness for the annihilator condition on the pair (f, g): any element
// supported on coz f ∪ coz g. In Z_p the sum of squares f²+g² can vanish at
// points where neither factor does, so the characteristic function of the
// union is used instead; only Ann(h) = Ann(f) ∩ Ann(g) matters.
inline RingElement ac_witness(const RingTable& table, const RingElement& f, const RingElement& g) {
    check_element(table.config(), f);
    check_element(table.config(), g);
    return characteristic_function(table.config(), f.cozero_set().unite(g.cozero_set()));
}

inline bool check_ac_condition(const RingTable& table) {
    for (const auto& f : table.elements())
        for (const auto& g : table.elements()) {
            auto lhs = annihilator(table, ac_witness(table, f, g)).elements;
            auto rhs = detail::element_intersection(annihilator(table, f).elements,
                                                    annihilator(table, g).elements);
            if (lhs != rhs)
                return false;
        }
    return true;
}

// Witness for compactness of the minimal-prime space: g with h(g) = h(Ann(f)).
// χ_{Z(f)} works uniformly, covering f = 0 (g = 1) and f a unit (g = 0).
inline RingElement compactness_witness(const RingTable& table, const RingElement& f) {
    check_element(table.config(), f);
    return characteristic_function(table.config(), f.zero_set());
}

inline bool is_min_prime_space_compact(const RingTable& table) {
    for (const auto& f : table.elements()) {
        auto h_ann = hull(table, annihilator(table, f).elements);
        if (hull(table, compactness_witness(table, f)) != h_ann)
            return false;
    }
    return true;
}

// Both sides of the two hull/zero-set equivalences, evaluated independently:
//   h(Ann(f)) ⊆ h(g)  vs  Z(f) ∪ Z(g) = X
//   h(Ann(f)) ⊇ h(g)  vs  int Z(f) ∩ int Z(g) = ∅
struct HullZeroSetSides {
    std::pair<bool, bool> covers;    // (hull side, zero-set side)
    std::pair<bool, bool> disjoint_interiors;
};

inline HullZeroSetSides hull_vs_zero_set_sides(const RingTable& table, const RingElement& f,
                                               const RingElement& g) {
    check_element(table.config(), f);
    check_element(table.config(), g);
    const auto& cfg = table.config();
    auto h_ann_f = hull(table, annihilator(table, f).elements);
    auto h_g = hull(table, g);

    HullZeroSetSides sides;
    sides.covers.first = detail::int_subset(h_ann_f, h_g);
    sides.covers.second = f.zero_set().unite(g.zero_set()) == PointSet::all(cfg.space.size());
    sides.disjoint_interiors.first = detail::int_subset(h_g, h_ann_f);
    sides.disjoint_interiors.second =
        interior(cfg.space, f.zero_set()).intersect(interior(cfg.space, g.zero_set())).empty();
    return sides;
}

struct PrincipalityResult {
    bool principal = false;
    RingElement generator;
};

// Whether the fixed maximal ideal M_p is principal. Every point of a finite
// discrete space is isolated, so χ_{X\{p}} always generates; the claim is
// still verified element-for-element.
inline PrincipalityResult is_principal_maximal(const RingTable& table, int point) {
    const auto& cfg = table.config();
    if (point < 0 || point >= cfg.space.size())
        throw InputError("point out of range");
    PointSet singleton(cfg.space.size(), {point});
    RingElement generator = characteristic_function(cfg, singleton.complement());

    std::vector<RingElement> m_p;
    for (const auto& f : table.elements())
        if (f.value(point) == 0)
            m_p.push_back(f);
    return PrincipalityResult{principal_ideal(table, generator) == m_p, generator};
}

} // namespace ringgraph
