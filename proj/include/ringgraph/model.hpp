#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringgraph/graph.hpp"
#include "ringgraph/point_set.hpp"

namespace ringgraph {

enum class ArithmeticMode {
    Support,   // only zero/nonzero structure matters; any alphabet size
    PrimeField // genuine Z_p arithmetic; alphabet size must be prime
};

enum class GraphKind { ZeroDivisor, Comaximal };

enum class ElementKind { Zero, Unit, ZeroDivisorVertex };

inline bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// A function from the points of a finite space into {0,...,a-1}. Value 0 is
// the ring zero; all other values count as nonzero in either mode.
class RingElement {
public:
    RingElement(std::vector<int> values, int alphabet) : alphabet_(alphabet) {
        if (alphabet < 2)
            throw InputError("alphabet size must be at least 2");
        if (values.empty())
            throw InputError("element needs at least one point");
        for (int v : values)
            if (v < 0 || v >= alphabet)
                throw InputError("value " + std::to_string(v) + " outside alphabet");
        values_ = std::move(values);
    }

    static RingElement zero(int points, int alphabet) {
        return RingElement(std::vector<int>(points, 0), alphabet);
    }

    int points() const { return static_cast<int>(values_.size()); }
    int alphabet() const { return alphabet_; }
    int value(int p) const {
        if (p < 0 || p >= points())
            throw InputError("point out of range");
        return values_[p];
    }

    PointSet zero_set() const {
        PointSet z(points());
        for (int p = 0; p < points(); ++p)
            if (values_[p] == 0)
                z.insert(p);
        return z;
    }
    PointSet cozero_set() const { return zero_set().complement(); }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
    }
    bool is_unit() const {
        return std::none_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
    }

    // In a finite discrete model every nonzero non-unit divides zero, so the
    // zero-divisor and comaximal graphs share one vertex set.
    ElementKind classify() const {
        if (is_zero())
            return ElementKind::Zero;
        if (is_unit())
            return ElementKind::Unit;
        return ElementKind::ZeroDivisorVertex;
    }

    std::string to_string() const {
        std::string s = "(";
        for (int p = 0; p < points(); ++p) {
            if (p)
                s += ",";
            s += std::to_string(values_[p]);
        }
        return s + ")";
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.alphabet_ == b.alphabet_ && a.values_ == b.values_;
    }
    // Lexicographic on the value tuple; the vertex order everywhere.
    friend bool operator<(const RingElement& a, const RingElement& b) { return a.values_ < b.values_; }

private:
    std::vector<int> values_;
    int alphabet_;
};

struct ModelConfig {
    FiniteSpace space;
    int alphabet;
    ArithmeticMode mode;

    ModelConfig(FiniteSpace s, int a, ArithmeticMode m) : space(s), alphabet(a), mode(m) {
        if (a < 2)
            throw InputError("alphabet size must be at least 2");
        if (m == ArithmeticMode::PrimeField && !is_prime(a))
            throw InputError("prime-field mode needs a prime alphabet size, got " + std::to_string(a));
    }
};

inline ModelConfig make_model(int points, int alphabet, ArithmeticMode mode = ArithmeticMode::Support) {
    return ModelConfig(FiniteSpace(points), alphabet, mode);
}

inline void check_element(const ModelConfig& cfg, const RingElement& f) {
    if (f.points() != cfg.space.size() || f.alphabet() != cfg.alphabet)
        throw InputError("element does not belong to this model");
}

inline void check_vertex_element(const ModelConfig& cfg, const RingElement& f) {
    check_element(cfg, f);
    if (f.classify() != ElementKind::ZeroDivisorVertex)
        throw InputError("element " + f.to_string() + " is not a graph vertex");
}

inline PointSet zero_set(const RingElement& f) { return f.zero_set(); }
inline PointSet cozero_set(const RingElement& f) { return f.cozero_set(); }

// Pointwise sum/product mod the alphabet size. Ring-faithful in prime-field
// mode; in support mode only the zero pattern of the product is meaningful.
inline RingElement add(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_element(cfg, f);
    check_element(cfg, g);
    std::vector<int> vals(f.points());
    for (int p = 0; p < f.points(); ++p)
        vals[p] = (f.value(p) + g.value(p)) % cfg.alphabet;
    return RingElement(vals, cfg.alphabet);
}

inline RingElement mul(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_element(cfg, f);
    check_element(cfg, g);
    std::vector<int> vals(f.points());
    for (int p = 0; p < f.points(); ++p)
        vals[p] = (f.value(p) * g.value(p)) % cfg.alphabet;
    return RingElement(vals, cfg.alphabet);
}

// 1 on the subset, 0 elsewhere.
inline RingElement characteristic_function(const ModelConfig& cfg, const PointSet& subset) {
    if (subset.universe() != cfg.space.size())
        throw InputError("subset does not live in the model space");
    std::vector<int> vals(cfg.space.size(), 0);
    for (int p : subset.members())
        vals[p] = 1;
    return RingElement(vals, cfg.alphabet);
}

// f ~ g in the zero-divisor graph: fg = 0, i.e. disjoint cozero sets.
inline bool adjacent_zero_divisor(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_vertex_element(cfg, f);
    check_vertex_element(cfg, g);
    if (cfg.mode == ArithmeticMode::PrimeField)
        return mul(cfg, f, g).is_zero();
    return f.cozero_set().intersect(g.cozero_set()).empty();
}

// f ~ g in the comaximal graph: no fixed maximal ideal holds both, i.e.
// disjoint zero sets.
inline bool adjacent_comaximal(const ModelConfig& cfg, const RingElement& f, const RingElement& g) {
    check_vertex_element(cfg, f);
    check_vertex_element(cfg, g);
    return f.zero_set().intersect(g.zero_set()).empty();
}

inline bool adjacent(const ModelConfig& cfg, GraphKind kind, const RingElement& f, const RingElement& g) {
    return kind == GraphKind::ZeroDivisor ? adjacent_zero_divisor(cfg, f, g)
                                          : adjacent_comaximal(cfg, f, g);
}

inline long long ring_size(const ModelConfig& cfg, long long cap = 100000) {
    long long size = 1;
    for (int p = 0; p < cfg.space.size(); ++p) {
        size *= cfg.alphabet;
        if (size > cap)
            throw ResourceError("model has more than " + std::to_string(cap) + " elements");
    }
    return size;
}

// Every element of the model ring, in lexicographic tuple order.
inline std::vector<RingElement> enumerate_elements(const ModelConfig& cfg, long long cap = 100000) {
    long long size = ring_size(cfg, cap);
    std::vector<RingElement> out;
    out.reserve(static_cast<size_t>(size));
    std::vector<int> vals(cfg.space.size(), 0);
    for (;;) {
        out.emplace_back(vals, cfg.alphabet);
        int p = cfg.space.size() - 1;
        while (p >= 0 && ++vals[p] == cfg.alphabet)
            vals[p--] = 0;
        if (p < 0)
            break;
    }
    return out;
}

// One of the two graphs over a finite model, with its vertex payloads.
// Vertices are exactly the nonzero non-units, in lexicographic order.
struct ModelGraph {
    ModelConfig config;
    GraphKind kind;
    std::vector<RingElement> vertices;
    SimpleGraph graph;

    std::optional<int> vertex_index(const RingElement& f) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), f);
        if (it == vertices.end() || !(*it == f))
            return std::nullopt;
        return static_cast<int>(it - vertices.begin());
    }
    const RingElement& vertex(int id) const {
        graph.check_vertex(id);
        return vertices[static_cast<size_t>(id)];
    }
};

inline ModelGraph build_graph(const ModelConfig& cfg, GraphKind kind, long long cap = 100000) {
    std::vector<RingElement> vertices;
    for (auto& f : enumerate_elements(cfg, cap))
        if (f.classify() == ElementKind::ZeroDivisorVertex)
            vertices.push_back(std::move(f));

    SimpleGraph g(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        g.set_label(static_cast<int>(i), vertices[i].to_string());
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(cfg, kind, vertices[i], vertices[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return ModelGraph{cfg, kind, std::move(vertices), std::move(g)};
}

inline std::string_view to_string(GraphKind k) {
    return k == GraphKind::ZeroDivisor ? "zero-divisor" : "comaximal";
}
inline std::string_view to_string(ArithmeticMode m) {
    return m == ArithmeticMode::Support ? "support" : "field";
}

// Model spec strings: "X=<n>,a=<k>" with optional ",mode=<support|field>".
inline ModelConfig parse_model_spec(std::string_view spec) {
    std::optional<int> points, alphabet;
    ArithmeticMode mode = ArithmeticMode::Support;

    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string_view field = spec.substr(pos, comma == std::string_view::npos ? spec.size() - pos
                                                                                  : comma - pos);
        size_t eq = field.find('=');
        if (eq == std::string_view::npos)
            throw InputError("bad model spec field '" + std::string(field) + "'");
        std::string_view key = field.substr(0, eq), val = field.substr(eq + 1);
        auto as_int = [&] {
            int out = 0;
            if (val.empty())
                throw InputError("empty value in model spec");
            for (char c : val) {
                if (c < '0' || c > '9')
                    throw InputError("bad number '" + std::string(val) + "' in model spec");
                out = out * 10 + (c - '0');
                if (out > 1000000)
                    throw InputError("number too large in model spec");
            }
            return out;
        };
        if (key == "X")
            points = as_int();
        else if (key == "a")
            alphabet = as_int();
        else if (key == "mode") {
            if (val == "support")
                mode = ArithmeticMode::Support;
            else if (val == "field")
                mode = ArithmeticMode::PrimeField;
            else
                throw InputError("unknown mode '" + std::string(val) + "'");
        } else
            throw InputError("unknown model spec key '" + std::string(key) + "'");
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (!points || !alphabet)
        throw InputError("model spec needs X=<n> and a=<k>");
    return make_model(*points, *alphabet, mode);
}

inline std::string to_spec_string(const ModelConfig& cfg) {
    return "X=" + std::to_string(cfg.space.size()) + ",a=" + std::to_string(cfg.alphabet) +
           ",mode=" + std::string(to_string(cfg.mode));
}

} // namespace ringgraph
