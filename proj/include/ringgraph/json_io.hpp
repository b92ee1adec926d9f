#pragma once

#include <json.hpp>

#include "ringgraph/model.hpp"
#include "ringgraph/quotient.hpp"

namespace ringgraph {

// JSON views of the model objects. nlohmann::json keeps object keys sorted,
// so identical inputs serialize to identical bytes.

inline nlohmann::json element_json(const RingElement& f) {
    auto arr = nlohmann::json::array();
    for (int p = 0; p < f.points(); ++p)
        arr.push_back(f.value(p));
    return arr;
}

inline nlohmann::json model_json(const ModelConfig& cfg) {
    return {{"X", cfg.space.size()}, {"a", cfg.alphabet}, {"mode", std::string(to_string(cfg.mode))}};
}

inline nlohmann::json graph_json(const ModelGraph& mg) {
    nlohmann::json out;
    out["schema"] = 1;
    out["model"] = model_json(mg.config);
    out["kind"] = std::string(to_string(mg.kind));
    out["vertex_count"] = mg.graph.vertex_count();
    auto vertices = nlohmann::json::array();
    for (const auto& f : mg.vertices)
        vertices.push_back(element_json(f));
    out["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (int u = 0; u < mg.graph.vertex_count(); ++u)
        for (int v : mg.graph.neighbors(u))
            if (u < v)
                edges.push_back(nlohmann::json::array({u, v}));
    out["edges"] = std::move(edges);
    return out;
}

// Class table of a model graph's quotient: support set, size and class-level
// neighbors per class, in class order.
inline nlohmann::json quotient_json(const ModelGraph& mg, const QuotientGraph& q) {
    nlohmann::json out;
    out["schema"] = 1;
    out["model"] = model_json(mg.config);
    out["kind"] = std::string(to_string(mg.kind));
    auto classes = nlohmann::json::array();
    for (int c = 0; c < q.class_count(); ++c) {
        nlohmann::json cls;
        cls["support"] = mg.vertex(q.classes[c].representative).cozero_set().members();
        cls["size"] = q.classes[c].members.size();
        cls["neighbors"] = q.graph.neighbors(c);
        classes.push_back(std::move(cls));
    }
    out["classes"] = std::move(classes);
    return out;
}

} // namespace ringgraph
