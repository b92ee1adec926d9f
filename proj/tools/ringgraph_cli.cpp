// Command-line front end: build the two graphs of a finite model, run the
// rule-vs-oracle verification suites, compare the graphs for isomorphism, and
// evaluate the symbolic CH verdicts.
//
// Exit codes: 0 success, 2 usage/spec error, 3 resource cap exceeded,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringgraph/cardinal.hpp"
#include "ringgraph/iso_check.hpp"
#include "ringgraph/json_io.hpp"
#include "ringgraph/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ringgraph::InputError("cannot open '" + path + "' for writing");
    out << contents;
    if (!out)
        throw ringgraph::InputError("failed writing '" + path + "'");
}

ringgraph::GraphKind parse_kind(const std::string& kind) {
    if (kind == "zero-divisor")
        return ringgraph::GraphKind::ZeroDivisor;
    if (kind == "comaximal")
        return ringgraph::GraphKind::Comaximal;
    throw ringgraph::InputError("unknown graph kind '" + kind + "' (zero-divisor or comaximal)");
}

int cmd_build(const std::string& spec, const std::string& kind_name, const std::string& dot_path,
              const std::string& json_path) {
    auto cfg = ringgraph::parse_model_spec(spec);
    auto kind = parse_kind(kind_name);
    auto mg = ringgraph::build_graph(cfg, kind);
    if (cfg.space.size() == 1)
        std::cerr << "warning: one-point space, the graph is empty\n";
    if (!dot_path.empty())
        write_file(dot_path, ringgraph::to_dot(mg.graph));
    if (!json_path.empty())
        write_file(json_path, ringgraph::graph_json(mg).dump(2) + "\n");
    std::cout << ringgraph::to_spec_string(cfg) << " " << ringgraph::to_string(kind) << ": "
              << mg.graph.vertex_count() << " vertices, " << mg.graph.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_verify(const std::string& spec, const std::string& suite_name, const std::string& json_path) {
    auto cfg = ringgraph::parse_model_spec(spec);
    auto suite = ringgraph::parse_suite(suite_name);
    if (!suite)
        throw ringgraph::InputError("unknown suite '" + suite_name + "'");
    auto report = ringgraph::run_suite(cfg, *suite);
    std::cout << ringgraph::report_text(report);
    if (!json_path.empty())
        write_file(json_path, ringgraph::report_json(report).dump(2) + "\n");
    return report.ok() ? kExitOk : kExitVerification;
}

int cmd_iso(const std::string& spec, const std::string& json_path) {
    auto cfg = ringgraph::parse_model_spec(spec);
    auto verdict = ringgraph::model_isomorphism_verdict(cfg);

    nlohmann::json out;
    out["schema"] = 1;
    out["model"] = ringgraph::model_json(cfg);
    out["verdict"] = verdict.isomorphic ? "isomorphic" : "non-isomorphic";
    out["method"] = verdict.method;

    std::cout << ringgraph::to_spec_string(cfg) << ": the two graphs are "
              << (verdict.isomorphic ? "isomorphic" : "non-isomorphic") << " (" << verdict.method
              << ")\n";
    if (verdict.isomorphic) {
        auto mapping = nlohmann::json::array();
        std::cout << "mapping (zero-divisor vertex -> comaximal vertex):\n";
        auto zd = ringgraph::build_graph(cfg, ringgraph::GraphKind::ZeroDivisor);
        auto comax = ringgraph::build_graph(cfg, ringgraph::GraphKind::Comaximal);
        for (int u = 0; u < zd.graph.vertex_count(); ++u) {
            int v = (*verdict.mapping)[u];
            std::cout << "  " << zd.vertex(u).to_string() << " -> " << comax.vertex(v).to_string()
                      << "\n";
            mapping.push_back(v);
        }
        out["mapping"] = std::move(mapping);
    } else {
        if (!verdict.mismatched_classes.empty())
            std::cout << "lift obstruction: " << verdict.mismatched_classes.size()
                      << " quotient classes with unequal sizes\n";
        std::cout << "degree multisets: zero-divisor "
                  << ringgraph::degree_multiset_text(verdict.zero_divisor_degrees) << " vs comaximal "
                  << ringgraph::degree_multiset_text(verdict.comaximal_degrees) << "\n";
        nlohmann::json obstruction;
        obstruction["mismatched_classes"] = verdict.mismatched_classes;
        nlohmann::json zd_deg = nlohmann::json::object(), cm_deg = nlohmann::json::object();
        for (auto [d, n] : verdict.zero_divisor_degrees)
            zd_deg[std::to_string(d)] = n;
        for (auto [d, n] : verdict.comaximal_degrees)
            cm_deg[std::to_string(d)] = n;
        obstruction["zero_divisor_degrees"] = std::move(zd_deg);
        obstruction["comaximal_degrees"] = std::move(cm_deg);
        out["obstruction"] = std::move(obstruction);
    }
    if (!json_path.empty())
        write_file(json_path, out.dump(2) + "\n");
    return kExitOk;
}

ringgraph::Cardinal parse_cardinal_spec(const std::string& spec) {
    using ringgraph::Cardinal;
    if (spec == "aleph0")
        return Cardinal::aleph0();
    if (spec == "continuum")
        return Cardinal::continuum();
    if (spec.rfind("finite:", 0) == 0) {
        const std::string digits = spec.substr(7);
        if (digits.empty())
            throw ringgraph::InputError("finite cardinal needs a count, e.g. finite:3");
        long long n = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw ringgraph::InputError("bad finite cardinal '" + spec + "'");
            n = n * 10 + (c - '0');
            if (n > 1000000)
                throw ringgraph::InputError("finite cardinal too large");
        }
        return Cardinal::finite(n);
    }
    throw ringgraph::InputError("unknown cardinality '" + spec + "' (finite:<n>, aleph0, continuum)");
}

int cmd_cardinal(const std::string& x_spec, const std::string& json_path) {
    using ringgraph::Cardinal;
    Cardinal x = parse_cardinal_spec(x_spec);
    auto certificate = ringgraph::noniso_certificate(x);

    nlohmann::json out;
    out["schema"] = 1;
    out["x"] = x.to_string();
    out["assumes_ch"] = true;

    if (certificate) {
        std::cout << "(CH) |X| = " << x.to_string()
                  << ": the zero-divisor and comaximal graphs of C(X) are non-isomorphic\n"
                  << "certificate: a vertex with singleton zero set has neighbor class of size "
                  << certificate->zero_divisor_class_size.to_string()
                  << "; any image class has size at least "
                  << certificate->comaximal_class_lower_bound.to_string() << "\n";
        out["verdict"] = "non-isomorphic";
        out["certificate"] = {{"zero_divisor_class", certificate->zero_divisor_class_size.to_string()},
                              {"comaximal_lower_bound",
                               certificate->comaximal_class_lower_bound.to_string()}};
    } else {
        std::cout << "(CH) |X| = " << x.to_string()
                  << ": the zero-divisor and comaximal graphs of C(X) are isomorphic\n";
        if (x.is_finite())
            std::cout << "note: finite-alphabet desk models are decided by the iso command instead\n";
        out["verdict"] = "isomorphic";
    }
    if (!json_path.empty())
        write_file(json_path, out.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor and comaximal graphs of finite function-ring models"};
    app.require_subcommand(1);

    std::string spec, kind, dot_path, json_path, suite = "all", x_spec;

    auto* build = app.add_subcommand("build", "build a graph and export DOT/JSON");
    build->add_option("model-spec", spec, "model spec X=<n>,a=<k>[,mode=<support|field>]")->required();
    build->add_option("kind", kind, "zero-divisor or comaximal")->required();
    build->add_option("--dot", dot_path, "write DOT to this file");
    build->add_option("--json", json_path, "write JSON to this file");

    auto* verify = app.add_subcommand("verify", "run rule-vs-oracle suites");
    verify->add_option("model-spec", spec, "model spec")->required();
    verify->add_option("--suite", suite, "metrics|cycles|ideals|quotient|all");
    verify->add_option("--json", json_path, "write the report as JSON");

    auto* iso = app.add_subcommand("iso", "compare the two graphs of a model");
    iso->add_option("model-spec", spec, "model spec")->required();
    iso->add_option("--json", json_path, "write the verdict as JSON");

    auto* cardinal = app.add_subcommand("cardinal", "symbolic CH verdict for discrete spaces");
    cardinal->add_option("--x", x_spec, "finite:<n>|aleph0|continuum")->required();
    cardinal->add_option("--json", json_path, "write the verdict as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(spec, kind, dot_path, json_path);
        if (verify->parsed())
            return cmd_verify(spec, suite, json_path);
        if (iso->parsed())
            return cmd_iso(spec, json_path);
        if (cardinal->parsed())
            return cmd_cardinal(x_spec, json_path);
    } catch (const ringgraph::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
