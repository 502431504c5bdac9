// twistcode: generate graphs, build graph codes, and check their homological
// realization from the command line.
//
// Exit codes: 0 success (or verdict true), 1 verdict false, 2 parse error,
// 3 validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistcode/twistcode.hpp"

namespace {

using twistcode::ParseError;
using Json = nlohmann::ordered_json;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t max_bruteforce_dim = 26;
    unsigned threads = 1;
    std::string format = "json";
    std::string output;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

twistcode::Graph load_graph(const std::string& path) {
    auto in = open_input(path);
    try {
        return twistcode::read_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

twistcode::GraphCodeInstance load_instance(const std::string& graph_path, const std::string& assignment_path,
                                           const std::string& local_code, std::uint64_t seed) {
    auto g = load_graph(graph_path);
    if (!assignment_path.empty() && !local_code.empty()) {
        throw twistcode::ValidationError("give either an assignment file or --local-code, not both");
    }
    if (!assignment_path.empty()) {
        auto in = open_input(assignment_path);
        auto assignment = [&] {
            try {
                return twistcode::read_assignment(in, g);
            } catch (const ParseError& e) {
                throw ParseError(e.line(), assignment_path + ": " + e.what());
            }
        }();
        return twistcode::build_graph_code(std::move(g), std::move(assignment));
    }
    if (local_code.empty()) throw twistcode::ValidationError("need an assignment file or --local-code");
    auto assignment = twistcode::synthesize_assignment(g, local_code, seed);
    return twistcode::build_graph_code(std::move(g), std::move(assignment));
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output);
    if (!out) throw twistcode::ValidationError("cannot write '" + config.output + "'");
    out << text;
}

void emit_json(const RunConfig& config, const Json& value) {
    if (config.format == "text") {
        emit(config, twistcode::report_text(value));
    } else {
        emit(config, value.dump(2) + "\n");
    }
}

twistcode::Graph generate_graph(const std::string& kind, const std::vector<std::size_t>& params, std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw twistcode::ValidationError("gen-graph " + kind + " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    namespace graphs = twistcode::graphs;
    if (kind == "petersen") {
        need(0);
        return graphs::petersen();
    }
    if (kind == "random-regular" || kind == "random") {
        need(2);
        return kind == "random" ? graphs::random_graph(params[0], params[1], seed)
                                : graphs::random_regular(params[0], params[1], seed);
    }
    if (kind == "complete" || kind == "cycle" || kind == "path" || kind == "star" || kind == "hypercube") {
        need(1);
        if (kind == "complete") return graphs::complete(params[0]);
        if (kind == "cycle") return graphs::cycle(params[0]);
        if (kind == "path") return graphs::path(params[0]);
        if (kind == "star") return graphs::star(params[0]);
        return graphs::hypercube(params[0]);
    }
    throw twistcode::ValidationError("unknown graph kind '" + kind +
                                     "' (complete, cycle, path, star, petersen, hypercube, random-regular, random)");
}

Json spectrum_json(const twistcode::Graph& g) {
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    const auto degree = twistcode::regular_degree(g);
    out["degree"] = degree ? Json(*degree) : Json();
    if (g.vertex_count() >= 2) {
        const auto s = twistcode::spectral_summary(g);
        out["lambda1"] = s.largest;
        out["lambda2"] = s.second;
        out["lambda_min"] = s.smallest;
        out["lambda_abs"] = s.second_absolute;
    } else {
        out["lambda1"] = out["lambda2"] = out["lambda_min"] = out["lambda_abs"] = Json();
    }
    const auto girth = twistcode::girth(g);
    out["girth"] = girth ? Json(*girth) : Json();
    out["components"] = twistcode::component_count(g);
    out["cycle_space_dimension"] = twistcode::cycle_space_dimension(g);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph codes realized as twisted first homology"};
    app.require_subcommand(1);

    RunConfig config;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "Seed for every random choice in the run")->capture_default_str();
        cmd->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        cmd->add_option("-o,--output", config.output, "Write output to a file instead of stdout");
    };

    std::string kind;
    std::vector<std::size_t> params;
    auto* gen = app.add_subcommand("gen-graph", "Emit a graph in the canonical text format");
    gen->add_option("kind", kind, "complete|cycle|path|star|petersen|hypercube|random-regular|random")->required();
    gen->add_option("params", params, "Size parameters (e.g. n, or n d for random-regular)");
    add_common(gen);

    std::string graph_path;
    auto* spectrum = app.add_subcommand("spectrum", "Top eigenvalues, girth and cycle-space dimension of a graph");
    spectrum->add_option("graph", graph_path, "Graph file")->required();
    add_common(spectrum);

    std::string assignment_path;
    std::string local_code;
    auto add_instance = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "Graph file")->required();
        cmd->add_option("assignment", assignment_path, "Local-code assignment file");
        cmd->add_option("--local-code", local_code, "Synthesize local codes: parity|hamming74|repetition|full|zero|random:<k>");
        add_common(cmd);
    };
    auto* report = app.add_subcommand("report", "Full parameter report for a graph code");
    add_instance(report);
    report->add_option("--max-bruteforce-dim", config.max_bruteforce_dim, "Largest code dimension to brute-force")
        ->capture_default_str();
    report->add_option("--threads", config.threads, "Worker threads for the distance search")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check that the graph code equals H_1 of its twisted local system");
    add_instance(verify);

    std::string complex_path;
    std::string system_path;
    std::size_t degree_k = 1;
    auto* homology = app.add_subcommand("homology", "Homology of a simplicial complex with local coefficients");
    homology->add_option("complex", complex_path, "Complex file")->required();
    homology->add_option("--system", system_path, "Local system file (default: constant F2)");
    homology->add_option("-k", degree_k, "Homology degree")->capture_default_str();
    add_common(homology);

    std::string code_path;
    auto* distance = app.add_subcommand("distance", "Brute-force minimum distance of a code file");
    distance->add_option("code", code_path, "Code file")->required();
    distance->add_option("--max-bruteforce-dim", config.max_bruteforce_dim, "Largest code dimension to brute-force")
        ->capture_default_str();
    distance->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
    add_common(distance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (gen->parsed()) {
            std::ostringstream out;
            twistcode::write_graph(out, generate_graph(kind, params, config.seed));
            emit(config, out.str());
        } else if (spectrum->parsed()) {
            emit_json(config, spectrum_json(load_graph(graph_path)));
        } else if (report->parsed()) {
            const auto instance = load_instance(graph_path, assignment_path, local_code, config.seed);
            const auto result = twistcode::make_report(instance, {config.max_bruteforce_dim, config.threads});
            emit_json(config, result);
            return result["proposition"]["holds"].get<bool>() ? 0 : kExitVerdictFalse;
        } else if (verify->parsed()) {
            const auto instance = load_instance(graph_path, assignment_path, local_code, config.seed);
            const auto verdict = twistcode::verify_proposition(instance);
            Json out;
            out["code_dimension"] = verdict.code_dimension;
            out["homology_dimension"] = verdict.homology_dimension;
            out["holds"] = verdict.holds;
            if (!verdict.holds) out["detail"] = verdict.detail;
            emit_json(config, out);
            return verdict.holds ? 0 : kExitVerdictFalse;
        } else if (homology->parsed()) {
            auto in = open_input(complex_path);
            const auto complex = twistcode::read_complex(in);
            twistcode::LocalSystem system = twistcode::constant_local_system(complex);
            if (!system_path.empty()) {
                auto sys_in = open_input(system_path);
                system = twistcode::read_local_system(sys_in, complex);
            }
            const auto check = twistcode::validate_local_system(complex, system);
            if (!check) throw twistcode::ValidationError("invalid local system: " + check.detail);
            const auto h = twistcode::homology(complex, system, degree_k);
            Json out;
            out["k"] = degree_k;
            out["chain_dimension"] = system.chain_dimension(degree_k);
            out["dimension"] = h.dimension;
            Json reps = Json::array();
            for (const auto& z : h.representatives) reps.push_back(z.to_string());
            out["representatives"] = std::move(reps);
            emit_json(config, out);
        } else if (distance->parsed()) {
            auto in = open_input(code_path);
            const auto code = twistcode::read_code(in);
            Json out;
            out["length"] = code.length();
            out["dimension"] = code.dimension();
            const auto d = twistcode::min_distance(code, {config.max_bruteforce_dim, config.threads});
            out["distance"] = d;
            out["relative_distance"] = twistcode::to_string(
                twistcode::Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(code.length())));
            emit_json(config, out);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
