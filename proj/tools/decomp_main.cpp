#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decomp/axioms.hpp"
#include "decomp/chordal.hpp"
#include "decomp/dataset.hpp"
#include "decomp/graph.hpp"
#include "decomp/graph_io.hpp"
#include "decomp/learn.hpp"
#include "decomp/model.hpp"
#include "decomp/sample.hpp"
#include "decomp/serialize.hpp"
#include "decomp/verify.hpp"

namespace {

using namespace decomp;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string edge_list_text(const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream s;
    for (std::size_t i = 0; i < edges.size(); ++i)
        s << (i ? " " : "") << edges[i].first << "-" << edges[i].second;
    return s.str();
}

int run_chordal(const std::string& file, const std::string& out, bool pretty) {
    UndirectedGraph g = read_graph_text(read_file(file));
    auto peo = find_peo(g);
    std::ostringstream text;
    std::optional<std::vector<int>> cycle;
    if (!peo && g.vertex_count() <= kMaxWitnessVertices) cycle = chordless_cycle_witness(g);
    if (pretty) {
        text << "chordal: " << (peo ? "yes" : "no") << "\n";
        if (peo) {
            text << "peo:";
            for (int v : peo->order) text << " " << v;
            text << "\n";
        } else if (cycle) {
            text << "chordless cycle:";
            for (int v : *cycle) text << " " << v;
            text << "\n";
        }
    } else {
        json j{{"n", g.vertex_count()}, {"chordal", static_cast<bool>(peo)}};
        if (peo) j["peo"] = peo->order;
        if (cycle) j["witness_cycle"] = *cycle;
        text << j.dump() << "\n";
    }
    write_output(out, text.str());
    return peo ? 0 : 1;
}

int run_axioms(const std::string& file, const std::string& axiom, bool as_model,
               const std::string& out, bool pretty) {
    std::string content = read_file(file);
    std::size_t first = content.find_first_not_of(" \t\r\n");
    bool looks_json = first != std::string::npos && content[first] == '{';
    std::unique_ptr<DependencyModel> src;
    if (as_model || looks_json)
        src = std::make_unique<ExplicitModel>(model_from_json(json::parse(content)));
    else
        src = std::make_unique<GraphModel>(read_graph_text(content));
    MaterializedModel mat(*src);

    std::vector<AxiomReport> reports;
    if (axiom == "all")
        reports = check_all(mat);
    else
        reports.push_back(check_axiom(mat, axiom));

    bool all_hold = true;
    for (const auto& r : reports) all_hold = all_hold && r.holds;

    std::ostringstream text;
    if (pretty) {
        text << std::left << std::setw(22) << "axiom" << std::setw(9) << "verdict"
             << "violations\n";
        for (const auto& r : reports)
            text << std::left << std::setw(22) << r.axiom << std::setw(9)
                 << (r.holds ? "holds" : "fails") << r.violation_count << "\n";
    } else if (reports.size() == 1) {
        text << to_json(reports[0]).dump() << "\n";
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        text << arr.dump() << "\n";
    }
    write_output(out, text.str());
    return all_hold ? 0 : 1;
}

void render_summary(std::ostream& text, const VerificationSummary& s, bool pretty) {
    if (!pretty) {
        text << to_json(s).dump() << "\n";
        return;
    }
    text << "op: " << s.op << "\nn: " << s.n << "\ngraphs checked: " << s.graphs_checked
         << "\nchordal: " << s.chordal_count << "\ndiscrepancies: " << s.discrepancy_count
         << "\nelapsed: " << std::fixed << std::setprecision(3) << s.elapsed_seconds << "s\n";
    for (const auto& d : s.discrepancies) {
        UndirectedGraph g = UndirectedGraph::from_edge_mask(s.n, d.edge_mask);
        text << "  mismatch " << d.property << " on edges " << edge_list_text(g.edges()) << "\n";
    }
    for (const auto& [name, g] : s.witnesses)
        text << "  witness " << name << ": " << edge_list_text(g.edges()) << "\n";
}

int run_verify(int theorem, bool equivalences, bool perfect_maps, bool c7_witness, int n,
               int workers, const std::string& out, bool pretty) {
    int selectors = (theorem != 0) + equivalences + perfect_maps + c7_witness;
    if (selectors != 1)
        throw std::runtime_error(
            "choose exactly one of --theorem, --equivalences, --perfect-maps, --c7-witness");
    if (theorem != 0 && (theorem < 1 || theorem > 3))
        throw std::runtime_error("--theorem must be 1, 2 or 3");
    std::ostringstream text;
    if (c7_witness) {
        auto witness = find_c7_witness(n, workers);
        if (pretty) {
            if (witness)
                text << "witness: " << edge_list_text(witness->edges()) << "\n";
            else
                text << "witness: none at n=" << n << "\n";
        } else {
            json j{{"found", static_cast<bool>(witness)}, {"n", n}};
            if (witness) j["graph"] = to_json(*witness);
            text << j.dump() << "\n";
        }
        write_output(out, text.str());
        return witness ? 0 : 1;
    }
    VerificationSummary s;
    if (theorem == 1)
        s = verify_theorem1(n, workers);
    else if (theorem == 2)
        s = verify_theorem2(n, workers);
    else if (theorem == 3)
        s = verify_theorem3(n, workers);
    else if (equivalences)
        s = verify_equivalences(n, workers);
    else
        s = verify_perfect_maps(n, workers);
    render_summary(text, s, pretty);
    write_output(out, text.str());
    return s.discrepancy_count == 0 ? 0 : 1;
}

int run_learn(const std::string& csv, const std::string& oracle, double alpha, int max_cond,
              bool no_c8, bool no_c6, bool do_chordalize, const std::string& out, bool pretty) {
    if (csv.empty() == oracle.empty())
        throw std::runtime_error("provide either a dataset or --oracle, not both");
    LearnConfig config;
    config.max_cond_size = max_cond;
    config.c8_prune = !no_c8;
    config.c6_rule = !no_c6;
    config.chordalize = do_chordalize;

    std::optional<Dataset> data;
    std::unique_ptr<CiSource> source;
    if (!oracle.empty()) {
        source = std::make_unique<OracleCi>(read_graph_text(read_file(oracle)));
    } else {
        std::ifstream in(csv);
        if (!in) throw std::runtime_error("cannot open " + csv);
        data.emplace(read_dataset_csv(in));
        source = std::make_unique<DataCi>(*data, alpha);
    }
    LearnResult res = learn_skeleton(*source, config);

    std::ostringstream text;
    if (pretty) {
        text << "skeleton: " << edge_list_text(res.skeleton.edges()) << "\n";
        for (const auto& [pair, w] : res.sepsets)
            text << "sepset " << pair.first << "-" << pair.second << ": " << w.to_string() << "\n";
        text << "fixed: " << edge_list_text(res.fixed_edges) << "\n";
        text << "fill: " << edge_list_text(res.fill_edges) << "\n";
        text << "ci queries: " << res.ci_queries << "\n";
    } else {
        text << to_json(res).dump() << "\n";
    }
    write_output(out, text.str());
    return 0;
}

int run_sample(const std::string& file, int rows, std::uint64_t seed, int arity,
               std::vector<int> arities, const std::string& out) {
    UndirectedGraph g = read_graph_text(read_file(file));
    if (arities.empty()) arities.assign(static_cast<std::size_t>(g.vertex_count()), arity);
    Dataset d = sample_dataset(g, arities, rows, seed);
    std::ostringstream text;
    write_dataset_csv(text, d);
    write_output(out, text.str());
    return 0;
}

int run_export_dot(const std::string& file, const std::string& out) {
    UndirectedGraph g = read_graph_text(read_file(file));
    write_output(out, graph_to_dot(g));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposable dependency models: chordality, axioms, verification, learning"};
    app.require_subcommand(1);

    std::string in_file, out_path, axiom = "all", oracle, csv;
    bool pretty = false, as_model = false;
    bool equivalences = false, perfect_maps = false, c7_witness = false;
    bool no_c8 = false, no_c6 = false, do_chordalize = false;
    int n = 4, workers = 1, theorem = 0, rows = 0, max_cond = -1, arity = 2;
    std::vector<int> arities;
    double alpha = 0.05;
    std::uint64_t seed = 0;

    auto* chordal_cmd = app.add_subcommand("chordal", "chordality verdict with PEO or witness");
    chordal_cmd->add_option("graph", in_file, "graph file")->required();
    chordal_cmd->add_option("--out", out_path, "write report here instead of stdout");
    chordal_cmd->add_flag("--pretty", pretty, "human-readable output");

    auto* axioms_cmd = app.add_subcommand("axioms", "run axiom checkers on a graph or model");
    axioms_cmd->add_option("input", in_file, "graph file or model JSON")->required();
    axioms_cmd->add_option("--axiom", axiom, "axiom name or 'all'");
    axioms_cmd->add_flag("--model", as_model, "treat input as a model JSON file");
    axioms_cmd->add_option("--out", out_path, "write report here instead of stdout");
    axioms_cmd->add_flag("--pretty", pretty, "human-readable output");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive desk-scale verification");
    verify_cmd->add_option("--theorem", theorem, "1, 2 or 3");
    verify_cmd->add_flag("--equivalences", equivalences, "four single-axiom verdicts agree");
    verify_cmd->add_flag("--perfect-maps", perfect_maps, "separation equals d-separation");
    verify_cmd->add_flag("--c7-witness", c7_witness, "find a non-chordal chordality-axiom model");
    verify_cmd->add_option("--n", n, "vertex count")->required();
    verify_cmd->add_option("--workers", workers, "parallel workers (default 1)");
    verify_cmd->add_option("--out", out_path, "write report here instead of stdout");
    verify_cmd->add_flag("--pretty", pretty, "human-readable output");

    auto* learn_cmd = app.add_subcommand("learn", "constraint-based skeleton learning");
    learn_cmd->add_option("data", csv, "dataset CSV");
    learn_cmd->add_option("--oracle", oracle, "graph file; use its separation oracle instead of data");
    learn_cmd->add_option("--alpha", alpha, "significance level (default 0.05)");
    learn_cmd->add_option("--max-cond", max_cond, "largest conditioning set (default unbounded)");
    learn_cmd->add_flag("--no-c8-prune", no_c8, "disable completeness pruning of candidate sets");
    learn_cmd->add_flag("--no-c6-rule", no_c6, "disable edge fixing from cached answers");
    learn_cmd->add_flag("--chordalize", do_chordalize, "fill in the skeleton if non-chordal");
    learn_cmd->add_option("--out", out_path, "write result here instead of stdout");
    learn_cmd->add_flag("--pretty", pretty, "human-readable output");

    auto* sample_cmd = app.add_subcommand("sample", "draw rows from a random model on a chordal graph");
    sample_cmd->add_option("graph", in_file, "chordal graph file")->required();
    sample_cmd->add_option("--rows", rows, "row count")->required();
    sample_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    sample_cmd->add_option("--arity", arity, "arity for every variable (default 2)");
    sample_cmd->add_option("--arities", arities, "per-variable arities")->delimiter(',');
    sample_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* dot_cmd = app.add_subcommand("export-dot", "graph file to Graphviz DOT");
    dot_cmd->add_option("graph", in_file, "graph file")->required();
    dot_cmd->add_option("--out", out_path, "write DOT here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chordal_cmd->parsed()) return run_chordal(in_file, out_path, pretty);
        if (axioms_cmd->parsed()) return run_axioms(in_file, axiom, as_model, out_path, pretty);
        if (verify_cmd->parsed())
            return run_verify(theorem, equivalences, perfect_maps, c7_witness, n, workers,
                              out_path, pretty);
        if (learn_cmd->parsed())
            return run_learn(csv, oracle, alpha, max_cond, no_c8, no_c6, do_chordalize, out_path,
                             pretty);
        if (sample_cmd->parsed()) return run_sample(in_file, rows, seed, arity, arities, out_path);
        if (dot_cmd->parsed()) return run_export_dot(in_file, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
