// Command-line front end: analyze | deck | reconstruct | scan | gen

#include "flagrecon/io.hpp"
#include "flagrecon/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace flagrecon;

constexpr int exit_ok = 0;
constexpr int exit_no_certificate = 1;
constexpr int exit_error = 2;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
}

std::string format_label(GraphFormat f)
{
    switch (f) {
    case GraphFormat::graph6:
        return "g6";
    case GraphFormat::edges:
        return "edges";
    case GraphFormat::detect:
        break;
    }
    return "auto";
}

struct GraphInput {
    std::string path;
    std::string format = "auto";

    std::pair<Graph, GraphFormat> load() const
    {
        const std::string text = read_input(path);
        GraphFormat f = parse_format_name(format);
        if (f == GraphFormat::detect) {
            f = detect_format(text);
        }
        return {parse_graph(text, f), f};
    }
};

void add_input(CLI::App* cmd, GraphInput& in, const std::string& what)
{
    cmd->add_option("input", in.path, what + " ('-' or omitted for standard input)");
    cmd->add_option("--format", in.format, "input format: g6, edges or auto")
        ->check(CLI::IsMember({"g6", "graph6", "edges", "auto"}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reconstructibility certificates for graphs whose flag complexes are homology manifolds"};
    app.require_subcommand(1);

    GraphInput analyze_in;
    std::string json_out;
    std::optional<int> max_dim;
    bool timing = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "full report and reconstructibility certificate");
    add_input(analyze_cmd, analyze_in, "graph file");
    analyze_cmd->add_option("--json", json_out, "write the JSON report to this file");
    analyze_cmd->add_option("--max-dim", max_dim, "cap on the flag complex dimension")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_flag("--timing", timing, "include per-stage timings in the report");

    GraphInput deck_in;
    auto* deck_cmd = app.add_subcommand("deck", "card multiset as graph6 lines with multiplicities");
    add_input(deck_cmd, deck_in, "graph file");

    GraphInput card_in;
    int card_dim = 0;
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "recover a graph from one vertex-deleted card");
    add_input(reconstruct_cmd, card_in, "card file");
    reconstruct_cmd->add_option("--dim", card_dim, "homology manifold dimension n >= 1")->required();

    std::string corpus;
    int scan_n = 7;
    bool scan_json = false;
    auto* scan_cmd = app.add_subcommand("scan", "search for hypomorphic non-isomorphic graphs");
    scan_cmd->add_option("corpus", corpus, "graph6 corpus, one graph per line");
    scan_cmd->add_option("--max-n", scan_n, "order enumerated internally when no corpus is given")
        ->check(CLI::Range(1, 7));
    scan_cmd->add_flag("--json", scan_json, "print the scan report as JSON");

    std::string family;
    std::vector<int> params;
    std::string gen_format = "g6";
    auto* gen_cmd = app.add_subcommand("gen", "emit a named graph");
    gen_cmd->add_option("family", family,
                        "cycle | path | complete | empty | complete_multipartite | cross_polytope | torus_grid | icosahedron")
        ->required();
    gen_cmd->add_option("params", params, "family parameters");
    gen_cmd->add_option("--format", gen_format, "output format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*analyze_cmd) {
            auto [g, f] = analyze_in.load();
            AnalysisOptions options;
            options.format_name = format_label(f);
            options.max_dimension = max_dim;
            options.timing = timing;
            const Analysis a = analyze(g, options);
            const std::string text = a.report.dump(2) + "\n";
            if (json_out.empty()) {
                std::cout << text;
            } else {
                write_output(json_out, text);
                std::cout << "certificate: " << to_string(a.path) << "\n";
            }
            return a.path == CertificatePath::none ? exit_no_certificate : exit_ok;
        }
        if (*deck_cmd) {
            const Graph g = deck_in.load().first;
            for (const auto& [form, count] : deck(g).cards) {
                std::cout << emit_graph6(form.to_graph()) << ' ' << count << '\n';
            }
            return exit_ok;
        }
        if (*reconstruct_cmd) {
            const Graph card = card_in.load().first;
            std::cout << emit_graph6(reconstruct_from_card(card, card_dim)) << '\n';
            return exit_ok;
        }
        if (*scan_cmd) {
            std::vector<Graph> graphs;
            std::string source;
            if (corpus.empty()) {
                graphs = enumerate_graphs(scan_n);
                source = "enumeration n=" + std::to_string(scan_n);
            } else {
                std::map<CanonicalForm, Graph> classes;
                for (auto& g : parse_graph6_lines(read_input(corpus))) {
                    classes.try_emplace(canonical_form(g), std::move(g));
                }
                for (auto& [_, g] : classes) {
                    graphs.push_back(std::move(g));
                }
                source = "corpus " + corpus;
            }
            ScanResult scan{graphs.size(), hypomorphic_groups(graphs)};
            if (scan_json) {
                std::cout << to_json(scan, source).dump(2) << '\n';
            } else {
                std::cout << "classes scanned: " << scan.classes << '\n';
                std::cout << "hypomorphic groups: " << scan.groups.size() << '\n';
                for (const auto& group : scan.groups) {
                    for (std::size_t i = 0; i < group.size(); ++i) {
                        std::cout << (i ? " " : "") << emit_graph6(group[i]);
                    }
                    std::cout << '\n';
                }
            }
            return exit_ok;
        }
        if (*gen_cmd) {
            const Graph g = generate(family, params);
            std::cout << (gen_format == "edges" ? emit_edge_list(g) : emit_graph6(g) + "\n");
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
