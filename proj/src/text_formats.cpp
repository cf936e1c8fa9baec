#include "flagrecon/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace flagrecon {

namespace {

std::vector<std::string> tokens_of(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) {
        out.push_back(std::move(tok));
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int line_no = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        fn(text.substr(0, end), ++line_no);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    }
}

class LabelTable {
public:
    Vertex intern(const std::string& label)
    {
        auto [it, inserted] = index_.try_emplace(label, static_cast<Vertex>(labels_.size()));
        if (inserted) {
            labels_.push_back(label);
        }
        return it->second;
    }
    std::vector<std::string> take() { return std::move(labels_); }

private:
    std::map<std::string, Vertex, std::less<>> index_;
    std::vector<std::string> labels_;
};

} // namespace

Graph parse_edge_list(std::string_view text)
{
    LabelTable table;
    std::vector<Edge> edges;
    for_each_line(text, [&](std::string_view line, int line_no) {
        const auto toks = tokens_of(line);
        if (toks.empty()) {
            return;
        }
        if (toks.size() > 2) {
            throw ParseError("expected 'u v', got " + std::to_string(toks.size()) + " tokens", line_no);
        }
        if (toks.size() == 1) {
            table.intern(toks[0]);
            return;
        }
        if (toks[0] == toks[1]) {
            throw ParseError("self-loop at '" + toks[0] + "'", line_no);
        }
        const Vertex u = table.intern(toks[0]);
        const Vertex v = table.intern(toks[1]);
        edges.emplace_back(u, v);
    });
    return Graph(table.take(), edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::string out;
    std::vector<char> touched(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        out += g.label(u) + ' ' + g.label(v) + '\n';
        touched[u] = touched[v] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!touched[v]) {
            out += g.label(v) + '\n';
        }
    }
    return out;
}

SimplicialComplex parse_complex(std::string_view text)
{
    LabelTable table;
    std::vector<Simplex> generators;
    for_each_line(text, [&](std::string_view line, int line_no) {
        const auto toks = tokens_of(line);
        if (toks.empty()) {
            return;
        }
        Simplex s;
        for (const auto& t : toks) {
            s.push_back(table.intern(t));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ParseError("repeated vertex in simplex", line_no);
        }
        generators.push_back(std::move(s));
    });
    return SimplicialComplex::from_generators(table.take(), generators);
}

GraphFormat parse_format_name(std::string_view name)
{
    if (name == "g6" || name == "graph6") {
        return GraphFormat::graph6;
    }
    if (name == "edges") {
        return GraphFormat::edges;
    }
    if (name == "auto") {
        return GraphFormat::detect;
    }
    throw Error("unknown graph format '" + std::string(name) + "'");
}

GraphFormat detect_format(std::string_view text)
{
    std::vector<std::string> all;
    for_each_line(text, [&](std::string_view line, int) {
        for (auto& t : tokens_of(line)) {
            all.push_back(std::move(t));
        }
    });
    if (all.size() == 1 &&
        std::all_of(all[0].begin(), all[0].end(), [](char c) { return c >= 63 && c <= 126; })) {
        return GraphFormat::graph6;
    }
    return GraphFormat::edges;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::detect) {
        format = detect_format(text);
    }
    if (format == GraphFormat::graph6) {
        auto graphs = parse_graph6_lines(text);
        if (graphs.size() != 1) {
            throw ParseError("expected exactly one graph6 line, found " + std::to_string(graphs.size()));
        }
        return std::move(graphs.front());
    }
    return parse_edge_list(text);
}

} // namespace flagrecon
