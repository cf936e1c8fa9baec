#include "flagrecon/io.hpp"

namespace flagrecon {

namespace {

constexpr int graph6_offset = 63;
constexpr int graph6_short_limit = 62;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

ParseError::ParseError(const std::string& what, int line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

Graph parse_graph6(std::string_view line)
{
    std::string_view s = trim(line);
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(header)) {
        s.remove_prefix(header.size());
    }
    if (s.empty()) {
        throw ParseError("empty graph6 string");
    }
    for (char c : s) {
        if (c < graph6_offset || c > 126) {
            throw ParseError("invalid graph6 character");
        }
    }
    if (s[0] == 126) {
        throw ParseError("long-form graph6 (more than 62 vertices) is not supported");
    }
    const int n = s[0] - graph6_offset;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (s.size() - 1 != expected) {
        throw ParseError("graph6 length mismatch: expected " + std::to_string(expected + 1) + " characters, got " +
                         std::to_string(s.size()));
    }
    Graph g = Graph::with_order(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = s[1 + bit / 6] - graph6_offset;
            if (chunk & (1 << (5 - bit % 6))) {
                g.add_edge(i, j);
            }
        }
    }
    for (; bit < expected * 6; ++bit) {
        const int chunk = s[1 + bit / 6] - graph6_offset;
        if (chunk & (1 << (5 - bit % 6))) {
            throw ParseError("nonzero graph6 padding bits");
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > graph6_short_limit) {
        throw Error("graph6 output is limited to 62 vertices");
    }
    std::string out(1, static_cast<char>(n + graph6_offset));
    const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    std::string body((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) {
                body[bit / 6] = static_cast<char>(body[bit / 6] | (1 << (5 - bit % 6)));
            }
        }
    }
    for (char& c : body) {
        c = static_cast<char>(c + graph6_offset);
    }
    return out + body;
}

std::vector<Graph> parse_graph6_lines(std::string_view text)
{
    std::vector<Graph> out;
    int line_no = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return out;
}

} // namespace flagrecon
