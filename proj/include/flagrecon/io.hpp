#ifndef FLAGRECON_IO_HPP
#define FLAGRECON_IO_HPP

#include "flagrecon/simplicial_complex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flagrecon {

/// Parse failure; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0);
    int line() const { return line_; }

private:
    int line_;
};

/// Short-form graph6 (at most 62 vertices). Vertices are labeled "0".."n-1".
/// An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
/// Throws Error for graphs over 62 vertices.
std::string emit_graph6(const Graph& g);

/// One graph6 string per nonblank line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "u v" per line; a single token declares an isolated vertex. Blank lines
/// and '#' comments are skipped, repeated edges collapse. Vertices are
/// numbered in order of first appearance.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// One maximal simplex (whitespace-separated labels) per line, closed downward.
SimplicialComplex parse_complex(std::string_view text);

enum class GraphFormat { detect, graph6, edges };

GraphFormat parse_format_name(std::string_view name);
/// graph6 when the text is one token of graph6 characters, else edges.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

} // namespace flagrecon

#endif // FLAGRECON_IO_HPP
