#ifndef FLAGRECON_GRAPH_HPP
#define FLAGRECON_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagrecon {

/// Raised on violated preconditions (unknown vertices, bad parameters, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense vertex index inside a Graph or SimplicialComplex.
using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite simple graph. Vertices are dense indices 0..order()-1, each carrying
 * an opaque string label that is preserved by every induced-subgraph
 * operation. Adjacency is stored both as a matrix and as sorted neighbor
 * lists.
 */
class Graph {
public:
    Graph() = default;

    /// Graph on the given labels with no edges. Labels must be unique.
    explicit Graph(std::vector<std::string> labels);
    Graph(std::vector<std::string> labels, std::span<const Edge> edges);

    /// Graph on labels "0".."n-1".
    static Graph with_order(int n, std::span<const Edge> edges = {});

    int order() const { return static_cast<int>(labels_.size()); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }
    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    /// Index of a label; throws Error when absent.
    Vertex vertex(std::string_view label) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Adds edge {u, v}; repeated edges are ignored, self-loops rejected.
    void add_edge(Vertex u, Vertex v);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v);
    }
    void check_vertex(Vertex v) const;

    std::vector<std::string> labels_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph on `subset` (in the given order). Labels are kept.
Graph full_subgraph(const Graph& g, std::span<const Vertex> subset);
Graph full_subgraph(const Graph& g, std::span<const std::string> labels);

Graph complement(const Graph& g);

/// Join: disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph vertex_deleted(const Graph& g, Vertex s);
Graph vertex_deleted(const Graph& g, std::string_view label);

/// Same graph with vertices renamed; `labels` must be unique and sized order().
Graph relabeled(const Graph& g, std::vector<std::string> labels);

/// Image of g under the vertex permutation `perm` (vertex v goes to perm[v]).
/// Labels are reset to "0".."n-1".
Graph permuted(const Graph& g, std::span<const Vertex> perm);

/// True iff every vertex of `subset` is pairwise adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> subset);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// ---------------------------------------------------------------------------
// Canonical labeling

/**
 * Canonical certificate of an isomorphism class: the vertex count followed by
 * the upper-triangle adjacency bits under a canonical ordering. Two graphs
 * have equal forms iff they are isomorphic.
 */
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(int order, std::vector<std::uint8_t> bytes)
        : order_(order), bytes_(std::move(bytes)) {}

    int order() const { return order_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    /// The canonical representative, labeled "0".."n-1".
    Graph to_graph() const;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

private:
    int order_ = 0;
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// ordering[k] is the vertex placed at canonical position k.
    VertexSet ordering;
};

/// Individualization-refinement search with automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Form of g under an explicit ordering (ordering[k] at position k).
CanonicalForm form_under_ordering(const Graph& g, std::span<const Vertex> ordering);

// ---------------------------------------------------------------------------
// Named families

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> parts);
/// Complete multipartite graph with k parts of size 2 (boundary of the k-dimensional cross-polytope).
Graph cross_polytope(int k);
/// p x q grid on the torus with the (+1,+1) diagonals; p, q >= 4.
Graph torus_grid(int p, int q);
Graph icosahedron();

/// Dispatch by family name ("cycle", "path", "complete", "empty",
/// "complete_multipartite", "cross_polytope", "torus_grid", "icosahedron").
Graph generate(std::string_view family, std::span<const int> params);

} // namespace flagrecon

#endif // FLAGRECON_GRAPH_HPP
