#ifndef FLAGRECON_SIMPLICIAL_COMPLEX_HPP
#define FLAGRECON_SIMPLICIAL_COMPLEX_HPP

#include "flagrecon/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagrecon {

/// Strictly increasing list of vertex indices.
using Simplex = std::vector<Vertex>;

/// Thrown when a clique complex would exceed the configured dimension cap.
class DimensionCapExceeded : public Error {
public:
    DimensionCapExceeded(int dimension, int cap);
    int dimension() const { return dimension_; }
    int cap() const { return cap_; }

private:
    int dimension_;
    int cap_;
};

/**
 * Finite abstract simplicial complex. Level k holds the k-simplices in
 * lexicographic order; the complex is closed under faces and level 0 lists
 * every vertex. The empty complex has dimension -1.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `generators` over the given vertex labels. Every
    /// label becomes a 0-simplex even if no generator mentions it.
    static SimplicialComplex from_generators(std::vector<std::string> labels,
                                             std::span<const Simplex> generators);

    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_[v]; }

    /// k-simplices; empty span outside 0..dimension().
    std::span<const Simplex> simplices(int k) const;
    std::size_t count(int k) const { return simplices(k).size(); }

    /// Position of `s` within its level, if present.
    std::optional<std::size_t> index_of(std::span<const Vertex> s) const;
    bool contains(std::span<const Vertex> s) const { return index_of(s).has_value(); }

    /// Every simplex, lowest dimension first.
    std::vector<Simplex> all_simplices() const;
    /// Simplices not a proper face of another simplex.
    std::vector<Simplex> maximal_simplices() const;

    Graph one_skeleton() const;

    std::vector<std::string> labels_of(std::span<const Vertex> s) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> levels_;
};

/// Flag complex of g: every clique spans a simplex. Maximal cliques are found
/// by pivoting Bron-Kerbosch and closed downward. `max_dimension` caps the
/// result; exceeding it throws DimensionCapExceeded.
SimplicialComplex clique_complex(const Graph& g, std::optional<int> max_dimension = std::nullopt);

/// Maximal cliques of g, each sorted, in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Simplices of L lying inside `subset`; vertices re-indexed by position in
/// the sorted subset, labels kept.
SimplicialComplex full_subcomplex(const SimplicialComplex& L, std::span<const Vertex> subset);
SimplicialComplex full_subcomplex(const SimplicialComplex& L, std::span<const std::string> labels);

/// Lk(sigma, L): all tau disjoint from sigma with tau u sigma in L. Its vertex
/// set is the vertices those tau use; it may be empty.
SimplicialComplex link(const SimplicialComplex& L, std::span<const Vertex> sigma);

bool is_flag(const SimplicialComplex& L);

std::vector<std::size_t> f_vector(const SimplicialComplex& L);
long long euler_characteristic(const SimplicialComplex& L);

} // namespace flagrecon

#endif // FLAGRECON_SIMPLICIAL_COMPLEX_HPP
