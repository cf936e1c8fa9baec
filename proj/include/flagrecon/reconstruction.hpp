#ifndef FLAGRECON_RECONSTRUCTION_HPP
#define FLAGRECON_RECONSTRUCTION_HPP

#include "flagrecon/coxeter.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagrecon {

/// Multiset of vertex-deleted subgraphs up to isomorphism.
struct Deck {
    std::map<CanonicalForm, int> cards;
    /// One entry per vertex of the source graph: deleted label and its card.
    std::vector<std::pair<std::string, CanonicalForm>> matching;

    int size() const;
    /// Decks compare as multisets; the matching is ignored.
    friend bool operator==(const Deck& a, const Deck& b) { return a.cards == b.cards; }
};

Deck deck(const Graph& g);

/// Bijection f (g1 vertex -> g2 vertex) with G1 - s isomorphic to G2 - f(s)
/// for every s, or nullopt. Equal cards are paired in sorted vertex order.
std::optional<VertexSet> are_hypomorphic(const Graph& g1, const Graph& g2);

enum class CertificatePath {
    /// Flag complex is a homology n-manifold, n >= 1.
    homology_manifold,
    /// Right-angled Coxeter group is virtually Poincare duality of dimension n >= 1.
    virtual_poincare_duality,
    none,
};

std::string to_string(CertificatePath path);

struct Certificate {
    CertificatePath path = CertificatePath::none;
    /// n of the applied path; 0 when path is none.
    int dimension = 0;
    /// Manifold test at the complex's own dimension (absent when that dimension is 0).
    std::optional<ManifoldVerdict> manifold;
    PDVerdict duality;
    std::string caveat;
};

/// Fixed caveat attached to every `none` certificate.
extern const char* const no_certificate_caveat;

/// Certificate from the homology-manifold path, else the virtual Poincare
/// duality path, else none. Requires at least 3 vertices.
Certificate certify_reconstructible(const Graph& g, std::optional<int> max_dimension = std::nullopt);

/**
 * Rebuilds a graph from one vertex-deleted card of a graph whose flag complex
 * is a homology n-manifold: the missing vertex is adjacent exactly to the
 * homological boundary of the card's flag complex.
 */
Graph reconstruct_from_card(const Graph& card, int n);

/// One representative per isomorphism class on n vertices, 1 <= n <= 7,
/// ordered by canonical form.
std::vector<Graph> enumerate_graphs(int n);

/// Groups of pairwise non-isomorphic inputs sharing a deck; only groups with
/// at least two members are returned. Inputs must be pairwise non-isomorphic.
std::vector<std::vector<Graph>> hypomorphic_groups(std::span<const Graph> graphs);

} // namespace flagrecon

#endif // FLAGRECON_RECONSTRUCTION_HPP
