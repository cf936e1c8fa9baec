#ifndef FLAGRECON_MANIFOLD_HPP
#define FLAGRECON_MANIFOLD_HPP

#include "flagrecon/homology.hpp"

#include <optional>
#include <vector>

namespace flagrecon {

/// A simplex whose local homology does not have the required shape.
struct LocalWitness {
    Simplex simplex;
    GradedGroups local_homology;
    GradedGroups expected;
};

struct ManifoldVerdict {
    bool is_manifold = false;
    int dimension = 0;
    /// Present exactly when is_manifold is false.
    std::optional<LocalWitness> witness;
    /// verified[k] = number of k-simplices checked; complete on success.
    std::vector<std::size_t> verified;
};

struct SphereVerdict {
    bool is_sphere = false;
    int dimension = -1;
    /// Absent only for the empty complex in dimension -1.
    std::optional<ManifoldVerdict> manifold;
    GradedGroups homology;
};

int detect_dimension(const SimplicialComplex& L);

/// Every maximal simplex has dimension exactly n. Throws on the empty complex.
bool is_pure(const SimplicialComplex& L, int n);

/**
 * Homology n-manifold test: L is pure of dimension n and every simplex sigma
 * has H~_*(Lk(sigma)) equal to H~_*(S^{n - dim sigma - 1}), with the empty
 * link standing for S^{-1}. Connectivity is not required. Throws on the empty
 * complex or negative n.
 */
ManifoldVerdict is_homology_manifold(const SimplicialComplex& L, int n);

/// Homology n-manifold with the reduced homology of S^n. The empty complex
/// is accepted as the (-1)-sphere.
SphereVerdict is_generalized_homology_sphere(const SimplicialComplex& L, int n);

/// Raised by boundary_of when a vertex is neither interior nor boundary.
class NotRelativeManifold : public Error {
public:
    NotRelativeManifold(const std::string& what, LocalWitness witness)
        : Error(what), witness_(std::move(witness)) {}
    const LocalWitness& witness() const { return witness_; }

private:
    LocalWitness witness_;
};

/**
 * Vertices of a pure n-complex whose local homology vanishes, provided every
 * other vertex has local homology Z in degree n. Empty for a closed homology
 * manifold. Throws NotRelativeManifold otherwise.
 */
VertexSet boundary_of(const SimplicialComplex& L, int n);

} // namespace flagrecon

#endif // FLAGRECON_MANIFOLD_HPP
