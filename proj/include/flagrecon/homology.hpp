#ifndef FLAGRECON_HOMOLOGY_HPP
#define FLAGRECON_HOMOLOGY_HPP

#include "flagrecon/integer_matrix.hpp"
#include "flagrecon/simplicial_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace flagrecon {

/// Finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianGroup {
    long long rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    static AbelianGroup free(long long rank) { return {rank, {}}; }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// "0", "Z", "Z^2 + Z/2", ...
std::string to_string(const AbelianGroup& g);

/**
 * Groups indexed by degree. Degrees never set are trivial, and equality
 * ignores trivial entries.
 */
class GradedGroups {
public:
    void set(int degree, AbelianGroup group);
    /// Trivial group for degrees never set.
    const AbelianGroup& operator[](int degree) const;

    /// Stored degrees, ascending (including trivial entries).
    std::vector<int> degrees() const;
    std::vector<int> nontrivial_degrees() const;
    bool is_trivial() const { return nontrivial_degrees().empty(); }

    GradedGroups shifted(int by) const;

    friend bool operator==(const GradedGroups& a, const GradedGroups& b);

private:
    std::map<int, AbelianGroup> groups_;
};

std::string to_string(const GradedGroups& g);

/// Reduced homology of the n-sphere: Z in degree n. n = -1 is the empty complex.
GradedGroups sphere_homology(int n);

enum class Augmentation { none, reduced };

/**
 * Simplicial boundary map from k-chains to (k-1)-chains over the ordered
 * simplex bases of L, with face i of [v0..vk] carrying sign (-1)^i. With
 * Augmentation::reduced, the k = 0 map is the 1 x f0 augmentation row.
 */
template <typename Scalar = Integer>
DenseMatrix<Scalar> boundary_matrix(const SimplicialComplex& L, int k,
                                    Augmentation augmentation = Augmentation::reduced)
{
    const bool reduced = augmentation == Augmentation::reduced;
    if (k < 0) {
        return DenseMatrix<Scalar>::Zero(0, (reduced && k == -1) ? 1 : 0);
    }
    const auto cols = static_cast<Eigen::Index>(L.count(k));
    if (k == 0) {
        DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(reduced ? 1 : 0, cols);
        if (reduced) {
            m.setOnes();
        }
        return m;
    }
    const auto rows = static_cast<Eigen::Index>(L.count(k - 1));
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(rows, cols);
    const auto simplices = L.simplices(k);
    Simplex face;
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Simplex& s = simplices[static_cast<std::size_t>(j)];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.assign(s.begin(), s.end());
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            const auto row = static_cast<Eigen::Index>(*L.index_of(face));
            m(row, j) = (drop % 2 == 0) ? Scalar(1) : Scalar(-1);
        }
    }
    return m;
}

/// H~_k(L; Z) for k = -1..dim L. The empty complex has H~_{-1} = Z.
GradedGroups reduced_homology(const SimplicialComplex& L);

enum class CohomologyRoute {
    /// Free part from H~_k, torsion from H~_{k-1}.
    universal_coefficients,
    /// Smith normal forms of the transposed boundary maps.
    coboundary,
};

GradedGroups reduced_cohomology(const SimplicialComplex& L,
                                CohomologyRoute route = CohomologyRoute::universal_coefficients);

/// Cohomology from already-computed reduced homology.
GradedGroups cohomology_from_homology(const GradedGroups& homology);

/// H_i(|L|, |L| - interior of sigma), computed as H~_{i - dim sigma - 1}(Lk(sigma, L)).
GradedGroups local_homology(const SimplicialComplex& L, std::span<const Vertex> sigma);

} // namespace flagrecon

#endif // FLAGRECON_HOMOLOGY_HPP
