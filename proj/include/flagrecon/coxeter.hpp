#ifndef FLAGRECON_COXETER_HPP
#define FLAGRECON_COXETER_HPP

#include "flagrecon/manifold.hpp"

#include <optional>

namespace flagrecon {

/**
 * Right-angled Coxeter system (W, S) seen through its nerve: S is the vertex
 * set of the graph, and the nerve is the flag complex of the graph. Group
 * elements are never represented; every group-level question below is
 * answered by an equivalent condition on the nerve.
 */
class NerveSystem {
public:
    explicit NerveSystem(Graph graph, std::optional<int> max_dimension = std::nullopt);

    const Graph& graph() const { return graph_; }
    const SimplicialComplex& nerve() const { return nerve_; }
    int generator_count() const { return graph_.order(); }

private:
    Graph graph_;
    SimplicialComplex nerve_;
};

/// W_T is finite iff T spans a simplex, i.e. T is a clique. The empty set is spherical.
bool is_spherical(const NerveSystem& ns, std::span<const Vertex> t);

/// Every nonempty spherical subset once, by size then lexicographically.
std::vector<VertexSet> spherical_subsets(const NerveSystem& ns);

/// W is finite iff the graph is complete. Throws for an empty generating set.
bool is_finite_group(const NerveSystem& ns);
/// No nontrivial join splitting, i.e. the complement graph is connected.
bool is_irreducible(const NerveSystem& ns);

/// W = W_{T0} x W_{T1} with T1 the universal vertices (a spherical factor).
struct JoinDecomposition {
    VertexSet rest;       // T0
    VertexSet spherical;  // T1
};

JoinDecomposition join_decomposition(const NerveSystem& ns);

struct PDVerdict {
    bool is_vpd = false;
    /// Virtual cohomological dimension when is_vpd.
    int dimension = 0;
    JoinDecomposition decomposition;
    /// Sphere test on the full subcomplex over T0.
    SphereVerdict evidence;
    /// Finite W (complete graph): T0 is empty and the dimension is 0.
    bool degenerate = false;
};

/// Virtual Poincare duality via the Davis product decomposition: peel the
/// universal vertices and test the remaining full subcomplex for being a
/// generalized homology sphere.
PDVerdict is_virtual_pd(const NerveSystem& ns);

struct AcyclicityWitness {
    VertexSet spherical_subset;
    int degree = 0;
    AbelianGroup group;
};

struct AcyclicityResult {
    bool holds = true;
    std::optional<AcyclicityWitness> witness;
    std::size_t subsets_checked = 0;
};

/// H~^i(L_{S-T}) = 0 for every degree i and every nonempty spherical T.
/// Stops at the first failure.
AcyclicityResult spherical_complements_acyclic(const NerveSystem& ns);

/// H^i(W; ZW) when it is finitely generated, in which case it equals
/// H~^{i-1}(L); nullopt when some H~^{i-1}(L_{S-T}) is nonzero. Requires an
/// irreducible system.
std::optional<AbelianGroup> group_ring_cohomology(const NerveSystem& ns, int i);

/// Independent evaluation of the three equivalent statements for an
/// irreducible infinite system: W is virtually Poincare duality, L is a
/// generalized homology sphere, and the spherical complements are acyclic.
struct DualityCrosscheck {
    bool virtual_pd = false;
    bool homology_sphere = false;
    bool complements_acyclic = false;
    bool consistent() const
    {
        return virtual_pd == homology_sphere && homology_sphere == complements_acyclic;
    }
};

DualityCrosscheck duality_crosscheck(const NerveSystem& ns);

} // namespace flagrecon

#endif // FLAGRECON_COXETER_HPP
