#include "flagrecon/coxeter.hpp"

#include <algorithm>

namespace flagrecon {

namespace {

VertexSet complement_of(const NerveSystem& ns, std::span<const Vertex> t)
{
    VertexSet rest;
    for (Vertex v = 0; v < ns.generator_count(); ++v) {
        if (std::find(t.begin(), t.end(), v) == t.end()) {
            rest.push_back(v);
        }
    }
    return rest;
}

void require_generators(const NerveSystem& ns)
{
    if (ns.generator_count() == 0) {
        throw Error("Coxeter system has no generators");
    }
}

} // namespace

NerveSystem::NerveSystem(Graph graph, std::optional<int> max_dimension)
    : graph_(std::move(graph)), nerve_(clique_complex(graph_, max_dimension))
{
}

bool is_spherical(const NerveSystem& ns, std::span<const Vertex> t)
{
    for (Vertex v : t) {
        if (v < 0 || v >= ns.generator_count()) {
            throw Error("vertex index " + std::to_string(v) + " not a generator");
        }
    }
    return is_clique(ns.graph(), t);
}

std::vector<VertexSet> spherical_subsets(const NerveSystem& ns)
{
    return ns.nerve().all_simplices();
}

bool is_finite_group(const NerveSystem& ns)
{
    require_generators(ns);
    const auto n = static_cast<std::size_t>(ns.generator_count());
    return ns.graph().size() == n * (n - 1) / 2;
}

bool is_irreducible(const NerveSystem& ns)
{
    require_generators(ns);
    return connected_components(complement(ns.graph())).size() == 1;
}

JoinDecomposition join_decomposition(const NerveSystem& ns)
{
    JoinDecomposition d;
    const int n = ns.generator_count();
    for (Vertex v = 0; v < n; ++v) {
        if (ns.graph().degree(v) == n - 1) {
            d.spherical.push_back(v);
        } else {
            d.rest.push_back(v);
        }
    }
    return d;
}

PDVerdict is_virtual_pd(const NerveSystem& ns)
{
    PDVerdict verdict;
    verdict.decomposition = join_decomposition(ns);
    const auto& rest = verdict.decomposition.rest;
    if (rest.empty()) {
        verdict.evidence = is_generalized_homology_sphere(SimplicialComplex(), -1);
        verdict.is_vpd = true;
        verdict.dimension = 0;
        verdict.degenerate = true;
        return verdict;
    }
    const SimplicialComplex sub = full_subcomplex(ns.nerve(), rest);
    verdict.evidence = is_generalized_homology_sphere(sub, detect_dimension(sub));
    verdict.is_vpd = verdict.evidence.is_sphere;
    if (verdict.is_vpd) {
        verdict.dimension = verdict.evidence.dimension + 1;
    }
    return verdict;
}

AcyclicityResult spherical_complements_acyclic(const NerveSystem& ns)
{
    AcyclicityResult result;
    for (const auto& t : spherical_subsets(ns)) {
        ++result.subsets_checked;
        const GradedGroups c = reduced_cohomology(full_subcomplex(ns.nerve(), complement_of(ns, t)));
        const auto bad = c.nontrivial_degrees();
        if (!bad.empty()) {
            result.holds = false;
            result.witness = AcyclicityWitness{t, bad.front(), c[bad.front()]};
            return result;
        }
    }
    return result;
}

std::optional<AbelianGroup> group_ring_cohomology(const NerveSystem& ns, int i)
{
    if (!is_irreducible(ns)) {
        throw Error("Coxeter system is reducible");
    }
    if (i < 0) {
        throw Error("cohomological degree must be nonnegative");
    }
    for (const auto& t : spherical_subsets(ns)) {
        const GradedGroups c = reduced_cohomology(full_subcomplex(ns.nerve(), complement_of(ns, t)));
        if (!c[i - 1].is_trivial()) {
            return std::nullopt;
        }
    }
    return reduced_cohomology(ns.nerve())[i - 1];
}

DualityCrosscheck duality_crosscheck(const NerveSystem& ns)
{
    if (!is_irreducible(ns)) {
        throw Error("Coxeter system is reducible");
    }
    if (is_finite_group(ns)) {
        throw Error("Coxeter group is finite");
    }
    DualityCrosscheck check;
    check.virtual_pd = is_virtual_pd(ns).is_vpd;
    const SimplicialComplex& L = ns.nerve();
    check.homology_sphere = is_generalized_homology_sphere(L, detect_dimension(L)).is_sphere;
    check.complements_acyclic = spherical_complements_acyclic(ns).holds;
    return check;
}

} // namespace flagrecon
