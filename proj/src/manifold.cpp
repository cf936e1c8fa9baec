#include "flagrecon/manifold.hpp"

namespace flagrecon {

namespace {

void require_nonempty(const SimplicialComplex& L)
{
    if (L.empty()) {
        throw Error("empty complex");
    }
}

std::optional<Simplex> first_impure_facet(const SimplicialComplex& L, int n)
{
    for (auto& s : L.maximal_simplices()) {
        if (static_cast<int>(s.size()) - 1 != n) {
            return s;
        }
    }
    return std::nullopt;
}

} // namespace

int detect_dimension(const SimplicialComplex& L)
{
    return L.dimension();
}

bool is_pure(const SimplicialComplex& L, int n)
{
    require_nonempty(L);
    return !first_impure_facet(L, n).has_value();
}

ManifoldVerdict is_homology_manifold(const SimplicialComplex& L, int n)
{
    require_nonempty(L);
    if (n < 0) {
        throw Error("manifold dimension must be nonnegative");
    }
    ManifoldVerdict verdict;
    verdict.dimension = n;
    const GradedGroups interior = sphere_homology(n);

    if (auto facet = first_impure_facet(L, n)) {
        verdict.witness = LocalWitness{*facet, local_homology(L, *facet), interior};
        return verdict;
    }

    verdict.verified.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        for (const auto& s : L.simplices(k)) {
            GradedGroups local = local_homology(L, s);
            if (!(local == interior)) {
                verdict.witness = LocalWitness{s, std::move(local), interior};
                return verdict;
            }
            ++verdict.verified[k];
        }
    }
    verdict.is_manifold = true;
    return verdict;
}

SphereVerdict is_generalized_homology_sphere(const SimplicialComplex& L, int n)
{
    SphereVerdict verdict;
    verdict.dimension = n;
    if (n < -1) {
        throw Error("sphere dimension must be at least -1");
    }
    if (L.empty()) {
        if (n != -1) {
            throw Error("empty complex");
        }
        verdict.homology = reduced_homology(L);
        verdict.is_sphere = true;
        return verdict;
    }
    verdict.homology = reduced_homology(L);
    if (n == -1) {
        return verdict;
    }
    verdict.manifold = is_homology_manifold(L, n);
    verdict.is_sphere = verdict.manifold->is_manifold && verdict.homology == sphere_homology(n);
    return verdict;
}

VertexSet boundary_of(const SimplicialComplex& L, int n)
{
    require_nonempty(L);
    const GradedGroups interior = sphere_homology(n);
    if (auto facet = first_impure_facet(L, n)) {
        throw NotRelativeManifold("complex is not pure of dimension " + std::to_string(n),
                                  LocalWitness{*facet, local_homology(L, *facet), interior});
    }
    VertexSet boundary;
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        const Simplex s{v};
        GradedGroups local = local_homology(L, s);
        if (local.is_trivial()) {
            boundary.push_back(v);
        } else if (!(local == interior)) {
            throw NotRelativeManifold("vertex '" + L.label(v) + "' is neither interior nor boundary",
                                      LocalWitness{s, std::move(local), interior});
        }
    }
    return boundary;
}

} // namespace flagrecon
