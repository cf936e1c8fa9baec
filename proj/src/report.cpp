#include "flagrecon/report.hpp"

#include "flagrecon/io.hpp"

#include <chrono>

namespace flagrecon {

using nlohmann::ordered_json;

namespace {

ordered_json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(x);
    }
    return x.str();
}

ordered_json labels_json(const SimplicialComplex& L, std::span<const Vertex> s)
{
    return L.labels_of(s);
}

ordered_json labels_json(const Graph& g, std::span<const Vertex> s)
{
    ordered_json out = ordered_json::array();
    for (Vertex v : s) {
        out.push_back(g.label(v));
    }
    return out;
}

ordered_json witness_json(const SimplicialComplex& L, const LocalWitness& w)
{
    return {
        {"simplex", labels_json(L, w.simplex)},
        {"local_homology", to_json(w.local_homology)},
        {"expected", to_json(w.expected)},
    };
}

ordered_json manifold_json(const SimplicialComplex& L, const ManifoldVerdict& v)
{
    ordered_json out = {
        {"dimension", v.dimension},
        {"is_manifold", v.is_manifold},
        {"basis", "local homology at every simplex equals that of a point of R^n"},
    };
    if (v.is_manifold) {
        out["verified"] = v.verified;
    } else {
        out["witness"] = witness_json(L, *v.witness);
    }
    return out;
}

class Stopwatch {
public:
    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

ordered_json to_json(const AbelianGroup& g, int degree)
{
    ordered_json torsion = ordered_json::array();
    for (const auto& t : g.torsion) {
        torsion.push_back(integer_json(t));
    }
    return {{"degree", degree}, {"rank", g.rank}, {"torsion", torsion}, {"group", to_string(g)}};
}

ordered_json to_json(const GradedGroups& g)
{
    ordered_json out = ordered_json::array();
    for (int d : g.nontrivial_degrees()) {
        out.push_back(to_json(g[d], d));
    }
    return out;
}

Analysis analyze(const Graph& g, const AnalysisOptions& options)
{
    Stopwatch clock;
    ordered_json timing;
    Analysis result;
    ordered_json& r = result.report;

    r["schema_version"] = report_schema_version;
    r["input"] = {
        {"format", options.format_name},
        {"vertices", g.order()},
        {"edges", g.size()},
    };

    const NerveSystem ns(g, options.max_dimension);
    const SimplicialComplex& L = ns.nerve();
    r["flag_complex"] = {
        {"f_vector", f_vector(L)},
        {"dimension", L.dimension()},
        {"euler_characteristic", euler_characteristic(L)},
    };
    timing["flag_complex"] = clock.lap();

    const GradedGroups homology = reduced_homology(L);
    ordered_json table = ordered_json::array();
    for (int d : homology.degrees()) {
        table.push_back(to_json(homology[d], d));
    }
    r["homology"] = table;
    timing["homology"] = clock.lap();

    const int n = detect_dimension(L);
    if (L.empty()) {
        r["manifold"] = nullptr;
    } else {
        r["manifold"] = manifold_json(L, is_homology_manifold(L, n));
    }
    const SphereVerdict sphere = is_generalized_homology_sphere(L, n);
    r["homology_sphere"] = {
        {"dimension", n},
        {"is_sphere", sphere.is_sphere},
        {"basis", "homology manifold with the reduced homology of a sphere"},
    };
    timing["manifold"] = clock.lap();

    if (g.order() == 0) {
        r["coxeter"] = nullptr;
    } else {
        const bool finite = is_finite_group(ns);
        const bool irreducible = is_irreducible(ns);
        const PDVerdict pd = is_virtual_pd(ns);
        const AcyclicityResult acyclic = spherical_complements_acyclic(ns);

        ordered_json cox;
        cox["generators"] = g.order();
        cox["finite"] = finite;
        cox["irreducible"] = irreducible;
        cox["decomposition"] = {
            {"rest", labels_json(g, pd.decomposition.rest)},
            {"spherical_factor", labels_json(g, pd.decomposition.spherical)},
        };
        cox["virtual_pd"] = {
            {"is_vpd", pd.is_vpd},
            {"dimension", pd.is_vpd ? ordered_json(pd.dimension) : ordered_json(nullptr)},
            {"degenerate", pd.degenerate},
            {"basis", "product decomposition with a spherical factor and a generalized homology sphere nerve"},
        };
        ordered_json acyc = {
            {"holds", acyclic.holds},
            {"subsets_checked", acyclic.subsets_checked},
            {"basis", "reduced cohomology of L_{S-T} for every nonempty spherical T"},
        };
        if (acyclic.witness) {
            acyc["witness"] = {
                {"spherical_subset", labels_json(g, acyclic.witness->spherical_subset)},
                {"cohomology", to_json(acyclic.witness->group, acyclic.witness->degree)},
            };
        }
        cox["spherical_complements_acyclic"] = acyc;
        if (irreducible && !finite) {
            const DualityCrosscheck check = duality_crosscheck(ns);
            cox["crosscheck"] = {
                {"virtual_pd", check.virtual_pd},
                {"homology_sphere", check.homology_sphere},
                {"complements_acyclic", check.complements_acyclic},
                {"consistent", check.consistent()},
            };
        } else {
            cox["crosscheck"] = nullptr;
        }
        r["coxeter"] = cox;
    }
    timing["coxeter"] = clock.lap();

    ordered_json cert;
    if (g.order() < 3) {
        cert = {
            {"path", to_string(CertificatePath::none)},
            {"dimension", nullptr},
            {"basis", "certificates need at least 3 vertices"},
            {"caveat", no_certificate_caveat},
        };
    } else {
        const Certificate c = certify_reconstructible(g, options.max_dimension);
        result.path = c.path;
        cert["path"] = to_string(c.path);
        switch (c.path) {
        case CertificatePath::homology_manifold:
            cert["dimension"] = c.dimension;
            cert["basis"] = "1-skeleton of a flag homology n-manifold, n >= 1";
            break;
        case CertificatePath::virtual_poincare_duality:
            cert["dimension"] = c.dimension;
            cert["basis"] = "right-angled Coxeter group is a virtual Poincare duality group";
            break;
        case CertificatePath::none:
            cert["dimension"] = nullptr;
            cert["basis"] = "neither criterion applies";
            cert["caveat"] = c.caveat;
            break;
        }
    }
    r["certificate"] = cert;
    timing["certificate"] = clock.lap();

    if (options.timing) {
        r["timing_ms"] = timing;
    }
    return result;
}

ordered_json to_json(const ScanResult& scan, const std::string& source)
{
    ordered_json groups = ordered_json::array();
    for (const auto& group : scan.groups) {
        ordered_json members = ordered_json::array();
        for (const auto& g : group) {
            members.push_back(emit_graph6(g));
        }
        groups.push_back(members);
    }
    return {
        {"schema_version", report_schema_version},
        {"source", source},
        {"classes_scanned", scan.classes},
        {"hypomorphic_groups", groups},
    };
}

} // namespace flagrecon
