#include "flagrecon/homology.hpp"

#include <algorithm>
#include <sstream>

namespace flagrecon {

std::string to_string(const AbelianGroup& g)
{
    if (g.is_trivial()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    if (g.rank > 0) {
        out << 'Z';
        if (g.rank > 1) {
            out << '^' << g.rank;
        }
        first = false;
    }
    for (const auto& t : g.torsion) {
        out << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return out.str();
}

void GradedGroups::set(int degree, AbelianGroup group)
{
    groups_[degree] = std::move(group);
}

const AbelianGroup& GradedGroups::operator[](int degree) const
{
    static const AbelianGroup trivial;
    auto it = groups_.find(degree);
    return it == groups_.end() ? trivial : it->second;
}

std::vector<int> GradedGroups::degrees() const
{
    std::vector<int> out;
    for (const auto& [d, _] : groups_) {
        out.push_back(d);
    }
    return out;
}

std::vector<int> GradedGroups::nontrivial_degrees() const
{
    std::vector<int> out;
    for (const auto& [d, g] : groups_) {
        if (!g.is_trivial()) {
            out.push_back(d);
        }
    }
    return out;
}

GradedGroups GradedGroups::shifted(int by) const
{
    GradedGroups out;
    for (const auto& [d, g] : groups_) {
        out.groups_[d + by] = g;
    }
    return out;
}

bool operator==(const GradedGroups& a, const GradedGroups& b)
{
    const auto da = a.nontrivial_degrees();
    if (da != b.nontrivial_degrees()) {
        return false;
    }
    return std::all_of(da.begin(), da.end(), [&](int d) { return a[d] == b[d]; });
}

std::string to_string(const GradedGroups& g)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int d : g.nontrivial_degrees()) {
        out << (first ? "" : ", ") << d << ": " << to_string(g[d]);
        first = false;
    }
    out << '}';
    return out.str();
}

GradedGroups sphere_homology(int n)
{
    GradedGroups g;
    g.set(n, AbelianGroup::free(1));
    return g;
}

namespace {

struct ChainData {
    // f[k + 1] = number of k-simplices, k = -1..dim (f[0] = 1 for the augmentation)
    std::vector<long long> f;
    // rank and torsion of d_k for k = 0..dim+1, stored at index k
    std::vector<long long> ranks;
    std::vector<std::vector<Integer>> torsion;
};

ChainData chain_data(const SimplicialComplex& L, bool transposed)
{
    const int dim = L.dimension();
    ChainData data;
    data.f.push_back(1);
    for (int k = 0; k <= dim; ++k) {
        data.f.push_back(static_cast<long long>(L.count(k)));
    }
    for (int k = 0; k <= dim + 1; ++k) {
        IntegerMatrix d = boundary_matrix<Integer>(L, k, Augmentation::reduced);
        auto snf = transposed ? smith_normal_form(d.transpose()) : smith_normal_form(d);
        data.ranks.push_back(static_cast<long long>(snf.rank));
        data.torsion.push_back(snf.torsion());
    }
    return data;
}

} // namespace

GradedGroups reduced_homology(const SimplicialComplex& L)
{
    const int dim = L.dimension();
    const ChainData data = chain_data(L, false);
    GradedGroups h;
    for (int k = -1; k <= dim; ++k) {
        const long long rank_out = (k >= 0) ? data.ranks[k] : 0;
        const long long rank_in = data.ranks[k + 1];
        AbelianGroup g;
        g.rank = data.f[k + 1] - rank_out - rank_in;
        g.torsion = data.torsion[k + 1];
        h.set(k, std::move(g));
    }
    return h;
}

GradedGroups cohomology_from_homology(const GradedGroups& homology)
{
    GradedGroups c;
    for (int k : homology.degrees()) {
        AbelianGroup g;
        g.rank = homology[k].rank;
        g.torsion = homology[k - 1].torsion;
        c.set(k, std::move(g));
    }
    return c;
}

GradedGroups reduced_cohomology(const SimplicialComplex& L, CohomologyRoute route)
{
    if (route == CohomologyRoute::universal_coefficients) {
        return cohomology_from_homology(reduced_homology(L));
    }
    // coboundary delta^k = (d_{k+1})^T : C^k -> C^{k+1}
    const int dim = L.dimension();
    const ChainData data = chain_data(L, true);
    GradedGroups c;
    for (int k = -1; k <= dim; ++k) {
        const long long rank_out = data.ranks[k + 1];
        const long long rank_in = (k >= 0) ? data.ranks[k] : 0;
        AbelianGroup g;
        g.rank = data.f[k + 1] - rank_out - rank_in;
        if (k >= 0) {
            g.torsion = data.torsion[k];
        }
        c.set(k, std::move(g));
    }
    return c;
}

GradedGroups local_homology(const SimplicialComplex& L, std::span<const Vertex> sigma)
{
    const int dim_sigma = static_cast<int>(sigma.size()) - 1;
    return reduced_homology(link(L, sigma)).shifted(dim_sigma + 1);
}

} // namespace flagrecon
