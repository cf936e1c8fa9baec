#include "flagrecon/simplicial_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace flagrecon {

DimensionCapExceeded::DimensionCapExceeded(int dimension, int cap)
    : Error("clique complex has dimension " + std::to_string(dimension) + ", above the cap of " +
            std::to_string(cap)),
      dimension_(dimension),
      cap_(cap)
{
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> labels,
                                                     std::span<const Simplex> generators)
{
    // Validates labels via Graph's uniqueness check.
    (void)Graph(labels);
    const int n = static_cast<int>(labels.size());

    std::vector<std::set<Simplex>> levels;
    auto insert = [&levels](Simplex s) {
        const std::size_t k = s.size() - 1;
        if (levels.size() <= k) {
            levels.resize(k + 1);
        }
        levels[k].insert(std::move(s));
    };

    for (Vertex v = 0; v < n; ++v) {
        insert(Simplex{v});
    }
    for (const auto& raw : generators) {
        Simplex g = raw;
        std::sort(g.begin(), g.end());
        if (g.empty()) {
            continue;
        }
        if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
            throw Error("repeated vertex in simplex");
        }
        if (g.front() < 0 || g.back() >= n) {
            throw Error("simplex vertex out of range");
        }
        if (g.size() > 30) {
            throw Error("simplex too large to close downward");
        }
        const std::uint32_t full = (std::uint32_t{1} << g.size()) - 1;
        // skip faces already present at the generator's own level
        if (g.size() <= levels.size() && levels[g.size() - 1].contains(g)) {
            continue;
        }
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (mask & (std::uint32_t{1} << i)) {
                    face.push_back(g[i]);
                }
            }
            insert(std::move(face));
        }
    }

    SimplicialComplex L;
    L.labels_ = std::move(labels);
    L.levels_.reserve(levels.size());
    for (auto& level : levels) {
        L.levels_.emplace_back(level.begin(), level.end());
    }
    return L;
}

std::span<const Simplex> SimplicialComplex::simplices(int k) const
{
    if (k < 0 || k > dimension()) {
        return {};
    }
    return levels_[k];
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> s) const
{
    if (s.empty()) {
        return std::nullopt;
    }
    auto level = simplices(static_cast<int>(s.size()) - 1);
    auto less = [](const Simplex& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    auto it = std::lower_bound(level.begin(), level.end(), s, less);
    if (it == level.end() || !std::equal(it->begin(), it->end(), s.begin(), s.end())) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::all_simplices() const
{
    std::vector<Simplex> out;
    for (const auto& level : levels_) {
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (int k = 0; k <= dimension(); ++k) {
        std::set<Simplex> covered;
        for (const auto& s : simplices(k + 1)) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                covered.insert(std::move(face));
            }
        }
        for (const auto& s : simplices(k)) {
            if (!covered.contains(s)) {
                out.push_back(s);
            }
        }
    }
    return out;
}

Graph SimplicialComplex::one_skeleton() const
{
    Graph g(labels_);
    for (const auto& e : simplices(1)) {
        g.add_edge(e[0], e[1]);
    }
    return g;
}

std::vector<std::string> SimplicialComplex::labels_of(std::span<const Vertex> s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) {
        out.push_back(labels_.at(v));
    }
    return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over sorted vertex vectors.
void bron_kerbosch(const Graph& g, VertexSet& clique, VertexSet candidates, VertexSet excluded,
                   std::vector<VertexSet>& out)
{
    if (candidates.empty() && excluded.empty()) {
        VertexSet c = clique;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    auto count_in = [&](Vertex u) {
        int hits = 0;
        for (Vertex w : candidates) {
            hits += g.adjacent(u, w) ? 1 : 0;
        }
        return hits;
    };
    Vertex pivot = -1;
    int best = -1;
    for (const VertexSet* pool : {&candidates, &excluded}) {
        for (Vertex u : *pool) {
            const int hits = count_in(u);
            if (hits > best) {
                best = hits;
                pivot = u;
            }
        }
    }
    VertexSet branch;
    for (Vertex v : candidates) {
        if (!g.adjacent(pivot, v)) {
            branch.push_back(v);
        }
    }
    for (Vertex v : branch) {
        VertexSet next_candidates, next_excluded;
        for (Vertex w : candidates) {
            if (g.adjacent(v, w)) {
                next_candidates.push_back(w);
            }
        }
        for (Vertex w : excluded) {
            if (g.adjacent(v, w)) {
                next_excluded.push_back(w);
            }
        }
        clique.push_back(v);
        bron_kerbosch(g, clique, std::move(next_candidates), std::move(next_excluded), out);
        clique.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g)
{
    std::vector<VertexSet> out;
    if (g.order() == 0) {
        return out;
    }
    VertexSet all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        all[v] = v;
    }
    VertexSet clique;
    bron_kerbosch(g, clique, std::move(all), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex clique_complex(const Graph& g, std::optional<int> max_dimension)
{
    auto cliques = maximal_cliques(g);
    if (max_dimension) {
        for (const auto& c : cliques) {
            const int dim = static_cast<int>(c.size()) - 1;
            if (dim > *max_dimension) {
                throw DimensionCapExceeded(dim, *max_dimension);
            }
        }
    }
    return SimplicialComplex::from_generators(g.labels(), cliques);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& L, std::span<const Vertex> subset)
{
    VertexSet keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> position(L.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= L.vertex_count()) {
            throw Error("vertex index " + std::to_string(keep[i]) + " not in complex");
        }
        position[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::string> labels;
    for (Vertex v : keep) {
        labels.push_back(L.label(v));
    }
    std::vector<Simplex> kept;
    for (int k = 1; k <= L.dimension(); ++k) {
        for (const auto& s : L.simplices(k)) {
            if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return position[v] >= 0; })) {
                Simplex t;
                for (Vertex v : s) {
                    t.push_back(position[v]);
                }
                kept.push_back(std::move(t));
            }
        }
    }
    return SimplicialComplex::from_generators(std::move(labels), kept);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& L, std::span<const std::string> labels)
{
    VertexSet subset;
    for (const auto& l : labels) {
        auto it = std::find(L.labels().begin(), L.labels().end(), l);
        if (it == L.labels().end()) {
            throw Error("unknown vertex '" + l + "'");
        }
        subset.push_back(static_cast<Vertex>(it - L.labels().begin()));
    }
    return full_subcomplex(L, subset);
}

SimplicialComplex link(const SimplicialComplex& L, std::span<const Vertex> sigma)
{
    if (!L.contains(sigma)) {
        throw Error("simplex not in complex");
    }
    const int d = static_cast<int>(sigma.size()) - 1;
    std::vector<Simplex> rests;
    std::vector<char> used(L.vertex_count(), 0);
    for (int k = d + 1; k <= L.dimension(); ++k) {
        for (const auto& s : L.simplices(k)) {
            if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) {
                continue;
            }
            Simplex rest;
            std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
            for (Vertex v : rest) {
                used[v] = 1;
            }
            rests.push_back(std::move(rest));
        }
    }
    std::vector<int> position(L.vertex_count(), -1);
    std::vector<std::string> labels;
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        if (used[v]) {
            position[v] = static_cast<int>(labels.size());
            labels.push_back(L.label(v));
        }
    }
    for (auto& r : rests) {
        for (auto& v : r) {
            v = position[v];
        }
    }
    return SimplicialComplex::from_generators(std::move(labels), rests);
}

bool is_flag(const SimplicialComplex& L)
{
    // L is always a subcomplex of the clique complex of its 1-skeleton.
    return f_vector(L) == f_vector(clique_complex(L.one_skeleton()));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& L)
{
    std::vector<std::size_t> f;
    for (int k = 0; k <= L.dimension(); ++k) {
        f.push_back(L.count(k));
    }
    return f;
}

long long euler_characteristic(const SimplicialComplex& L)
{
    long long chi = 0;
    for (int k = 0; k <= L.dimension(); ++k) {
        const auto c = static_cast<long long>(L.count(k));
        chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
}

} // namespace flagrecon
