// Brute-force reference computations used only by the tests. Nothing here
// calls into the canonical labeling, the Smith reduction or the link code it
// is meant to check.

#ifndef FLAGRECON_TESTS_ORACLES_HPP
#define FLAGRECON_TESTS_ORACLES_HPP

#include "flagrecon/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using flagrecon::Graph;
using flagrecon::Integer;
using flagrecon::IntegerMatrix;
using flagrecon::SimplicialComplex;
using flagrecon::Vertex;
using flagrecon::VertexSet;

inline std::vector<std::string> labels(std::initializer_list<const char*> names)
{
    return {names.begin(), names.end()};
}

inline std::vector<std::string> numbered(int n, const std::string& prefix)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

/// Graph on n vertices from the bits of `mask` over pairs (i<j) in row order.
inline Graph graph_from_mask(int n, std::uint64_t mask)
{
    Graph g = Graph::with_order(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

/// Adjacency bits of g under `perm` (vertex v at position perm[v]).
inline std::uint64_t mask_under(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    std::vector<int> pos_to_vertex(n);
    for (int v = 0; v < n; ++v) {
        pos_to_vertex[perm[v]] = v;
    }
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (g.adjacent(pos_to_vertex[i], pos_to_vertex[j])) {
                mask |= std::uint64_t{1} << bit;
            }
        }
    }
    return mask;
}

/// Complete invariant: maximum adjacency mask over all n! orderings.
inline std::uint64_t brute_canonical(const Graph& g)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do {
        best = std::max(best, mask_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u) {
            for (int v = u + 1; v < a.order(); ++v) {
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline long long count_automorphisms(const Graph& g)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            }
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Every nonempty clique by subset enumeration, as sorted vertex lists.
inline std::set<VertexSet> brute_cliques(const Graph& g)
{
    std::set<VertexSet> out;
    const int n = g.order();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) {
                s.push_back(v);
            }
        }
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!g.adjacent(s[i], s[j])) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) {
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<std::size_t> clique_counts(const std::set<VertexSet>& cliques)
{
    std::vector<std::size_t> f;
    for (const auto& c : cliques) {
        if (f.size() < c.size()) {
            f.resize(c.size(), 0);
        }
        ++f[c.size() - 1];
    }
    return f;
}

/// Simplices of L as sets of labels.
inline std::set<std::vector<std::string>> labeled_simplices(const SimplicialComplex& L)
{
    std::set<std::vector<std::string>> out;
    for (const auto& s : L.all_simplices()) {
        auto l = L.labels_of(s);
        std::sort(l.begin(), l.end());
        out.insert(l);
    }
    return out;
}

/// Lk(sigma, L) from the definition: every vertex subset tau disjoint from
/// sigma with tau u sigma a simplex of L. Returned as label sets.
inline std::set<std::vector<std::string>> definition_link(const SimplicialComplex& L, const VertexSet& sigma)
{
    std::set<std::vector<std::string>> out;
    const int n = L.vertex_count();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet tau, both = sigma;
        bool disjoint = true;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) {
                if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) {
                    disjoint = false;
                    break;
                }
                tau.push_back(v);
                both.push_back(v);
            }
        }
        if (!disjoint) {
            continue;
        }
        std::sort(both.begin(), both.end());
        if (L.contains(both)) {
            auto l = L.labels_of(tau);
            std::sort(l.begin(), l.end());
            out.insert(l);
        }
    }
    return out;
}

/// Plain triple-loop product; Eigen's converting constructors do not accept
/// cpp_int expressions on this toolchain.
inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b)
{
    IntegerMatrix out = IntegerMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

inline bool equal(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) {
                return false;
            }
        }
    }
    return true;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntegerMatrix a)
{
    const auto n = a.rows();
    if (n == 0) {
        return 1;
    }
    Integer sign = 1, prev = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            }
            if (swap < 0) {
                return 0;
            }
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void choose(int n, int k, std::vector<std::vector<int>>& out, std::vector<int>& cur, int start = 0)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, out, cur, i + 1);
        cur.pop_back();
    }
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, s_k = d_k / d_{k-1}. Exponential; keep matrices tiny.
inline std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& m)
{
    std::vector<Integer> factors;
    Integer prev = 1;
    const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
    for (int k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<int>> rows, cols;
        std::vector<int> cur;
        choose(r, k, rows, cur);
        choose(c, k, cols, cur);
        Integer d = 0;
        for (const auto& rs : rows) {
            for (const auto& cs : cols) {
                IntegerMatrix sub(k, k);
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) {
                        sub(i, j) = m(rs[i], cs[j]);
                    }
                }
                d = boost::multiprecision::gcd(d, determinant(sub));
            }
        }
        if (d == 0) {
            break;
        }
        factors.push_back(d / prev);
        prev = d;
    }
    return factors;
}

/// Rank over Q by fraction-free elimination.
inline long long rational_rank(IntegerMatrix a)
{
    long long rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < a.rows(); ++i) {
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        a.row(row).swap(a.row(pivot));
        for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) {
                continue;
            }
            const Integer p = a(row, col), q = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) {
                a(i, j) = a(i, j) * p - a(row, j) * q;
            }
            const Integer g = [&] {
                Integer acc = 0;
                for (Eigen::Index j = col; j < a.cols(); ++j) {
                    acc = boost::multiprecision::gcd(acc, a(i, j));
                }
                return acc;
            }();
            if (g > 1) {
                for (Eigen::Index j = col; j < a.cols(); ++j) {
                    a(i, j) /= g;
                }
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

/**
 * H_i(L, L - open star of sigma) straight from the relative chain complex:
 * generators are the simplices containing sigma, and the boundary keeps only
 * faces that still contain sigma.
 */
inline flagrecon::GradedGroups relative_local_homology(const SimplicialComplex& L, const VertexSet& sigma)
{
    std::vector<std::vector<VertexSet>> chains(L.dimension() + 2);
    for (int k = 0; k <= L.dimension(); ++k) {
        for (const auto& s : L.simplices(k)) {
            if (std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) {
                chains[k].push_back(s);
            }
        }
    }
    auto boundary = [&](int k) {
        // d_k : C_k -> C_{k-1}
        const auto cols = static_cast<Eigen::Index>(k >= 0 && k < static_cast<int>(chains.size()) ? chains[k].size() : 0);
        const auto rows =
            static_cast<Eigen::Index>(k - 1 >= 0 && k - 1 < static_cast<int>(chains.size()) ? chains[k - 1].size() : 0);
        IntegerMatrix m = IntegerMatrix::Zero(rows, cols);
        if (rows == 0) {
            return m;
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            const auto& s = chains[k][j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                VertexSet face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = std::find(chains[k - 1].begin(), chains[k - 1].end(), face);
                if (it != chains[k - 1].end()) {
                    m(it - chains[k - 1].begin(), j) = (drop % 2 == 0) ? 1 : -1;
                }
            }
        }
        return m;
    };
    flagrecon::GradedGroups h;
    for (int k = 0; k <= L.dimension(); ++k) {
        const IntegerMatrix out = boundary(k);
        const IntegerMatrix in = boundary(k + 1);
        const auto snf_in = flagrecon::smith_normal_form(in);
        flagrecon::AbelianGroup g;
        g.rank = static_cast<long long>(chains[k].size()) - rational_rank(out) - rational_rank(in);
        g.torsion = snf_in.torsion();
        h.set(k, g);
    }
    return h;
}

/// Nontrivial join splitting by exhaustive search over bipartitions.
inline bool brute_is_join(const Graph& g)
{
    const int n = g.order();
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
        bool all = true;
        for (int u = 0; u < n && all; ++u) {
            for (int v = 0; v < n; ++v) {
                const bool su = mask & (std::uint32_t{1} << u), sv = mask & (std::uint32_t{1} << v);
                if (su && !sv && !g.adjacent(u, v)) {
                    all = false;
                    break;
                }
            }
        }
        if (all) {
            return true;
        }
    }
    return false;
}

inline Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// The 6-vertex, 10-triangle real projective plane.
inline SimplicialComplex projective_plane()
{
    const std::vector<flagrecon::Simplex> faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
    };
    return SimplicialComplex::from_generators(labels({"1", "2", "3", "4", "5", "6"}), faces);
}

} // namespace oracle

#endif // FLAGRECON_TESTS_ORACLES_HPP
