#include "oracles.hpp"

#include "flagrecon/simplicial_complex.hpp"

#include <doctest.h>

#include <random>

using namespace flagrecon;

namespace {

using Counts = std::vector<std::size_t>;

bool face_closed(const SimplicialComplex& L)
{
    for (const auto& s : L.all_simplices()) {
        for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!L.contains(face)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("clique complex examples")
{
    const auto c4 = clique_complex(cycle_graph(4));
    CHECK(f_vector(c4) == Counts{4, 4});
    CHECK(c4.dimension() == 1);

    const auto k3 = clique_complex(complete_graph(3));
    CHECK(f_vector(k3) == Counts{3, 3, 1});

    const Graph k222 = cross_polytope(3);
    const auto oct = clique_complex(k222);
    CHECK(f_vector(oct) == oracle::clique_counts(oracle::brute_cliques(k222)));
    CHECK(f_vector(oct) == Counts{6, 12, 8});
    CHECK(oct.dimension() == 2);
    CHECK(euler_characteristic(oct) == 2);

    const auto empty = clique_complex(Graph());
    CHECK(empty.dimension() == -1);
    CHECK(empty.empty());
    CHECK(f_vector(empty).empty());
    CHECK(euler_characteristic(empty) == 0);
}

TEST_CASE("clique complex matches brute-force clique enumeration")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 11;
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.07 * (trial % 10));
        const auto L = clique_complex(g);
        const auto brute = oracle::brute_cliques(g);
        std::set<VertexSet> mine;
        for (const auto& s : L.all_simplices()) {
            mine.insert(s);
        }
        CHECK(mine == brute);
        CHECK(face_closed(L));
        CHECK(is_flag(L));
        CHECK(L.one_skeleton() == g);
    }
}

TEST_CASE("maximal cliques")
{
    const auto m = maximal_cliques(cross_polytope(3));
    CHECK(m.size() == 8);
    CHECK(maximal_cliques(empty_graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(maximal_cliques(Graph()).empty());
}

TEST_CASE("dimension cap")
{
    CHECK_NOTHROW(clique_complex(complete_graph(4), 3));
    try {
        clique_complex(complete_graph(5), 3);
        FAIL("cap not enforced");
    } catch (const DimensionCapExceeded& e) {
        CHECK(e.dimension() == 4);
        CHECK(e.cap() == 3);
    }
}

TEST_CASE("full subcomplex")
{
    const auto L = clique_complex(cross_polytope(3));
    const VertexSet rest = {1, 2, 3, 4, 5};
    const auto cone = full_subcomplex(L, rest);
    CHECK(f_vector(cone) == Counts{5, 8, 4});
    CHECK(cone.labels() == oracle::labels({"1", "2", "3", "4", "5"}));

    CHECK(full_subcomplex(L, VertexSet{}).empty());
    const VertexSet all = {0, 1, 2, 3, 4, 5};
    CHECK(full_subcomplex(L, all) == L);

    const std::vector<std::string> named = {"5", "0"};
    CHECK(f_vector(full_subcomplex(L, named)) == Counts{2, 1});
}

TEST_CASE("full subcomplexes of flag complexes are flag")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 9, 0.5);
        const auto L = clique_complex(g);
        VertexSet t;
        for (int v = 0; v < 9; ++v) {
            if (rng() % 2) {
                t.push_back(v);
            }
        }
        const auto sub = full_subcomplex(L, t);
        CHECK(is_flag(sub));
        CHECK(sub == clique_complex(full_subgraph(g, t)));
    }
}

TEST_CASE("links")
{
    const auto oct = clique_complex(cross_polytope(3));
    const auto lk = link(oct, VertexSet{0});
    CHECK(f_vector(lk) == Counts{4, 4});
    CHECK(oracle::labeled_simplices(lk) == oracle::definition_link(oct, {0}));
    CHECK(oracle::brute_isomorphic(lk.one_skeleton(), cycle_graph(4)));

    for (const auto& facet : oct.maximal_simplices()) {
        CHECK(link(oct, facet).empty());
    }

    const auto c5 = clique_complex(cycle_graph(5));
    const auto s0 = link(c5, VertexSet{0});
    CHECK(f_vector(s0) == Counts{2});
    CHECK(s0.labels() == oracle::labels({"1", "4"}));

    CHECK_THROWS_AS(link(c5, VertexSet{0, 2}), Error);
}

TEST_CASE("links agree with the definition and with neighbor subcomplexes")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 8, 0.55);
        const auto L = clique_complex(g);
        for (const auto& sigma : L.all_simplices()) {
            const auto lk = link(L, sigma);
            CHECK(oracle::labeled_simplices(lk) == oracle::definition_link(L, sigma));
            if (sigma.size() == 1) {
                const auto nb = g.neighbors(sigma[0]);
                CHECK(lk == full_subcomplex(L, VertexSet(nb.begin(), nb.end())));
                CHECK(is_flag(lk));
            }
        }
    }
}

TEST_CASE("is_flag")
{
    const std::vector<Simplex> edges = {{0, 1}, {1, 2}, {0, 2}};
    const auto hollow = SimplicialComplex::from_generators(oracle::labels({"1", "2", "3"}), edges);
    CHECK_FALSE(is_flag(hollow));
    CHECK_FALSE(is_flag(oracle::projective_plane()));

    const Graph t = torus_grid(5, 5);
    const auto torus = clique_complex(t);
    CHECK(is_flag(torus));
    CHECK(oracle::clique_counts(oracle::brute_cliques(torus_grid(4, 4))) == Counts{16, 48, 32});
}

TEST_CASE("euler characteristic")
{
    for (int n = 4; n <= 9; ++n) {
        CHECK(euler_characteristic(clique_complex(cycle_graph(n))) == 0);
    }
    const auto torus = clique_complex(torus_grid(5, 5));
    CHECK(f_vector(torus) == Counts{25, 75, 50});
    CHECK(euler_characteristic(torus) == 0);
    CHECK(euler_characteristic(clique_complex(icosahedron())) == 2);
}

TEST_CASE("join property of clique complexes")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph a = oracle::random_graph(rng, 4, 0.5);
        const Graph b = relabeled(oracle::random_graph(rng, 4, 0.5), {"a", "b", "c", "d"});
        const Graph j = join(a, b);
        const auto La = oracle::labeled_simplices(clique_complex(a));
        const auto Lb = oracle::labeled_simplices(clique_complex(b));
        std::set<std::vector<std::string>> expected = La;
        expected.insert(Lb.begin(), Lb.end());
        for (const auto& s : La) {
            for (const auto& t : Lb) {
                auto u = s;
                u.insert(u.end(), t.begin(), t.end());
                std::sort(u.begin(), u.end());
                expected.insert(u);
            }
        }
        CHECK(oracle::labeled_simplices(clique_complex(j)) == expected);
    }
}

TEST_CASE("from_generators validation")
{
    const std::vector<Simplex> bad = {{0, 3}};
    CHECK_THROWS_AS(SimplicialComplex::from_generators(oracle::labels({"a", "b"}), bad), Error);
    const std::vector<Simplex> repeated = {{1, 1}};
    CHECK_THROWS_AS(SimplicialComplex::from_generators(oracle::labels({"a", "b"}), repeated), Error);
    const std::vector<Simplex> unsorted = {{1, 0}};
    CHECK(SimplicialComplex::from_generators(oracle::labels({"a", "b"}), unsorted).contains(VertexSet{0, 1}));
    const auto isolated = SimplicialComplex::from_generators(oracle::labels({"a", "b", "c"}), std::vector<Simplex>{{0, 1}});
    CHECK(f_vector(isolated) == Counts{3, 1});
    CHECK(isolated.maximal_simplices() == std::vector<Simplex>{{2}, {0, 1}});
}
