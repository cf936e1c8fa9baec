#include "flagrecon/graph.hpp"

#include <string>

namespace flagrecon {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw Error(what);
    }
}

} // namespace

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    Graph g = Graph::with_order(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

Graph empty_graph(int n)
{
    require(n >= 0, "empty graph needs n >= 0");
    return Graph::with_order(n);
}

Graph complete_multipartite(std::span<const int> parts)
{
    require(!parts.empty(), "complete multipartite graph needs at least one part");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require(parts[p] >= 1, "parts must be nonempty");
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (part_of[i] != part_of[j]) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph cross_polytope(int k)
{
    require(k >= 1, "cross_polytope needs k >= 1");
    std::vector<int> parts(k, 2);
    return complete_multipartite(parts);
}

Graph torus_grid(int p, int q)
{
    require(p >= 4 && q >= 4, "torus_grid needs p, q >= 4");
    std::vector<std::string> labels;
    labels.reserve(p * q);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            labels.push_back(std::to_string(i) + "," + std::to_string(j));
        }
    }
    Graph g(std::move(labels));
    auto at = [q](int i, int j) { return i * q + j; };
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            g.add_edge(at(i, j), at((i + 1) % p, j));
            g.add_edge(at(i, j), at(i, (j + 1) % q));
            g.add_edge(at(i, j), at((i + 1) % p, (j + 1) % q));
        }
    }
    return g;
}

Graph icosahedron()
{
    // 0 = north pole, 1..5 upper ring, 6..10 lower ring, 11 = south pole
    Graph g = Graph::with_order(12);
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i;
        const int up_next = 1 + (i + 1) % 5;
        const int low = 6 + i;
        const int low_next = 6 + (i + 1) % 5;
        g.add_edge(0, up);
        g.add_edge(up, up_next);
        g.add_edge(up, low);
        g.add_edge(up, low_next);
        g.add_edge(low, low_next);
        g.add_edge(11, low);
    }
    return g;
}

Graph generate(std::string_view family, std::span<const int> params)
{
    auto arity = [&](std::size_t k) {
        require(params.size() == k, std::string(family) + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "cycle") {
        arity(1);
        return cycle_graph(params[0]);
    }
    if (family == "path") {
        arity(1);
        return path_graph(params[0]);
    }
    if (family == "complete") {
        arity(1);
        return complete_graph(params[0]);
    }
    if (family == "empty") {
        arity(1);
        return empty_graph(params[0]);
    }
    if (family == "complete_multipartite") {
        return complete_multipartite(params);
    }
    if (family == "cross_polytope") {
        arity(1);
        return cross_polytope(params[0]);
    }
    if (family == "torus_grid") {
        arity(2);
        return torus_grid(params[0], params[1]);
    }
    if (family == "icosahedron") {
        arity(0);
        return icosahedron();
    }
    throw Error("unknown graph family '" + std::string(family) + "'");
}

} // namespace flagrecon
