#include "flagrecon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace flagrecon {

namespace {

void require_unique(const std::vector<std::string>& labels)
{
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw Error("duplicate vertex label '" + l + "'");
        }
    }
}

} // namespace

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels))
{
    require_unique(labels_);
    matrix_.assign(labels_.size() * labels_.size(), 0);
    neighbors_.resize(labels_.size());
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : Graph(std::move(labels))
{
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

Graph Graph::with_order(int n, std::span<const Edge> edges)
{
    if (n < 0) {
        throw Error("negative vertex count");
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return Graph(std::move(labels), edges);
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order()) {
        throw Error("vertex index " + std::to_string(v) + " out of range");
    }
}

std::optional<Vertex> Graph::find(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::vertex(std::string_view label) const
{
    auto v = find(label);
    if (!v) {
        throw Error("unknown vertex '" + std::string(label) + "'");
    }
    return *v;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw Error("self-loop at vertex '" + labels_[u] + "'");
    }
    if (adjacent(u, v)) {
        return;
    }
    matrix_[index(u, v)] = 1;
    matrix_[index(v, u)] = 1;
    neighbors_[u].insert(std::lower_bound(neighbors_[u].begin(), neighbors_[u].end(), v), v);
    neighbors_[v].insert(std::lower_bound(neighbors_[v].begin(), neighbors_[v].end(), u), u);
    ++edge_count_;
}

Graph full_subgraph(const Graph& g, std::span<const Vertex> subset)
{
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (Vertex v : subset) {
        if (v < 0 || v >= g.order()) {
            throw Error("vertex index " + std::to_string(v) + " not in graph");
        }
        labels.push_back(g.label(v));
    }
    Graph h(std::move(labels));
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            if (g.adjacent(subset[i], subset[j])) {
                h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return h;
}

Graph full_subgraph(const Graph& g, std::span<const std::string> labels)
{
    VertexSet subset;
    subset.reserve(labels.size());
    for (const auto& l : labels) {
        subset.push_back(g.vertex(l));
    }
    return full_subgraph(g, subset);
}

Graph complement(const Graph& g)
{
    Graph h(g.labels());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                h.add_edge(u, v);
            }
        }
    }
    return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    std::vector<std::string> labels = g1.labels();
    labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
    std::unordered_set<std::string_view> left(g1.labels().begin(), g1.labels().end());
    for (const auto& l : g2.labels()) {
        if (left.contains(l)) {
            throw Error("label collision on '" + l + "'");
        }
    }
    Graph h(std::move(labels));
    for (auto [u, v] : g1.edges()) {
        h.add_edge(u, v);
    }
    const int shift = g1.order();
    for (auto [u, v] : g2.edges()) {
        h.add_edge(u + shift, v + shift);
    }
    return h;
}

Graph join(const Graph& g1, const Graph& g2)
{
    Graph h = disjoint_union(g1, g2);
    for (Vertex u = 0; u < g1.order(); ++u) {
        for (Vertex v = 0; v < g2.order(); ++v) {
            h.add_edge(u, g1.order() + v);
        }
    }
    return h;
}

Graph vertex_deleted(const Graph& g, Vertex s)
{
    if (s < 0 || s >= g.order()) {
        throw Error("vertex index " + std::to_string(s) + " not in graph");
    }
    VertexSet rest;
    rest.reserve(g.order() - 1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v != s) {
            rest.push_back(v);
        }
    }
    return full_subgraph(g, rest);
}

Graph vertex_deleted(const Graph& g, std::string_view label)
{
    return vertex_deleted(g, g.vertex(label));
}

Graph relabeled(const Graph& g, std::vector<std::string> labels)
{
    if (static_cast<int>(labels.size()) != g.order()) {
        throw Error("relabeling has wrong size");
    }
    auto edges = g.edges();
    return Graph(std::move(labels), edges);
}

Graph permuted(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.order()) {
        throw Error("permutation has wrong size");
    }
    Graph h = Graph::with_order(g.order());
    for (auto [u, v] : g.edges()) {
        h.add_edge(perm[u], perm[v]);
    }
    return h;
}

bool is_clique(const Graph& g, std::span<const Vertex> subset)
{
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            if (!g.adjacent(subset[i], subset[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<int> comp(g.order(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) {
            continue;
        }
        VertexSet members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (Vertex w : g.neighbors(members[head])) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace flagrecon
