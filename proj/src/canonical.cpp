#include "flagrecon/graph.hpp"

#include <algorithm>
#include <numeric>

namespace flagrecon {

namespace {

using Coloring = std::vector<int>;

int count_colors(const Coloring& colors)
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Iterated color refinement to an equitable partition. New colors are ranks of
// (old color, sorted neighbor colors) signatures, so the result depends only on
// the input coloring up to isomorphism and keeps the relative order of cells.
Coloring refine(const Graph& g, Coloring colors)
{
    const int n = g.order();
    int classes = -1;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colors[v];
            auto& nb = sig[v].second;
            nb.clear();
            for (Vertex w : g.neighbors(v)) {
                nb.push_back(colors[w]);
            }
            std::sort(nb.begin(), nb.end());
        }
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        Coloring next(n);
        int c = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || sig[order[k]] != sig[order[k - 1]]) {
                ++c;
            }
            next[order[k]] = c;
        }
        const int now = c + 1;
        colors = std::move(next);
        if (now == classes) {
            return colors;
        }
        classes = now;
    }
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<int> parent_;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    CanonicalLabeling run()
    {
        VertexSet prefix;
        search(Coloring(g_.order(), 0), prefix);
        return {best_form_, best_ordering_};
    }

private:
    static constexpr int keep_going = -1;

    // Returns keep_going, or the depth of the node to resume at when a leaf
    // turned out equivalent to an earlier one.
    int search(Coloring colors, VertexSet& prefix)
    {
        colors = refine(g_, std::move(colors));
        const int n = g_.order();
        const int k = count_colors(colors);
        if (k == n) {
            return leaf(colors, prefix);
        }
        const int depth = static_cast<int>(prefix.size());

        // target cell: first smallest non-singleton cell
        std::vector<int> cell_size(k, 0);
        for (int c : colors) {
            ++cell_size[c];
        }
        int target = -1;
        for (int c = 0; c < k; ++c) {
            if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) {
                target = c;
            }
        }

        // a cell of twins: every permutation of it is an automorphism, one child suffices
        const bool twins = interchangeable(colors, cell_size, target);

        VertexSet explored;
        for (Vertex w = 0; w < n; ++w) {
            if (colors[w] != target) {
                continue;
            }
            if (!explored.empty() && in_explored_orbit(prefix, explored, w)) {
                continue;
            }
            Coloring child(n);
            for (Vertex v = 0; v < n; ++v) {
                child[v] = 2 * colors[v] + ((colors[v] == target && v != w) ? 1 : 0);
            }
            prefix.push_back(w);
            const int resume = search(std::move(child), prefix);
            prefix.pop_back();
            if (resume != keep_going && resume < depth) {
                return resume;
            }
            if (twins) {
                break;
            }
            explored.push_back(w);
        }
        return keep_going;
    }

    // In an equitable coloring, the target cell is a set of twins when it is a
    // clique or independent set and is joined completely or not at all to
    // every other cell.
    bool interchangeable(const Coloring& colors, const std::vector<int>& cell_size, int target) const
    {
        const Vertex r = static_cast<Vertex>(std::find(colors.begin(), colors.end(), target) - colors.begin());
        std::vector<int> hits(cell_size.size(), 0);
        for (Vertex w : g_.neighbors(r)) {
            ++hits[colors[w]];
        }
        for (std::size_t c = 0; c < cell_size.size(); ++c) {
            const int full = static_cast<int>(c) == target ? cell_size[c] - 1 : cell_size[c];
            if (hits[c] != 0 && hits[c] != full) {
                return false;
            }
        }
        return true;
    }

    static int common_prefix(const VertexSet& a, const VertexSet& b)
    {
        const auto stop = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        return static_cast<int>(stop.first - a.begin());
    }

    // Orbits of the group generated by found automorphisms that fix the prefix pointwise.
    bool in_explored_orbit(const VertexSet& prefix, const VertexSet& explored, Vertex w) const
    {
        UnionFind uf(g_.order());
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) {
                continue;
            }
            for (Vertex v = 0; v < g_.order(); ++v) {
                uf.unite(v, gamma[v]);
            }
        }
        const int root = uf.find(w);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return uf.find(e) == root; });
    }

    int leaf(const Coloring& colors, const VertexSet& path)
    {
        VertexSet ordering(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) {
            ordering[colors[v]] = v;
        }
        CanonicalForm form = form_under_ordering(g_, ordering);
        if (!have_best_) {
            have_best_ = true;
            first_form_ = form;
            first_ordering_ = ordering;
            first_path_ = path;
            best_form_ = std::move(form);
            best_ordering_ = std::move(ordering);
            best_path_ = path;
            return keep_going;
        }
        if (form == first_form_) {
            record_automorphism(first_ordering_, ordering);
            return common_prefix(path, first_path_);
        }
        if (form == best_form_) {
            record_automorphism(best_ordering_, ordering);
            return common_prefix(path, best_path_);
        }
        if (best_form_ < form) {
            best_form_ = std::move(form);
            best_ordering_ = std::move(ordering);
            best_path_ = path;
        }
        return keep_going;
    }

    void record_automorphism(const VertexSet& from, const VertexSet& to)
    {
        VertexSet gamma(g_.order());
        for (int k = 0; k < g_.order(); ++k) {
            gamma[from[k]] = to[k];
        }
        automorphisms_.push_back(std::move(gamma));
    }

    const Graph& g_;
    bool have_best_ = false;
    CanonicalForm first_form_;
    VertexSet first_ordering_;
    VertexSet first_path_;
    CanonicalForm best_form_;
    VertexSet best_ordering_;
    VertexSet best_path_;
    std::vector<VertexSet> automorphisms_;
};

} // namespace

CanonicalForm form_under_ordering(const Graph& g, std::span<const Vertex> ordering)
{
    const int n = g.order();
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint8_t> bytes((bits + 7) / 8, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(ordering[i], ordering[j])) {
                bytes[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
            }
        }
    }
    return CanonicalForm(n, std::move(bytes));
}

Graph CanonicalForm::to_graph() const
{
    Graph g = Graph::with_order(order_);
    std::size_t bit = 0;
    for (int j = 1; j < order_; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bytes_[bit / 8] & (0x80u >> (bit % 8))) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.order() == 0) {
        return {CanonicalForm(0, {}), {}};
    }
    return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

} // namespace flagrecon
