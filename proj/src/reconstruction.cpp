#include "flagrecon/reconstruction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace flagrecon {

const char* const no_certificate_caveat =
    "no certificate applies; this does not assert that the graph is non-reconstructible";

int Deck::size() const
{
    int total = 0;
    for (const auto& [_, m] : cards) {
        total += m;
    }
    return total;
}

Deck deck(const Graph& g)
{
    if (g.order() == 0) {
        throw Error("deck of the empty graph");
    }
    Deck d;
    for (Vertex v = 0; v < g.order(); ++v) {
        CanonicalForm form = canonical_form(vertex_deleted(g, v));
        ++d.cards[form];
        d.matching.emplace_back(g.label(v), std::move(form));
    }
    return d;
}

std::optional<VertexSet> are_hypomorphic(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order()) {
        return std::nullopt;
    }
    if (g1.order() == 0) {
        return VertexSet{};
    }
    auto sorted_cards = [](const Graph& g) {
        std::vector<std::pair<CanonicalForm, Vertex>> cards;
        for (Vertex v = 0; v < g.order(); ++v) {
            cards.emplace_back(canonical_form(vertex_deleted(g, v)), v);
        }
        std::sort(cards.begin(), cards.end());
        return cards;
    };
    const auto a = sorted_cards(g1);
    const auto b = sorted_cards(g2);
    VertexSet f(g1.order());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) {
            return std::nullopt;
        }
        f[a[i].second] = b[i].second;
    }
    return f;
}

std::string to_string(CertificatePath path)
{
    switch (path) {
    case CertificatePath::homology_manifold:
        return "homology_manifold";
    case CertificatePath::virtual_poincare_duality:
        return "virtual_poincare_duality";
    case CertificatePath::none:
        break;
    }
    return "none";
}

Certificate certify_reconstructible(const Graph& g, std::optional<int> max_dimension)
{
    if (g.order() < 3) {
        throw Error("certificates need at least 3 vertices");
    }
    const NerveSystem ns(g, max_dimension);
    const int n = detect_dimension(ns.nerve());

    Certificate cert;
    if (n >= 1) {
        cert.manifold = is_homology_manifold(ns.nerve(), n);
    }
    cert.duality = is_virtual_pd(ns);

    if (cert.manifold && cert.manifold->is_manifold) {
        cert.path = CertificatePath::homology_manifold;
        cert.dimension = n;
    } else if (cert.duality.is_vpd && cert.duality.dimension >= 1) {
        cert.path = CertificatePath::virtual_poincare_duality;
        cert.dimension = cert.duality.dimension;
    } else {
        cert.caveat = no_certificate_caveat;
    }
    return cert;
}

Graph reconstruct_from_card(const Graph& card, int n)
{
    if (n < 1) {
        throw Error("reconstruction needs manifold dimension n >= 1");
    }
    const VertexSet boundary = boundary_of(clique_complex(card), n);

    std::string fresh = "*";
    while (card.find(fresh)) {
        fresh += '*';
    }
    std::vector<std::string> labels = card.labels();
    labels.push_back(fresh);
    std::vector<Edge> edges = card.edges();
    for (Vertex v : boundary) {
        edges.emplace_back(v, card.order());
    }
    return Graph(std::move(labels), edges);
}

std::vector<Graph> enumerate_graphs(int n)
{
    if (n < 1 || n > 7) {
        throw Error("enumerate_graphs supports 1 <= n <= 7");
    }
    std::set<CanonicalForm> level{canonical_form(Graph::with_order(1))};
    for (int order = 2; order <= n; ++order) {
        std::set<CanonicalForm> next;
        const int fresh = order - 1;
        for (const auto& form : level) {
            const Graph base = form.to_graph();
            for (unsigned mask = 0; mask < (1u << fresh); ++mask) {
                Graph g = Graph::with_order(order, base.edges());
                for (int v = 0; v < fresh; ++v) {
                    if (mask & (1u << v)) {
                        g.add_edge(v, fresh);
                    }
                }
                next.insert(canonical_form(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& form : level) {
        out.push_back(form.to_graph());
    }
    return out;
}

std::vector<std::vector<Graph>> hypomorphic_groups(std::span<const Graph> graphs)
{
    std::set<CanonicalForm> seen;
    std::map<std::map<CanonicalForm, int>, std::vector<Graph>> by_deck;
    for (const auto& g : graphs) {
        if (!seen.insert(canonical_form(g)).second) {
            throw Error("input contains two isomorphic graphs");
        }
        by_deck[deck(g).cards].push_back(g);
    }
    std::vector<std::vector<Graph>> groups;
    for (auto& [_, members] : by_deck) {
        if (members.size() >= 2) {
            groups.push_back(std::move(members));
        }
    }
    return groups;
}

} // namespace flagrecon
