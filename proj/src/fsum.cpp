#include "mbook/fsum.hpp"

namespace mbook {

Graph f_sum(const Graph& g1, const Graph& g2, TransformKind kind) {
    const Graph fg = transform(g1, kind);
    const int nf = fg.vertex_count(), n2 = g2.vertex_count();

    std::vector<Label> labels;
    std::vector<Tag> tags;
    labels.reserve(static_cast<size_t>(nf) * n2);
    for (int u = 0; u < n2; ++u) {
        for (int x = 0; x < nf; ++x) {
            labels.push_back(Label::pair(fg.label(x), g2.label(u)));
            tags.push_back(fg.tag(x));
        }
    }
    auto id = [&](int x, int u) { return u * nf + x; };

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n2; ++u)
        for (auto [x, y] : fg.edges()) edges.emplace_back(id(x, u), id(y, u));
    for (auto [u, v] : g2.edges())
        for (int x = 0; x < nf; ++x)
            if (fg.tag(x) == Tag::Black) edges.emplace_back(id(x, u), id(x, v));
    return Graph::make(std::move(labels), std::move(tags), std::move(edges));
}

Graph f_sum_via_product(const Graph& g1, const Graph& g2, TransformKind kind) {
    const Graph fg = transform(g1, kind);
    const Graph prod = cartesian_product(fg, g2);

    // drop E*: inter-copy edges whose shared graph-side vertex is White
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : prod.edges()) {
        const Label& la = prod.label(a);
        const Label& lb = prod.label(b);
        if (la.first() == lb.first() && prod.tag(a) == Tag::White) continue;
        edges.emplace_back(a, b);
    }
    return Graph::make(prod.labels(), prod.tags(), std::move(edges));
}

}  // namespace mbook
