#include "mbook/transforms.hpp"

namespace mbook {

const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::S: return "S";
        case TransformKind::R: return "R";
        case TransformKind::Q: return "Q";
        case TransformKind::T: return "T";
    }
    return "?";
}

TransformKind transform_kind_from_string(const std::string& s) {
    if (s == "S") return TransformKind::S;
    if (s == "R") return TransformKind::R;
    if (s == "Q") return TransformKind::Q;
    if (s == "T") return TransformKind::T;
    throw std::invalid_argument("unknown transform kind: " + s);
}

Graph transform(const Graph& g, TransformKind kind) {
    if (g.vertex_count() == 0) throw std::invalid_argument("transform: empty input");
    if (!is_connected(g)) throw std::invalid_argument("transform: input must be connected");

    const int n = g.vertex_count();
    const int m = g.edge_count();

    std::vector<Label> labels;
    std::vector<Tag> tags;
    labels.reserve(n + m);
    for (int v = 0; v < n; ++v) {
        labels.push_back(g.label(v));
        tags.push_back(Tag::Black);
    }
    for (auto [u, v] : g.edges()) {
        labels.push_back(Label::edge(g.label(u), g.label(v)));
        tags.push_back(Tag::White);
    }
    auto edge_vertex = [&](int e) { return n + e; };

    std::vector<std::pair<int, int>> edges;
    const bool keep_original = kind == TransformKind::R || kind == TransformKind::T;
    const bool incidence = true;  // all four operations join the edge vertex to its ends
    const bool line_edges = kind == TransformKind::Q || kind == TransformKind::T;

    if (keep_original)
        for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
    if (incidence) {
        for (int e = 0; e < m; ++e) {
            edges.emplace_back(g.edges()[e].first, edge_vertex(e));
            edges.emplace_back(g.edges()[e].second, edge_vertex(e));
        }
    }
    if (line_edges) {
        for (int e = 0; e < m; ++e) {
            for (int f = e + 1; f < m; ++f) {
                auto [a, b] = g.edges()[e];
                auto [c, d] = g.edges()[f];
                if (a == c || a == d || b == c || b == d)
                    edges.emplace_back(edge_vertex(e), edge_vertex(f));
            }
        }
    }
    return Graph::make(std::move(labels), std::move(tags), std::move(edges));
}

}  // namespace mbook
