#pragma once

#include "mbook/embedding.hpp"
#include "mbook/graph.hpp"

namespace mbook {

inline constexpr int format_version = 1;

// Canonical JSON document. Labels serialize as a string (plain), as
// {"edge": [a, b]} or as {"pair": [x, u]}.
std::string serialize_graph(const Graph& g);

// Accepts the JSON document or, for untagged graphs, a graph6 line
// (all-Black tags, labels "0".."n-1").
Graph parse_graph(const std::string& text);

Graph parse_graph6_line(const std::string& line);
std::vector<Graph> parse_graph6_lines(const std::string& text);

std::string serialize_embedding(const Graph& g, const BookEmbedding& emb);

struct EmbeddingDocument {
    Graph graph;  // inline copy of the graph the embedding refers to
    BookEmbedding embedding;
};

EmbeddingDocument parse_embedding(const std::string& text);

struct SvgOptions {
    double spacing = 64;
    double margin = 32;
    bool show_labels = true;
};

// Arc diagram: spine as a horizontal line, Black vertices filled and White
// hollow, one stroke color per page, violations (if any) in dashed red.
std::string render_svg(const Graph& g, const BookEmbedding& emb, const SvgOptions& options = {});

}  // namespace mbook
