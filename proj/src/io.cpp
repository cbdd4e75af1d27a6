#include "mbook/io.hpp"

#include <json.hpp>

namespace mbook {

using nlohmann::json;

namespace {

json label_to_json(const Label& l) {
    switch (l.kind()) {
        case Label::Kind::Plain: return l.name();
        case Label::Kind::Edge: return json{{"edge", {label_to_json(l.first()), label_to_json(l.second())}}};
        case Label::Kind::Pair: return json{{"pair", {label_to_json(l.first()), label_to_json(l.second())}}};
    }
    return {};
}

Label label_from_json(const json& j) {
    if (j.is_string()) return Label::plain(j.get<std::string>());
    if (j.is_object() && j.size() == 1) {
        if (j.contains("edge")) {
            const auto& parts = j.at("edge");
            if (parts.is_array() && parts.size() == 2)
                return Label::edge(label_from_json(parts[0]), label_from_json(parts[1]));
        }
        if (j.contains("pair")) {
            const auto& parts = j.at("pair");
            if (parts.is_array() && parts.size() == 2)
                return Label::pair(label_from_json(parts[0]), label_from_json(parts[1]));
        }
    }
    throw std::runtime_error("parse error: bad label " + j.dump());
}

json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back({{"label", label_to_json(g.label(v))},
                            {"tag", g.tag(v) == Tag::Black ? "black" : "white"}});
    }
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({label_to_json(g.label(u)), label_to_json(g.label(v))});
    return json{{"format_version", format_version}, {"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("parse error: graph document is not an object");
    int version = doc.value("format_version", -1);
    if (version != format_version)
        throw std::runtime_error("unknown format_version " + std::to_string(version));

    std::vector<Label> labels;
    std::vector<Tag> tags;
    for (const auto& v : doc.at("vertices")) {
        labels.push_back(label_from_json(v.at("label")));
        const std::string tag = v.value("tag", "black");
        if (tag != "black" && tag != "white")
            throw std::runtime_error("parse error: bad tag " + tag);
        tags.push_back(tag == "black" ? Tag::Black : Tag::White);
    }
    Graph skeleton = Graph::make(labels, tags, {});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("parse error: bad edge " + e.dump());
        edges.emplace_back(skeleton.index_of(label_from_json(e[0])),
                           skeleton.index_of(label_from_json(e[1])));
    }
    return Graph::make(std::move(labels), std::move(tags), std::move(edges));
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

}  // namespace

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

Graph parse_graph(const std::string& text) {
    if (looks_like_json(text)) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw std::runtime_error(std::string("parse error: ") + e.what());
        }
        return graph_from_json(doc);
    }
    // first nonempty line as graph6
    std::string line;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line != "\r") break;
        pos = end + 1;
        line.clear();
    }
    if (line.empty()) throw std::runtime_error("parse error: empty input");
    return parse_graph6_line(line);
}

Graph parse_graph6_line(const std::string& raw) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw std::runtime_error("graph6: empty line");

    size_t at = 0;
    auto need = [&](size_t count) {
        if (at + count > line.size())
            throw std::runtime_error("graph6: truncated at column " + std::to_string(at + 1));
    };
    auto byte = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: bad byte at column " + std::to_string(at + 1));
        ++at;
        return static_cast<int>(c - 63);
    };

    long long n;
    int first = byte();
    if (first < 63) {
        n = first;
    } else {
        need(3);
        long long a = byte(), b = byte(), c = byte();
        if (a == 63) throw std::runtime_error("graph6: vertex count too large");
        n = (a << 12) | (b << 6) | c;
    }
    if (n > 62) throw std::runtime_error("graph6: vertex count beyond supported size");

    std::vector<std::pair<int, int>> edges;
    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = byte();
                bits = 6;
            }
            --bits;
            if (value & (1 << bits)) edges.emplace_back(i, j);
        }
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> graphs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line != "\r" && line.rfind(">>graph6<<", 0) != 0)
            graphs.push_back(parse_graph6_line(line));
        else if (line.rfind(">>graph6<<", 0) == 0 && line.size() > 10)
            graphs.push_back(parse_graph6_line(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return graphs;
}

std::string serialize_embedding(const Graph& g, const BookEmbedding& emb) {
    json pages = json::array();
    for (const auto& page : emb.pages) {
        json edges = json::array();
        for (const auto& [a, b] : page) edges.push_back({label_to_json(a), label_to_json(b)});
        pages.push_back(edges);
    }
    json spine = json::array();
    for (const auto& l : emb.spine) spine.push_back(label_to_json(l));
    json doc{{"format_version", format_version},
             {"graph", graph_to_json(g)},
             {"spine", spine},
             {"pages", pages}};
    return doc.dump(2) + "\n";
}

EmbeddingDocument parse_embedding(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("parse error: ") + e.what());
    }
    int version = doc.value("format_version", -1);
    if (version != format_version)
        throw std::runtime_error("unknown format_version " + std::to_string(version));

    EmbeddingDocument result;
    result.graph = graph_from_json(doc.at("graph"));
    for (const auto& l : doc.at("spine")) result.embedding.spine.push_back(label_from_json(l));
    for (const auto& page : doc.at("pages")) {
        std::vector<LabelEdge> edges;
        for (const auto& e : page) {
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error("parse error: bad page edge " + e.dump());
            edges.push_back(make_label_edge(label_from_json(e[0]), label_from_json(e[1])));
        }
        result.embedding.pages.push_back(std::move(edges));
    }
    return result;
}

}  // namespace mbook
