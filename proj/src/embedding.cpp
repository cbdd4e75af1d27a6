#include "mbook/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mbook {

LabelEdge make_label_edge(const Label& a, const Label& b) {
    return b < a ? LabelEdge{b, a} : LabelEdge{a, b};
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Crossing: return "crossing";
        case ViolationKind::MatchingViolation: return "matching-violation";
        case ViolationKind::MissingEdge: return "missing-edge";
        case ViolationKind::DuplicateEdge: return "duplicate-edge";
        case ViolationKind::UnknownVertex: return "unknown-vertex";
    }
    return "?";
}

bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    if (ok) {
        out << "ok: " << page_count << " page(s)";
        return out.str();
    }
    out << "invalid: " << violations.size() << " violation(s)";
    for (const auto& v : violations) {
        out << "\n  " << to_string(v.kind);
        if (v.page >= 0) out << " on page " << (v.page + 1);
        for (const auto& [a, b] : v.edges) out << " {" << a.str() << "," << b.str() << "}";
        for (const auto& l : v.vertices) out << " " << l.str();
        if (!v.detail.empty()) out << " (" << v.detail << ")";
    }
    return out.str();
}

bool edges_cross(int pos_a, int pos_b, int pos_c, int pos_d) {
    if (pos_a == pos_c || pos_a == pos_d || pos_b == pos_c || pos_b == pos_d) return false;
    if (pos_a > pos_b) std::swap(pos_a, pos_b);
    bool c_in = pos_a < pos_c && pos_c < pos_b;
    bool d_in = pos_a < pos_d && pos_d < pos_b;
    return c_in != d_in;
}

ValidationReport validate(const Graph& g, const BookEmbedding& emb) {
    ValidationReport report;
    report.page_count = emb.page_count();
    auto& out = report.violations;

    // spine must be a permutation of V(g)
    std::map<Label, int> position;
    bool spine_ok = true;
    for (int i = 0; i < static_cast<int>(emb.spine.size()); ++i) {
        const Label& l = emb.spine[i];
        if (!g.find(l)) {
            out.push_back({ViolationKind::UnknownVertex, -1, {}, {l}, "spine label not in graph"});
            spine_ok = false;
        } else if (!position.emplace(l, i).second) {
            out.push_back({ViolationKind::UnknownVertex, -1, {}, {l}, "label repeated on spine"});
            spine_ok = false;
        }
    }
    for (const Label& l : g.labels()) {
        if (!position.count(l)) {
            out.push_back({ViolationKind::UnknownVertex, -1, {}, {l}, "vertex missing from spine"});
            spine_ok = false;
        }
    }

    // pages must partition E(g)
    std::map<LabelEdge, int> seen;  // edge -> first page
    std::set<LabelEdge> graph_edges;
    for (auto [u, v] : g.edges()) graph_edges.insert(make_label_edge(g.label(u), g.label(v)));

    for (int p = 0; p < emb.page_count(); ++p) {
        for (const auto& raw : emb.pages[p]) {
            LabelEdge e = make_label_edge(raw.first, raw.second);
            if (!g.find(e.first) || !g.find(e.second)) {
                out.push_back({ViolationKind::UnknownVertex, p, {e}, {}, "edge endpoint not in graph"});
                continue;
            }
            if (!graph_edges.count(e)) {
                out.push_back({ViolationKind::UnknownVertex, p, {e}, {}, "edge not in graph"});
                continue;
            }
            auto [it, inserted] = seen.emplace(e, p);
            if (!inserted)
                out.push_back({ViolationKind::DuplicateEdge, p, {e}, {},
                               "already on page " + std::to_string(it->second + 1)});
        }
    }
    for (const auto& e : graph_edges)
        if (!seen.count(e))
            out.push_back({ViolationKind::MissingEdge, -1, {e}, {}, "edge on no page"});

    // per-page matching and crossing checks need valid positions
    if (spine_ok) {
        for (int p = 0; p < emb.page_count(); ++p) {
            std::map<Label, std::vector<LabelEdge>> at_vertex;
            std::vector<LabelEdge> page_edges;
            for (const auto& raw : emb.pages[p]) {
                LabelEdge e = make_label_edge(raw.first, raw.second);
                if (!graph_edges.count(e)) continue;
                page_edges.push_back(e);
                at_vertex[e.first].push_back(e);
                at_vertex[e.second].push_back(e);
            }
            for (auto& [vertex, edges] : at_vertex) {
                if (edges.size() > 1)
                    out.push_back({ViolationKind::MatchingViolation, p, edges, {vertex}, ""});
            }
            std::sort(page_edges.begin(), page_edges.end());
            for (size_t i = 0; i < page_edges.size(); ++i) {
                for (size_t j = i + 1; j < page_edges.size(); ++j) {
                    const auto& e = page_edges[i];
                    const auto& f = page_edges[j];
                    if (edges_cross(position[e.first], position[e.second],
                                    position[f.first], position[f.second]))
                        out.push_back({ViolationKind::Crossing, p, {e, f}, {}, ""});
                }
            }
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        if (a.page != b.page) return a.page < b.page;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.edges < b.edges;
    });
    report.ok = out.empty();
    return report;
}

BookEmbedding restrict_to_copy(const BookEmbedding& emb, const Label& copy_label) {
    BookEmbedding result;
    auto in_copy = [&](const Label& l) { return l.is_pair() && l.second() == copy_label; };
    for (const Label& l : emb.spine)
        if (in_copy(l)) result.spine.push_back(l.first());
    if (result.spine.empty())
        throw std::invalid_argument("restrict_to_copy: no vertex has copy label " +
                                    copy_label.str());
    for (const auto& page : emb.pages) {
        std::vector<LabelEdge> kept;
        for (const auto& [a, b] : page)
            if (in_copy(a) && in_copy(b))
                kept.push_back(make_label_edge(a.first(), b.first()));
        result.pages.push_back(std::move(kept));
    }
    while (!result.pages.empty() && result.pages.back().empty()) result.pages.pop_back();
    return result;
}

BookEmbedding reverse_spine(const BookEmbedding& emb) {
    BookEmbedding r = emb;
    std::reverse(r.spine.begin(), r.spine.end());
    return r;
}

}  // namespace mbook
