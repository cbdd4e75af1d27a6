#pragma once

#include "mbook/graph.hpp"

namespace mbook {

using LabelEdge = std::pair<Label, Label>;

LabelEdge make_label_edge(const Label& a, const Label& b);  // canonical (min, max)

// Spine order plus a partition of the edges into pages. Edges are stored as
// canonical label pairs so embeddings survive serialization and relabeling.
struct BookEmbedding {
    std::vector<Label> spine;
    std::vector<std::vector<LabelEdge>> pages;

    int page_count() const { return static_cast<int>(pages.size()); }
};

enum class ViolationKind : std::uint8_t {
    Crossing,
    MatchingViolation,
    MissingEdge,
    DuplicateEdge,
    UnknownVertex,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int page = -1;  // -1 when not tied to a page
    std::vector<LabelEdge> edges;
    std::vector<Label> vertices;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    int page_count = 0;
    std::vector<Violation> violations;

    bool has(ViolationKind k) const;
    std::string summary() const;
};

// True iff the chords (a,b), (c,d) drawn above the spine cross, i.e. exactly
// one of c,d lies strictly between a and b. Edges sharing an endpoint never
// cross.
bool edges_cross(int pos_a, int pos_b, int pos_c, int pos_d);

// Checks that the spine is a permutation of V(g), the pages partition E(g),
// every page is a matching, and no page has a crossing pair. Every violation
// is reported, ordered by (page, kind, edges).
ValidationReport validate(const Graph& g, const BookEmbedding& emb);

// The induced embedding of one copy of an F-sum: keeps vertices pair(x, u)
// with the given copy label u, strips the copy component, keeps page
// structure, and drops trailing empty pages. Throws on an unknown copy label.
BookEmbedding restrict_to_copy(const BookEmbedding& emb, const Label& copy_label);

BookEmbedding reverse_spine(const BookEmbedding& emb);

}  // namespace mbook
