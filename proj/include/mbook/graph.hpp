#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbook {

// Thrown when a search exceeds its node budget. For page searches the
// best-known bracket [lo, hi] is attached when available (-1 = unknown).
struct budget_error : std::runtime_error {
    long long lo = -1;
    long long hi = -1;
    explicit budget_error(const std::string& what, long long lo_ = -1, long long hi_ = -1)
        : std::runtime_error(what), lo(lo_), hi(hi_) {}
};

enum class Tag : std::uint8_t { Black, White };

// Structured vertex identity. Three shapes:
//   plain(name)   - an original vertex
//   edge(a, b)    - a vertex standing for the edge ab (stored with a <= b)
//   pair(x, u)    - a product/sum vertex: x on the graph side, u on the copy side
class Label {
public:
    enum class Kind : std::uint8_t { Plain, Edge, Pair };

    Label() : kind_(Kind::Plain) {}

    static Label plain(std::string name);
    static Label edge(const Label& a, const Label& b);
    static Label pair(const Label& graph_side, const Label& copy_side);

    Kind kind() const { return kind_; }
    bool is_plain() const { return kind_ == Kind::Plain; }
    bool is_edge() const { return kind_ == Kind::Edge; }
    bool is_pair() const { return kind_ == Kind::Pair; }

    // Plain only.
    const std::string& name() const;
    // Edge/Pair only.
    const Label& first() const;
    const Label& second() const;

    // Canonical text form: name, [a,b], (x|u).
    std::string str() const;

    bool operator==(const Label& other) const;
    bool operator!=(const Label& other) const { return !(*this == other); }
    std::strong_ordering operator<=>(const Label& other) const;

private:
    Kind kind_;
    std::string name_;
    std::shared_ptr<const Label> a_, b_;
};

// Simple undirected graph with per-vertex Black/White tags and stable labels.
// Edges are stored canonically (u < v, sorted); no loops, no duplicates.
class Graph {
public:
    Graph() = default;

    static Graph make(std::vector<Label> labels, std::vector<Tag> tags,
                      std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Label>& labels() const { return labels_; }
    const std::vector<Tag>& tags() const { return tags_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    const Label& label(int v) const { return labels_.at(v); }
    Tag tag(int v) const { return tags_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const;
    std::optional<int> find(const Label& l) const;
    int index_of(const Label& l) const;  // throws if unknown

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && tags_ == other.tags_ && edges_ == other.edges_;
    }

private:
    std::vector<Label> labels_;
    std::vector<Tag> tags_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Convenience: n vertices labelled "0".."n-1", all Black.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct DegreeProfile {
    std::vector<int> degree;
    int max_degree = 0;
    bool regular = false;
};

DegreeProfile degree_profile(const Graph& g);

// Generators. Paths and cycles are labelled "1".."n", stars "0" (center)
// plus "1".."n", circulants "0".."n-1". All vertices Black.
Graph path_graph(int n);                                 // n >= 1
Graph cycle_graph(int n);                                // n >= 3
Graph star_graph(int n);                                 // n >= 1 leaves
Graph circulant_graph(int n, const std::vector<int>& offsets);  // 1 <= s <= n/2

enum class GraphKind { Path, Cycle, Star, Circulant };
Graph generate(GraphKind kind, int n, const std::vector<int>& offsets = {});

bool is_connected(const Graph& g);

// Proper 2-coloring per component (0 = Red for the least-index vertex),
// or nullopt iff some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

// An odd closed walk as a vertex sequence (front == back), present iff the
// graph is non-bipartite.
std::optional<std::vector<int>> odd_closed_walk(const Graph& g);

// Connected, 2-regular, odd vertex count.
bool is_odd_cycle(const Graph& g);

// Vertices pair(x, u), x from g1, u from g2, indexed u-major (copies of g1
// ordered by g2 vertex); tags inherited from the g1 side.
Graph cartesian_product(const Graph& g1, const Graph& g2);

// Edge-preserving bijection test, tags ignored. Backtracking with
// degree-sequence pruning; intended for small instances.
bool isomorphic(const Graph& g1, const Graph& g2, int vertex_cap = 16);

// A vertex order under which every edge can be drawn as a chord of the
// printing cycle without crossings (equivalently a one-page book embedding
// ignoring the matching rule). nullopt iff the graph is not outerplanar.
std::optional<std::vector<int>> outerplanar_order(const Graph& g, int vertex_cap = 12);

}  // namespace mbook
