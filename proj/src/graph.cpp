#include "mbook/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace mbook {

Label Label::plain(std::string name) {
    Label l;
    l.kind_ = Kind::Plain;
    l.name_ = std::move(name);
    return l;
}

Label Label::edge(const Label& a, const Label& b) {
    Label l;
    l.kind_ = Kind::Edge;
    if (b < a) {
        l.a_ = std::make_shared<Label>(b);
        l.b_ = std::make_shared<Label>(a);
    } else {
        l.a_ = std::make_shared<Label>(a);
        l.b_ = std::make_shared<Label>(b);
    }
    return l;
}

Label Label::pair(const Label& graph_side, const Label& copy_side) {
    Label l;
    l.kind_ = Kind::Pair;
    l.a_ = std::make_shared<Label>(graph_side);
    l.b_ = std::make_shared<Label>(copy_side);
    return l;
}

const std::string& Label::name() const {
    if (kind_ != Kind::Plain) throw std::logic_error("Label::name on non-plain label");
    return name_;
}

const Label& Label::first() const {
    if (!a_) throw std::logic_error("Label::first on plain label");
    return *a_;
}

const Label& Label::second() const {
    if (!b_) throw std::logic_error("Label::second on plain label");
    return *b_;
}

std::string Label::str() const {
    switch (kind_) {
        case Kind::Plain: return name_;
        case Kind::Edge: return "[" + a_->str() + "," + b_->str() + "]";
        case Kind::Pair: return "(" + a_->str() + "|" + b_->str() + ")";
    }
    return {};
}

bool Label::operator==(const Label& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == Kind::Plain) return name_ == other.name_;
    return *a_ == *other.a_ && *b_ == *other.b_;
}

std::strong_ordering Label::operator<=>(const Label& other) const {
    if (auto c = kind_ <=> other.kind_; c != 0) return c;
    if (kind_ == Kind::Plain) return name_ <=> other.name_;
    if (auto c = *a_ <=> *other.a_; c != 0) return c;
    return *b_ <=> *other.b_;
}

Graph Graph::make(std::vector<Label> labels, std::vector<Tag> tags,
                  std::vector<std::pair<int, int>> edges) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(tags.size()) != n)
        throw std::invalid_argument("tags must match vertex count");

    {
        std::set<Label> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate vertex label: " + l.str());
    }

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.labels_ = std::move(labels);
    g.tags_ = std::move(tags);
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::optional<int> Graph::find(const Label& l) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == l) return i;
    return std::nullopt;
}

int Graph::index_of(const Label& l) const {
    if (auto i = find(l)) return *i;
    throw std::invalid_argument("unknown vertex label: " + l.str());
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<Label> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    return Graph::make(std::move(labels), std::vector<Tag>(n, Tag::Black), std::move(edges));
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degree.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) p.degree[v] = g.degree(v);
    p.max_degree = p.degree.empty() ? 0 : *std::max_element(p.degree.begin(), p.degree.end());
    p.regular = std::all_of(p.degree.begin(), p.degree.end(),
                            [&](int d) { return d == p.max_degree; });
    return p;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(std::move(labels), std::vector<Tag>(n, Tag::Black), std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::make(std::move(labels), std::vector<Tag>(n, Tag::Black), std::move(edges));
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    return Graph::make(std::move(labels), std::vector<Tag>(n + 1, Tag::Black), std::move(edges));
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    if (n < 2) throw std::invalid_argument("circulant needs n >= 2");
    std::set<int> uniq;
    for (int s : offsets) {
        if (s < 1 || 2 * s > n)
            throw std::invalid_argument("circulant offset must satisfy 1 <= s <= n/2");
        uniq.insert(s);
    }
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int s : uniq) {
            int j = (i + s) % n;
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    return Graph::make(std::move(labels), std::vector<Tag>(n, Tag::Black),
                       {edges.begin(), edges.end()});
}

Graph generate(GraphKind kind, int n, const std::vector<int>& offsets) {
    switch (kind) {
        case GraphKind::Path: return path_graph(n);
        case GraphKind::Cycle: return cycle_graph(n);
        case GraphKind::Star: return star_graph(n);
        case GraphKind::Circulant: return circulant_graph(n, offsets);
    }
    throw std::invalid_argument("unknown graph kind");
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adjacency()[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;  // least-index vertex of the component is Red
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adjacency()[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<std::vector<int>> odd_closed_walk(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adjacency()[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // walk root..u, edge uv, then v..root: odd total length
                    std::vector<int> up, down;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) down.push_back(x);
                    std::reverse(up.begin(), up.end());  // root .. u
                    up.insert(up.end(), down.begin(), down.end());  // + v .. root
                    return up;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Label> labels;
    std::vector<Tag> tags;
    labels.reserve(static_cast<size_t>(n1) * n2);
    for (int u = 0; u < n2; ++u) {
        for (int x = 0; x < n1; ++x) {
            labels.push_back(Label::pair(g1.label(x), g2.label(u)));
            tags.push_back(g1.tag(x));
        }
    }
    auto id = [&](int x, int u) { return u * n1 + x; };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n2; ++u)
        for (auto [x, y] : g1.edges()) edges.emplace_back(id(x, u), id(y, u));
    for (auto [u, v] : g2.edges())
        for (int x = 0; x < n1; ++x) edges.emplace_back(id(x, u), id(x, v));
    return Graph::make(std::move(labels), std::move(tags), std::move(edges));
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<char>& used, int next) {
    const int n = a.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        if (iso_extend(a, b, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& g1, const Graph& g2, int vertex_cap) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return false;
    const int n = g1.vertex_count();
    if (n > vertex_cap)
        throw budget_error("isomorphic: vertex count exceeds cap of " +
                           std::to_string(vertex_cap));
    auto degs = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g1) != degs(g2)) return false;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    return iso_extend(g1, g2, map, used, 0);
}

namespace {

// Two chords of the printing cycle cross iff their endpoints interleave in
// the cyclic order; with all placed positions forming a prefix, interleaving
// is already decided once all four endpoints are placed.
bool chords_interleave(int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;  // shared endpoint
    if (a > b) std::swap(a, b);
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
}

struct OuterSearch {
    const Graph& g;
    std::vector<int> order;     // position -> vertex
    std::vector<int> pos;       // vertex -> position, -1 if unplaced
    std::vector<std::pair<int, int>> placed_edges;

    explicit OuterSearch(const Graph& graph)
        : g(graph), pos(graph.vertex_count(), -1) {}

    bool place(int depth) {
        const int n = g.vertex_count();
        if (depth == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            if (depth == 0 && v != 0) break;  // rotation: pin vertex 0 first
            pos[v] = depth;
            order.push_back(v);
            size_t added = 0;
            bool ok = true;
            for (int w : g.adjacency()[v]) {
                if (pos[w] == -1) continue;
                auto e = std::make_pair(std::min(pos[v], pos[w]), std::max(pos[v], pos[w]));
                for (const auto& f : placed_edges) {
                    if (chords_interleave(e.first, e.second, f.first, f.second)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                placed_edges.push_back(e);
                ++added;
            }
            if (ok && place(depth + 1)) return true;
            placed_edges.resize(placed_edges.size() - added);
            order.pop_back();
            pos[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> outerplanar_order(const Graph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw budget_error("outerplanar_order: vertex count exceeds cap of " +
                           std::to_string(vertex_cap));
    if (n <= 2 || g.edge_count() == 0) {
        std::vector<int> trivial(n);
        std::iota(trivial.begin(), trivial.end(), 0);
        return trivial;
    }
    // outerplanar graphs have at most 2n-3 edges
    if (g.edge_count() > 2 * n - 3) return std::nullopt;
    OuterSearch search(g);
    if (search.place(0)) return search.order;
    return std::nullopt;
}

}  // namespace mbook
