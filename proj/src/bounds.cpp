#include "mbook/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace mbook {

bool EdgeColoring::proper(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.edge_count()) return false;
    for (const auto& [e, c] : colors) {
        if (c < 0 || c >= color_count) return false;
        if (!g.has_edge(e.first, e.second)) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> seen;
        for (int w : g.adjacency()[v]) {
            auto it = colors.find({std::min(v, w), std::max(v, w)});
            if (it == colors.end()) return false;
            seen.push_back(it->second);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

const char* to_string(BoundReason r) {
    switch (r) {
        case BoundReason::MaxDegree: return "max-degree";
        case BoundReason::ChromaticIndex: return "chromatic-index";
        case BoundReason::RegularNonBipartite: return "regular-non-bipartite";
        case BoundReason::CirculantEvenEven: return "circulant-even-even";
    }
    return "?";
}

const char* to_string(Dispersability d) {
    switch (d) {
        case Dispersability::Dispersable: return "dispersable";
        case Dispersability::NearlyDispersable: return "nearly-dispersable";
        case Dispersability::Other: return "other";
    }
    return "?";
}

namespace {

struct ColoringSearch {
    const Graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    std::vector<std::pair<int, int>> order;  // edges, most constrained first
    std::vector<int> assigned;               // per order index, -1 = none
    std::vector<std::vector<char>> vertex_used;  // vertex x color

    ColoringSearch(const Graph& graph, int colors, long long node_budget)
        : g(graph), k(colors), budget(node_budget) {
        order = g.edges();
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
            int da = g.degree(a.first) + g.degree(a.second);
            int db = g.degree(b.first) + g.degree(b.second);
            if (da != db) return da > db;
            return a < b;
        });
        assigned.assign(order.size(), -1);
        vertex_used.assign(g.vertex_count(), std::vector<char>(k, 0));
    }

    bool extend(size_t i) {
        if (i == order.size()) return true;
        auto [u, v] = order[i];
        const int limit = i == 0 ? 1 : k;  // first edge pinned to color 0
        for (int c = 0; c < limit; ++c) {
            if (vertex_used[u][c] || vertex_used[v][c]) continue;
            if (++nodes > budget)
                throw budget_error("edge_coloring: node budget exceeded");
            vertex_used[u][c] = vertex_used[v][c] = 1;
            assigned[i] = c;
            if (extend(i + 1)) return true;
            vertex_used[u][c] = vertex_used[v][c] = 0;
            assigned[i] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<EdgeColoring> edge_coloring(const Graph& g, int k, long long node_budget) {
    if (k < 1) throw std::invalid_argument("edge_coloring: k must be >= 1");
    if (g.edge_count() == 0) return EdgeColoring{{}, 0};
    if (degree_profile(g).max_degree > k) return std::nullopt;
    ColoringSearch search(g, k, node_budget);
    if (!search.extend(0)) return std::nullopt;
    EdgeColoring result;
    result.color_count = k;
    for (size_t i = 0; i < search.order.size(); ++i)
        result.colors[search.order[i]] = search.assigned[i];
    return result;
}

std::pair<int, EdgeColoring> chromatic_index(const Graph& g, long long node_budget) {
    if (g.edge_count() == 0) return {0, EdgeColoring{{}, 0}};
    const int delta = degree_profile(g).max_degree;
    if (auto c = edge_coloring(g, delta, node_budget)) return {delta, *c};
    auto c = edge_coloring(g, delta + 1, node_budget);
    if (!c) throw std::logic_error("no (Delta+1)-edge-coloring found");  // contradicts Vizing
    return {delta + 1, *c};
}

bool BoundCertificate::verify(const Graph& g) const {
    const auto profile = degree_profile(g);
    switch (reason) {
        case BoundReason::MaxDegree:
            if (g.vertex_count() == 0) return witness_vertex == -1 && value == 0;
            return witness_vertex >= 0 && witness_vertex < g.vertex_count() &&
                   g.degree(witness_vertex) == value && value == profile.max_degree;
        case BoundReason::ChromaticIndex: {
            if (!witness_coloring || witness_coloring->color_count != value) return false;
            if (!witness_coloring->proper(g)) return false;
            if (infeasible_colors != value - 1) return false;
            return !edge_coloring(g, infeasible_colors).has_value();
        }
        case BoundReason::RegularNonBipartite: {
            if (!profile.regular || value != profile.max_degree + 1) return false;
            if (odd_walk.size() < 2 || odd_walk.front() != odd_walk.back()) return false;
            if ((odd_walk.size() - 1) % 2 == 0) return false;
            for (size_t i = 0; i + 1 < odd_walk.size(); ++i)
                if (!g.has_edge(odd_walk[i], odd_walk[i + 1])) return false;
            return true;
        }
        case BoundReason::CirculantEvenEven: {
            if (circulant_n % 2 != 0 || circulant_k % 2 != 0) return false;
            if (value != profile.max_degree + 1) return false;
            return isomorphic(g, circulant_graph(circulant_n, {1, circulant_k}));
        }
    }
    return false;
}

std::string BoundCertificate::describe(const Graph& g) const {
    std::ostringstream out;
    out << "mbt >= " << value << " via " << to_string(reason);
    switch (reason) {
        case BoundReason::MaxDegree:
            if (witness_vertex >= 0) out << " (vertex " << g.label(witness_vertex).str() << ")";
            break;
        case BoundReason::ChromaticIndex:
            out << " (no proper " << infeasible_colors << "-edge-coloring)";
            break;
        case BoundReason::RegularNonBipartite: {
            out << " (odd closed walk";
            for (int v : odd_walk) out << " " << g.label(v).str();
            out << ")";
            break;
        }
        case BoundReason::CirculantEvenEven:
            out << " (isomorphic to C(Z_" << circulant_n << ", {1," << circulant_k << "}))";
            break;
    }
    return out.str();
}

BoundCertificate mbt_lower_bound(const Graph& g, const std::optional<CirculantHint>& hint,
                                 long long node_budget) {
    const auto profile = degree_profile(g);

    BoundCertificate best;
    best.value = profile.max_degree;
    best.reason = BoundReason::MaxDegree;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == profile.max_degree) {
            best.witness_vertex = v;
            break;
        }

    // Tie order: circulant, regular-non-bipartite, chromatic index, Delta.
    try {
        auto [chi, coloring] = chromatic_index(g, node_budget);
        if (chi > best.value) {
            BoundCertificate c;
            c.value = chi;
            c.reason = BoundReason::ChromaticIndex;
            c.witness_coloring = std::move(coloring);
            c.infeasible_colors = chi - 1;
            best = std::move(c);
        }
    } catch (const budget_error&) {
        // fall back to the structural rules
    }

    if (profile.regular && g.edge_count() > 0) {
        if (auto walk = odd_closed_walk(g)) {
            if (profile.max_degree + 1 >= best.value) {
                BoundCertificate c;
                c.value = profile.max_degree + 1;
                c.reason = BoundReason::RegularNonBipartite;
                c.odd_walk = std::move(*walk);
                best = std::move(c);
            }
        }
    }

    if (hint && hint->n % 2 == 0 && hint->k % 2 == 0) {
        try {
            if (isomorphic(g, circulant_graph(hint->n, {1, hint->k})) &&
                profile.max_degree + 1 >= best.value) {
                BoundCertificate c;
                c.value = profile.max_degree + 1;
                c.reason = BoundReason::CirculantEvenEven;
                c.circulant_n = hint->n;
                c.circulant_k = hint->k;
                best = std::move(c);
            }
        } catch (const budget_error&) {
        }
    }
    return best;
}

Dispersability classify(const Graph& g, int mbt_value) {
    const int delta = degree_profile(g).max_degree;
    if (mbt_value < delta)
        throw std::invalid_argument("classify: mbt below max degree is impossible");
    if (mbt_value == delta) return Dispersability::Dispersable;
    if (mbt_value == delta + 1) return Dispersability::NearlyDispersable;
    return Dispersability::Other;
}

}  // namespace mbook
