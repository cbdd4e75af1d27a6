#pragma once

// Shared test helpers: deterministic random graphs and small independent
// oracles. The oracles deliberately avoid the library's search machinery
// (no ordering heuristics, no symmetry breaking) so they can referee it.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mbook/graph.hpp"

namespace mbook::testutil {

inline Graph random_connected_graph(std::mt19937_64& rng, int max_vertices,
                                    double extra_edge_prob = 0.25) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::set<std::pair<int, int>> have(edges.begin(), edges.end());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have.count({u, v}) && coin(rng) < extra_edge_prob) {
                have.insert({u, v});
                edges.emplace_back(u, v);
            }
    return make_graph(n, std::move(edges));
}

inline Graph random_simple_graph(std::mt19937_64& rng, int max_vertices,
                                 double edge_prob = 0.4) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

inline Graph relabel_randomly(const Graph& g, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return make_graph(n, std::move(edges));
}

// Triangulated polygon minus random chords/sides: always outerplanar.
inline Graph random_outerplanar_graph(std::mt19937_64& rng, int max_vertices,
                                      double drop_prob = 0.3) {
    const int n = std::max<int>(2, 2 + static_cast<int>(rng() % (max_vertices - 1)));
    std::set<std::pair<int, int>> edges;
    auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < n; ++i)
        if (n > 2 || i + 1 < n) add(i, (i + 1) % n);
    // random triangulation of the polygon
    std::vector<std::pair<int, int>> stack;
    if (n >= 4) stack.emplace_back(0, n - 1);
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2) continue;
        int k = lo + 1 + static_cast<int>(rng() % (hi - lo - 1));
        add(lo, k);
        add(k, hi);
        stack.emplace_back(lo, k);
        stack.emplace_back(k, hi);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges)
        if (coin(rng) >= drop_prob) kept.push_back(e);
    return make_graph(n, std::move(kept));
}

inline bool has_odd_cycle_component_of_degree_two(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        std::vector<int> stack{root};
        comp[root] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adjacency()[u])
                if (comp[v] == -1) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    for (int c = 0; c < count; ++c) {
        int size = 0;
        bool all_two = true;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) {
                ++size;
                if (g.degree(v) != 2) all_two = false;
            }
        if (all_two && size >= 3 && size % 2 == 1) return true;
    }
    return false;
}

// Bipartiteness by exhaustive 2-coloring; usable up to ~16 vertices.
inline bool brute_force_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                proper = false;
                break;
            }
        if (proper) return true;
    }
    return g.edge_count() == 0;
}

// All connected graphs on <= max_n vertices up to isomorphism, via edge-mask
// enumeration and isomorphism dedup within (edge count, degree sequence)
// buckets.
inline std::vector<Graph> connected_corpus(int max_n) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        const int m = static_cast<int>(all_edges.size());
        std::map<std::pair<int, std::vector<int>>, std::vector<Graph>> buckets;
        for (long long mask = 0; mask < (1LL << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < m; ++e)
                if (mask & (1LL << e)) edges.push_back(all_edges[e]);
            Graph g = make_graph(n, edges);
            if (!is_connected(g)) continue;
            std::vector<int> degs = degree_profile(g).degree;
            std::sort(degs.begin(), degs.end());
            auto& bucket = buckets[{g.edge_count(), degs}];
            bool known = false;
            for (const Graph& seen : bucket)
                if (isomorphic(g, seen)) {
                    known = true;
                    break;
                }
            if (!known) bucket.push_back(g);
        }
        for (auto& [key, bucket] : buckets)
            for (Graph& g : bucket) corpus.push_back(std::move(g));
    }
    return corpus;
}

namespace detail {

inline bool brute_assign(const Graph& g, int k, const std::vector<int>& pos, size_t i,
                         std::vector<int>& page_of) {
    if (i == g.edges().size()) return true;
    auto [u, v] = g.edges()[i];
    for (int p = 0; p < k; ++p) {
        bool ok = true;
        for (size_t j = 0; j < i && ok; ++j) {
            if (page_of[j] != p) continue;
            auto [x, y] = g.edges()[j];
            if (x == u || x == v || y == u || y == v) ok = false;  // matching
            int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
            int c = std::min(pos[x], pos[y]), d = std::max(pos[x], pos[y]);
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) ok = false;  // crossing
        }
        if (!ok) continue;
        page_of[i] = p;
        if (brute_assign(g, k, pos, i + 1, page_of)) return true;
        page_of[i] = -1;
    }
    return false;
}

}  // namespace detail

// Exhaustive matching book thickness over every spine permutation, with no
// pruning beyond feasibility itself. Only for tiny graphs.
inline int brute_force_mbt(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int k = 1; k <= m; ++k) {
        std::vector<int> perm = order;
        do {
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[perm[i]] = i;
            std::vector<int> page_of(m, -1);
            if (detail::brute_assign(g, k, pos, 0, page_of)) return k;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return m;
}

}  // namespace mbook::testutil
