#include "mbook/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

namespace mbook {

namespace {

std::vector<std::pair<int, int>> constrained_edge_order(const Graph& g) {
    auto order = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        int da = g.degree(a.first) + g.degree(a.second);
        int db = g.degree(b.first) + g.degree(b.second);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

BookEmbedding assemble(const Graph& g, const std::vector<int>& order,
                       const std::vector<std::pair<int, int>>& edge_order,
                       const std::vector<int>& page_of, int pages_used) {
    BookEmbedding emb;
    for (int v : order) emb.spine.push_back(g.label(v));
    emb.pages.assign(pages_used, {});
    for (size_t i = 0; i < edge_order.size(); ++i) {
        auto [u, v] = edge_order[i];
        emb.pages[page_of[i]].push_back(make_label_edge(g.label(u), g.label(v)));
    }
    for (auto& page : emb.pages) std::sort(page.begin(), page.end());
    return emb;
}

// Page assignment search for one fixed spine. Vertex occupancy is a bitmask
// per page (vertex count is capped well below 64), crossing checks walk the
// page's interval list.
struct PageSearch {
    const Graph& g;
    int k;
    const std::vector<std::pair<int, int>>& edge_order;
    std::vector<int> pos;  // vertex -> position
    long long nodes = 0;
    long long budget;
    bool out_of_budget = false;
    const std::atomic<bool>* cancel;

    std::vector<std::uint64_t> page_mask;
    std::vector<std::vector<std::pair<int, int>>> page_intervals;
    std::vector<int> page_of;
    int pages_used = 0;

    PageSearch(const Graph& graph, int pages,
               const std::vector<std::pair<int, int>>& edges, long long node_budget,
               const std::atomic<bool>* cancel_flag)
        : g(graph), k(pages), edge_order(edges), pos(graph.vertex_count(), -1),
          budget(node_budget), cancel(cancel_flag) {
        page_mask.assign(k, 0);
        page_intervals.assign(k, {});
        page_of.assign(edge_order.size(), -1);
    }

    bool feasible(int page, std::uint64_t ends, int a, int b) const {
        if (page_mask[page] & ends) return false;
        for (auto [c, d] : page_intervals[page]) {
            bool c_in = a < c && c < b;
            bool d_in = a < d && d < b;
            if (c_in != d_in) return false;
        }
        return true;
    }

    bool extend(size_t i) {
        if (i == edge_order.size()) return true;
        if (cancel && (nodes & 1023) == 0 && cancel->load(std::memory_order_relaxed))
            return false;
        auto [u, v] = edge_order[i];
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        const std::uint64_t ends = (1ULL << u) | (1ULL << v);
        const int limit = std::min(pages_used + 1, k);
        for (int p = 0; p < limit; ++p) {
            if (!feasible(p, ends, a, b)) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            const bool opened = p == pages_used;
            if (opened) ++pages_used;
            page_mask[p] |= ends;
            page_intervals[p].emplace_back(a, b);
            page_of[i] = p;
            if (extend(i + 1)) return true;
            if (out_of_budget || (cancel && cancel->load(std::memory_order_relaxed)))
                return false;
            page_of[i] = -1;
            page_intervals[p].pop_back();
            page_mask[p] &= ~ends;
            if (opened) --pages_used;
        }
        return false;
    }
};

struct BranchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<BookEmbedding> embedding;
    long long nodes = 0;
    long long spine_orders = 0;
    bool cancelled = false;
};

// Enumerates spine completions for one choice of the vertex at position 1
// (or the whole order space when n <= 2), running the page search on every
// complete spine. Node counting covers spine placements and page
// assignments alike.
struct SpineBranch {
    const Graph& g;
    int k;
    const std::vector<std::pair<int, int>>& edge_order;
    long long budget;
    const std::atomic<bool>* cancel;

    std::vector<int> order;
    std::vector<char> used;
    BranchOutcome out;

    SpineBranch(const Graph& graph, int pages,
                const std::vector<std::pair<int, int>>& edges, long long node_budget,
                const std::atomic<bool>* cancel_flag)
        : g(graph), k(pages), edge_order(edges), budget(node_budget), cancel(cancel_flag),
          used(graph.vertex_count(), 0) {}

    bool run(int second_vertex) {
        const int n = g.vertex_count();
        order.reserve(n);
        order.push_back(0);
        used[0] = 1;
        if (second_vertex >= 0) {
            order.push_back(second_vertex);
            used[second_vertex] = 1;
        }
        bool found = place();
        out.status = found ? SearchStatus::Found
                           : out.nodes > budget ? SearchStatus::Budget
                                                : SearchStatus::Exhausted;
        if (cancel && cancel->load(std::memory_order_relaxed) && !found)
            out.cancelled = true;
        return found;
    }

    bool place() {
        const int n = g.vertex_count();
        const int depth = static_cast<int>(order.size());
        if (depth == n) {
            if (n >= 3 && order[1] > order[n - 1]) return false;  // reflection twin
            ++out.spine_orders;
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[order[i]] = i;
            PageSearch inner(g, k, edge_order, budget - out.nodes, cancel);
            inner.pos = std::move(pos);
            bool found = inner.extend(0);
            out.nodes += inner.nodes;
            if (inner.out_of_budget) out.nodes = budget + 1;
            if (found) {
                out.embedding =
                    assemble(g, order, edge_order, inner.page_of, inner.pages_used);
                return true;
            }
            return false;
        }
        if (cancel && cancel->load(std::memory_order_relaxed)) return false;
        for (int v = 1; v < n; ++v) {
            if (used[v]) continue;
            if (depth == n - 1 && n >= 3 && v < order[1]) continue;
            if (++out.nodes > budget) return false;
            used[v] = 1;
            order.push_back(v);
            if (place()) return true;
            order.pop_back();
            used[v] = 0;
            if (out.nodes > budget) return false;
        }
        return false;
    }
};

EmbedSearch fixed_spine_search(const Graph& g, int k, const std::vector<int>& spine,
                               long long budget) {
    const int n = g.vertex_count();
    if (static_cast<int>(spine.size()) != n)
        throw std::invalid_argument("embed_with_k: spine length mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = spine[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("embed_with_k: spine is not a permutation");
        pos[v] = i;
    }
    auto edge_order = constrained_edge_order(g);
    PageSearch inner(g, k, edge_order, budget, nullptr);
    inner.pos = std::move(pos);
    bool found = inner.extend(0);
    EmbedSearch result;
    result.nodes = inner.nodes;
    result.spine_orders = 1;
    if (found) {
        result.status = SearchStatus::Found;
        result.embedding = assemble(g, spine, edge_order, inner.page_of, inner.pages_used);
    } else {
        result.status = inner.out_of_budget ? SearchStatus::Budget : SearchStatus::Exhausted;
    }
    return result;
}

// Merges per-branch outcomes into the verdict the sequential search order
// would have produced under the shared node budget.
EmbedSearch reduce_branches(const std::vector<BranchOutcome>& outcomes, long long budget) {
    EmbedSearch result;
    long long used = 0;
    for (const auto& branch : outcomes) {
        result.spine_orders += branch.spine_orders;
        if (branch.status == SearchStatus::Found) {
            used += branch.nodes;
            result.nodes = used;
            if (used > budget) {
                result.status = SearchStatus::Budget;
                return result;
            }
            result.status = SearchStatus::Found;
            result.embedding = branch.embedding;
            return result;
        }
        if (branch.status == SearchStatus::Budget) {
            result.nodes = budget + 1;
            result.status = SearchStatus::Budget;
            return result;
        }
        used += branch.nodes;
        if (used > budget) {
            result.nodes = budget + 1;
            result.status = SearchStatus::Budget;
            return result;
        }
    }
    result.nodes = used;
    result.status = SearchStatus::Exhausted;
    return result;
}

EmbedSearch free_spine_search(const Graph& g, int k, const SolveOptions& options) {
    const int n = g.vertex_count();
    if (n > options.free_spine_vertex_cap)
        throw budget_error("embed_with_k: vertex count exceeds free-spine cap of " +
                           std::to_string(options.free_spine_vertex_cap));

    auto edge_order = constrained_edge_order(g);
    std::vector<int> branches;  // vertex placed at position 1
    if (n <= 2) {
        branches.push_back(-1);  // single branch, fully enumerated
    } else {
        for (int v = 1; v < n; ++v) branches.push_back(v);
    }

    std::vector<BranchOutcome> outcomes(branches.size());
    const int threads = std::max(1, options.threads);
    if (threads == 1 || branches.size() == 1) {
        long long remaining = options.node_budget;
        for (size_t b = 0; b < branches.size(); ++b) {
            SpineBranch branch(g, k, edge_order, remaining, nullptr);
            bool found = branch.run(branches[b]);
            outcomes[b] = std::move(branch.out);
            if (found) {
                outcomes.resize(b + 1);
                break;
            }
            remaining -= outcomes[b].nodes;
            if (remaining <= 0 || outcomes[b].status == SearchStatus::Budget) {
                outcomes.resize(b + 1);
                break;
            }
        }
        return reduce_branches(outcomes, options.node_budget);
    }

    // Parallel: each branch runs against the full budget; the reduction
    // recreates the sequential verdict. A branch may be cancelled once some
    // earlier-or-equal branch has found an embedding.
    std::atomic<size_t> next{0};
    std::atomic<size_t> found_at{branches.size()};
    std::atomic<bool> cancel{false};
    auto worker = [&]() {
        while (true) {
            size_t b = next.fetch_add(1);
            if (b >= branches.size()) return;
            if (b > found_at.load()) {
                outcomes[b].cancelled = true;
                continue;
            }
            SpineBranch branch(g, k, edge_order, options.node_budget, &cancel);
            bool found = branch.run(branches[b]);
            outcomes[b] = std::move(branch.out);
            if (found) {
                size_t prev = found_at.load();
                while (b < prev && !found_at.compare_exchange_weak(prev, b)) {
                }
                if (found_at.load() == 0) cancel.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // Cancelled branches before the winning one must be redone sequentially.
    size_t win = found_at.load();
    for (size_t b = 0; b < std::min(win + 1, branches.size()); ++b) {
        if (!outcomes[b].cancelled) continue;
        SpineBranch branch(g, k, edge_order, options.node_budget, nullptr);
        branch.run(branches[b]);
        outcomes[b] = std::move(branch.out);
    }
    if (win < outcomes.size()) outcomes.resize(win + 1);
    return reduce_branches(outcomes, options.node_budget);
}

}  // namespace

EmbedSearch embed_with_k(const Graph& g, int k, const std::optional<std::vector<int>>& spine,
                         const SolveOptions& options) {
    if (k < 0) throw std::invalid_argument("embed_with_k: k must be >= 0");
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("embed_with_k: too many vertices");

    if (g.edge_count() == 0) {
        EmbedSearch r;
        r.status = SearchStatus::Found;
        BookEmbedding emb;
        if (spine) {
            for (int v : *spine) emb.spine.push_back(g.label(v));
        } else {
            for (int v = 0; v < n; ++v) emb.spine.push_back(g.label(v));
        }
        r.embedding = std::move(emb);
        return r;
    }
    if (k == 0) return {SearchStatus::Exhausted, std::nullopt, 0, 0};
    if (spine) return fixed_spine_search(g, k, *spine, options.node_budget);
    return free_spine_search(g, k, options);
}

SolveResult mbt_exact(const Graph& g, const SolveOptions& options,
                      const std::optional<CirculantHint>& hint) {
    const auto start = std::chrono::steady_clock::now();
    BoundCertificate lower = mbt_lower_bound(g, hint);

    SolveStats stats;
    long long remaining = options.node_budget;
    const int k_max = std::max(lower.value, g.edge_count());
    for (int k = lower.value; k <= k_max; ++k) {
        SolveOptions step = options;
        step.node_budget = remaining;
        EmbedSearch search = embed_with_k(g, k, std::nullopt, step);
        stats.nodes += std::min(search.nodes, remaining);
        stats.spine_orders += search.spine_orders;
        if (search.status == SearchStatus::Found) {
            stats.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return {k, std::move(*search.embedding), std::move(lower), stats};
        }
        if (search.status == SearchStatus::Budget) {
            int hi = -1;
            try {
                hi = heuristic_upper(g, options.seed, 8).page_count();
            } catch (...) {
            }
            throw budget_error("mbt_exact: node budget exceeded", k, hi);
        }
        remaining -= search.nodes;
        if (remaining <= 0) throw budget_error("mbt_exact: node budget exceeded", k + 1, -1);
    }
    throw std::logic_error("mbt_exact: one page per edge must be feasible");
}

namespace {

struct GreedyResult {
    std::vector<std::vector<int>> page_edges;  // indices into edge_order
    int pages = 0;
};

GreedyResult greedy_assign(const std::vector<std::pair<int, int>>& edge_order,
                           const std::vector<int>& pos) {
    GreedyResult r;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<std::pair<int, int>>> intervals;
    for (size_t i = 0; i < edge_order.size(); ++i) {
        auto [u, v] = edge_order[i];
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        std::uint64_t ends = (1ULL << u) | (1ULL << v);
        int chosen = -1;
        for (int p = 0; p < r.pages; ++p) {
            if (masks[p] & ends) continue;
            bool ok = true;
            for (auto [c, d] : intervals[p]) {
                bool c_in = a < c && c < b;
                bool d_in = a < d && d < b;
                if (c_in != d_in) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = p;
                break;
            }
        }
        if (chosen < 0) {
            chosen = r.pages++;
            masks.push_back(0);
            intervals.emplace_back();
            r.page_edges.emplace_back();
        }
        masks[chosen] |= ends;
        intervals[chosen].emplace_back(a, b);
        r.page_edges[chosen].push_back(static_cast<int>(i));
    }
    return r;
}

}  // namespace

BookEmbedding heuristic_upper(const Graph& g, std::uint64_t seed, int tries) {
    const int n = g.vertex_count();
    auto edge_order = constrained_edge_order(g);

    if (g.edge_count() == 0) {
        BookEmbedding emb;
        for (int v = 0; v < n; ++v) emb.spine.push_back(g.label(v));
        return emb;
    }

    std::mt19937_64 rng(seed);
    std::vector<int> best_order;
    GreedyResult best;
    best.pages = g.edge_count() + 1;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < std::max(1, tries); ++t) {
        if (t > 0) std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        GreedyResult current = greedy_assign(edge_order, pos);

        const int sweeps = 4 * n * n;
        for (int s = 0; s < sweeps; ++s) {
            if (n < 2) break;
            int i = static_cast<int>(rng() % (n - 1));
            std::swap(order[i], order[i + 1]);
            std::swap(pos[order[i]], pos[order[i + 1]]);
            GreedyResult candidate = greedy_assign(edge_order, pos);
            if (candidate.pages <= current.pages) {
                current = std::move(candidate);
            } else {
                std::swap(order[i], order[i + 1]);
                std::swap(pos[order[i]], pos[order[i + 1]]);
            }
        }
        if (current.pages < best.pages) {
            best = std::move(current);
            best_order = order;
        }
    }

    BookEmbedding emb;
    for (int v : best_order) emb.spine.push_back(g.label(v));
    emb.pages.assign(best.pages, {});
    for (int p = 0; p < best.pages; ++p)
        for (int idx : best.page_edges[p]) {
            auto [u, v] = edge_order[idx];
            emb.pages[p].push_back(make_label_edge(g.label(u), g.label(v)));
        }
    for (auto& page : emb.pages) std::sort(page.begin(), page.end());
    return emb;
}

}  // namespace mbook
