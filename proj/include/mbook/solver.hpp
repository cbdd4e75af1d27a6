#pragma once

#include "mbook/bounds.hpp"
#include "mbook/embedding.hpp"
#include "mbook/graph.hpp"

namespace mbook {

struct SolveStats {
    long long nodes = 0;
    long long spine_orders = 0;
    double elapsed_seconds = 0.0;
};

enum class SearchStatus : std::uint8_t {
    Found,      // an embedding exists and was returned
    Exhausted,  // the whole search space was refuted
    Budget,     // the node budget ran out; feasibility unknown
};

struct EmbedSearch {
    SearchStatus status = SearchStatus::Budget;
    std::optional<BookEmbedding> embedding;
    long long nodes = 0;
    long long spine_orders = 0;
};

struct SolveOptions {
    long long node_budget = 50'000'000;
    int free_spine_vertex_cap = 12;
    int threads = 1;       // >1 explores top spine branches in parallel,
                           // reduced to the sequential-order witness
    std::uint64_t seed = 1;  // heuristic fallback bracket only
};

// Searches for a k-page matching book embedding. With a fixed spine the
// search backtracks over edge-to-page assignments, edges ordered most
// constrained first (descending endpoint degree sum, then lexicographic),
// and an edge may open page p only when pages below p are nonempty. With a
// free spine an outer backtracking enumerates orders with vertex 0 pinned
// to position 0 and reflection broken by order[1] < order[n-1]. The first
// embedding in search order is returned; results are deterministic for
// identical inputs, budgets, and thread counts.
EmbedSearch embed_with_k(const Graph& g, int k,
                         const std::optional<std::vector<int>>& spine = std::nullopt,
                         const SolveOptions& options = {});

struct SolveResult {
    int mbt = 0;
    BookEmbedding embedding;
    BoundCertificate lower;
    SolveStats stats;
};

// Exact matching book thickness: ascend k from the certified lower bound
// until a page assignment exists. Throws budget_error carrying the best
// known bracket when the node budget runs out.
SolveResult mbt_exact(const Graph& g, const SolveOptions& options = {},
                      const std::optional<CirculantHint>& hint = std::nullopt);

// Randomized-restart local search over spine orders (adjacent
// transpositions) with greedy first-fit page assignment. Always returns a
// valid embedding; no optimality claim.
BookEmbedding heuristic_upper(const Graph& g, std::uint64_t seed = 1, int tries = 32);

}  // namespace mbook
