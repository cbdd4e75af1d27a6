#pragma once

#include "mbook/embedding.hpp"
#include "mbook/fsum.hpp"

namespace mbook {

// Raised when a construction's output fails the validator; carries the
// offending report instead of silently repairing the layout.
struct construction_error : std::runtime_error {
    ValidationReport report;
    construction_error(const std::string& what, ValidationReport r)
        : std::runtime_error(what + "\n" + r.summary()), report(std::move(r)) {}
};

// A bipartite graph packaged with a max-degree-page embedding and a proper
// red/blue coloring; the form every F-sum construction consumes.
struct DispersableInput {
    Graph graph;
    BookEmbedding embedding;     // page_count == max degree
    std::vector<int> coloring;   // 0 = Red, 1 = Blue

    int max_degree() const { return embedding.page_count(); }

    static DispersableInput make(Graph h);  // embedding + coloring derived
    static DispersableInput make(Graph h, BookEmbedding emb,
                                 std::optional<std::vector<int>> coloring = std::nullopt);
};

// Printing-cycle order plus a max-degree edge coloring as pages. Rejects
// non-outerplanar inputs and (unions containing) odd cycles of max degree 2.
BookEmbedding embed_outerplanar(const Graph& g, int vertex_cap = 12,
                                long long coloring_budget = 20'000'000);

// Explicit layouts for the Q and T operations applied to a star with n
// leaves: n+1 and 2n pages respectively. The T layout requires n >= 2
// (the n = 1 case is a triangle, which no 2-page layout can carry).
BookEmbedding embed_q_star(int n);
BookEmbedding embed_t_star(int n);

// Copies of emb_fg along H's spine (reversed on Blue vertices), then one
// page per H-page carrying the inter-copy bundles at Black vertices. Page
// count: emb_fg pages + max degree of H.
BookEmbedding embed_fsum_generic(const Graph& g, const DispersableInput& h,
                                 TransformKind kind, const BookEmbedding& emb_fg);

// Star +_Q H in n + max_degree(H) pages: the chosen H-page's bundles ride
// in the star pages, the remaining H-pages get bundle pages of their own.
BookEmbedding embed_star_q(int n, const DispersableInput& h, int e_page = 0);

// Path +_Q H; n <= 3 reduces to the star construction. Page count is the
// max degree of the sum (max_degree(H) + 2, except 4 when H is a matching).
BookEmbedding embed_path_q(int n, const DispersableInput& h, int e1_page = 0,
                           int e2_page = 1);

// Cycle +_Q cycle with even q, always 5 pages. Odd q is rejected.
BookEmbedding embed_cycle_q_cycle(int p, int q);

}  // namespace mbook
