#pragma once

#include <map>

#include "mbook/graph.hpp"

namespace mbook {

// Proper edge coloring: edges sharing an endpoint get distinct colors.
struct EdgeColoring {
    std::map<std::pair<int, int>, int> colors;  // canonical (u,v) -> color
    int color_count = 0;

    bool proper(const Graph& g) const;
};

enum class BoundReason : std::uint8_t {
    MaxDegree,
    ChromaticIndex,
    RegularNonBipartite,
    CirculantEvenEven,
};

const char* to_string(BoundReason r);

// A machine-checkable lower bound on the matching book thickness.
struct BoundCertificate {
    int value = 0;
    BoundReason reason = BoundReason::MaxDegree;

    int witness_vertex = -1;                      // MaxDegree: vertex of degree == value
    std::optional<EdgeColoring> witness_coloring; // ChromaticIndex: optimal coloring
    int infeasible_colors = -1;                   // ChromaticIndex: value-1 shown infeasible
    std::vector<int> odd_walk;                    // RegularNonBipartite: closed odd walk
    int circulant_n = 0, circulant_k = 0;         // CirculantEvenEven: C(Z_n, {1,k})

    // Re-derives the bound from the witness alone.
    bool verify(const Graph& g) const;

    std::string describe(const Graph& g) const;
};

// Caller-supplied assertion that the graph came from a pipeline known to
// produce C(Z_n, {1,k}); checked by isomorphism before use.
struct CirculantHint {
    int n = 0;
    int k = 0;
};

// Proper k-edge-coloring by backtracking (edges in descending degree-sum
// order, first edge pinned to color 0), or nullopt if none exists.
std::optional<EdgeColoring> edge_coloring(const Graph& g, int k,
                                          long long node_budget = 20'000'000);

// Smallest k admitting a proper k-edge-coloring; by Vizing only Delta and
// Delta+1 are tried.
std::pair<int, EdgeColoring> chromatic_index(const Graph& g,
                                             long long node_budget = 20'000'000);

// Best lower bound among: Delta; chi'; Delta+1 for regular non-bipartite
// graphs; Delta+1 for C(Z_n,{1,k}) with n,k even (hint required). On budget
// overrun of a subroutine the weaker rules still apply.
BoundCertificate mbt_lower_bound(const Graph& g,
                                 const std::optional<CirculantHint>& hint = std::nullopt,
                                 long long node_budget = 20'000'000);

enum class Dispersability : std::uint8_t { Dispersable, NearlyDispersable, Other };

const char* to_string(Dispersability d);

// mbt == Delta, mbt == Delta+1, or larger. Rejects mbt below Delta.
Dispersability classify(const Graph& g, int mbt_value);

}  // namespace mbook
