#pragma once

#include "mbook/graph.hpp"

namespace mbook {

// The four unary graph operations. S subdivides every edge; R keeps the
// original edges on top of the subdivision; Q joins subdivision vertices of
// adjacent edges; T is the total graph (adjacency plus incidence).
enum class TransformKind : std::uint8_t { S, R, Q, T };

const char* to_string(TransformKind k);
TransformKind transform_kind_from_string(const std::string& s);

// Output vertices: every original vertex (tag Black, label kept), then one
// edge(u,v) vertex per edge (tag White). Requires a connected, nonempty input.
Graph transform(const Graph& g, TransformKind kind);

}  // namespace mbook
