#pragma once

#include "mbook/graph.hpp"
#include "mbook/transforms.hpp"

namespace mbook {

// The F-sum g1 +_F g2: one copy of F(g1) per vertex of g2, with two vertices
// (x,u), (y,v) adjacent iff [x = y is Black and uv is an edge of g2] or
// [u = v and xy is an edge of F(g1)]. Built directly from that rule.
Graph f_sum(const Graph& g1, const Graph& g2, TransformKind kind);

// Reference route: F(g1) box g2 minus the inter-copy edges at White vertices.
// Must produce the identical labelled graph.
Graph f_sum_via_product(const Graph& g1, const Graph& g2, TransformKind kind);

}  // namespace mbook
