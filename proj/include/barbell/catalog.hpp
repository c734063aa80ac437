#pragma once

#include <cstdint>
#include <vector>

#include "barbell/graph.hpp"

namespace barbell {

// Upper-triangle edge mask helpers for small graphs (n <= 11).
uint64_t mask_from_graph(const Graph& g);
Graph graph_from_mask(int n, uint64_t mask);

// Canonical representative mask: the minimum over all relabelings that
// respect the (degree, sorted neighbor degrees) refinement classes.  Equal
// for isomorphic graphs, distinct otherwise; used to dedup small catalogs.
uint64_t canonical_edge_mask(const Graph& g);

// All graphs on n vertices up to isomorphism, one representative each, in a
// deterministic order.  Optional maximum-degree bound trims the generation.
// Grown incrementally by vertex addition, so it stays cheap through n = 7
// (1044 graphs) and degree-bounded n = 8.
std::vector<Graph> graphs_up_to_iso(int n, int max_degree = -1);

}  // namespace barbell
