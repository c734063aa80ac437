#pragma once

#include <optional>
#include <utility>

#include "barbell/barbell.hpp"
#include "barbell/forcing.hpp"
#include "barbell/graph.hpp"

namespace barbell {

// Vertex duplication: the new vertex u = n copies N(v); jdup also joins u-v.
Graph dup(const Graph& g, int v);
Graph jdup(const Graph& g, int v);

// Immutable edit operations.
Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
Graph remove_vertex(const Graph& g, int v);
Graph remove_set(const Graph& g, const VertexSet& s);
Graph add_vertex_with_neighbors(const Graph& g, const VertexSet& nbrs);

// Deterministic id <-> (g,h) correspondence for product graphs, g-major.
struct ProductVertexMap {
    int g_order = 0;
    int h_order = 0;

    int id(int g, int h) const { return g * h_order + h; }
    std::pair<int, int> factors(int id) const { return {id / h_order, id % h_order}; }
};

Graph join_graphs(const Graph& g, const Graph& h);

// Glue g and h by identifying vertex u of g with vertex w of h.  The
// identified vertex keeps u's id; h's other vertices follow g's block in
// their original order.
Graph vertex_sum(const Graph& g, int u, const Graph& h, int w);
int vertex_sum_h_id(const Graph& g, int u, int w, int x);

// g with one private copy of h per vertex, each copy joined to its host.
// Vertex order: g's vertices, then copy i's vertices row-major.
Graph corona(const Graph& g, const Graph& h);

Graph cartesian_product(const Graph& g, const Graph& h, ProductVertexMap* map = nullptr);
Graph tensor_product(const Graph& g, const Graph& h, ProductVertexMap* map = nullptr);
Graph strong_product(const Graph& g, const Graph& h, ProductVertexMap* map = nullptr);

enum class EdgeEditMode { add, remove };
enum class ProductKind { cartesian, tensor, strong };

// Partition transfer under a single edge edit.  The same sets remain a
// partition of the edited graph when the endpoints share a class, or when the
// endpoint in R keeps enough W-neighbors (> 2 before a removal, >= 2 before
// an addition).  nullopt when no clause applies.
std::optional<BarbellPartition> transfer_barbell_edge_edit(const Graph& g, const BarbellPartition& p, int u,
                                                           int v, EdgeEditMode mode);

// Partition transfer to g - v (sets reindexed).  Applies when v lies in R, or
// when v lies in some W_i whose other members stay put: either N(v) inside
// W_i, or every R-neighbor of v keeps > 2 neighbors in W_i.
std::optional<BarbellPartition> transfer_barbell_vertex_removal(const Graph& g, const BarbellPartition& p, int v);

// Partition transfer to g plus one new vertex with neighborhood nbrs: the
// new vertex joins a class that tolerates it (all neighbors in one class;
// != 1 neighbors in each W_i for R; or the W_i clause).
std::optional<BarbellPartition> transfer_barbell_vertex_extension(const Graph& g, const BarbellPartition& p,
                                                                  const VertexSet& nbrs);

// dup/jdup always preserve a partition: the copy follows v's class.
// Returns the partitions for dup(g,v) and jdup(g,v).
std::pair<BarbellPartition, BarbellPartition> transfer_barbell_dup(const Graph& g, const BarbellPartition& p, int v);

// For g without a barbell partition: duplication of v creates one exactly
// when a fort of g avoids N[v].  Checks the precondition.
bool dup_creates_barbell(const Graph& g, int v);

// join(g,h) picks up h's partition with R' = R u V(g); needs both factors
// free of isolated vertices and |W1|,|W2| >= 2.
BarbellPartition transfer_barbell_join(const Graph& g, const Graph& h, const BarbellPartition& p_h);

// Biconditional for isolated-vertex-free factors: the join admits a
// partition iff some factor does.
bool join_admits(const Graph& g, const Graph& h);

// Vertex sum: with p_h given, h's partition extends (R or W_i absorbs V(g));
// without it, both factors must be non-paths and forts avoiding the glued
// vertex are extracted from each side.
BarbellPartition transfer_barbell_vertex_sum(const Graph& g, int u, const Graph& h, int w,
                                             const std::optional<BarbellPartition>& p_h = std::nullopt);

// corona(g,h) with |V(g)|,|V(h)| >= 2: the first two h-copies are W1 and W2.
BarbellPartition barbell_corona(const Graph& g, const Graph& h);

// Cylinder lift of h's partition over all of g, for the Cartesian or tensor
// product.
BarbellPartition lift_barbell_product(const Graph& g, const Graph& h, const BarbellPartition& p_h, ProductKind kind);

// Cartesian product of factors that each hold a disjoint fort pair:
// W_i = F_g^i x F_h^i.
BarbellPartition barbell_cartesian_disjoint_forts(const Graph& g, const Graph& h, const Fort& fg1, const Fort& fg2,
                                                  const Fort& fh1, const Fort& fh2);

// C_k box C_{mk} (k >= 4, m >= 1) with the explicit diagonal partition:
// classes by (j2 - j1) mod k: 0 -> W1, {1, k-1} -> R, else W2.
std::pair<Graph, BarbellPartition> barbell_prism(int k, int m);

// K_n x K_m (n >= 2, m >= 6): row u_1 split at ceil(m/2).
std::pair<Graph, BarbellPartition> barbell_tensor_complete(int n, int m);

// Row partition W_1 = {u} x V(h), W_2 = {v} x V(h) for a non-adjacent pair
// u,v of g.  Tensor requires h pendant-free with |V(h)| >= 2; strong requires
// |V(h)| >= 2.  Disconnected factors short-circuit to the component split.
BarbellPartition barbell_nonadjacent_pair(const Graph& g, const Graph& h, int u, int v, ProductKind kind);

}  // namespace barbell
