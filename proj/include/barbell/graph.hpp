#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barbell/vertex_set.hpp"

namespace barbell {

// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency
// bitsets.  Treated as an immutable value once built: the edit operations in
// ops.hpp return new graphs.  Vertex ids are 0-based internally; all display
// output uses 1-based labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // construction-time only

    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const;
    int min_degree() const;

    // Open neighborhood of a set (may intersect S) and the closed variant.
    VertexSet neighborhood(const VertexSet& s) const;
    VertexSet closed_neighborhood(const VertexSet& s) const;

    std::vector<VertexSet> components() const;
    bool connected() const;

    // Longest shortest-path distance; -1 when disconnected or empty.
    int diameter() const;

    bool is_path_graph() const;
    bool is_complete() const;

    const std::string& label(int v) const;
    void set_labels(std::vector<std::string> labels);
    bool has_custom_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;  // empty = default "1".."n"
    mutable std::vector<std::string> label_cache_;
};

// Structural facts consumed by the partition screens and the census.
struct StructuralSummary {
    int max_degree = 0;
    bool is_tree = false;
    bool is_unicyclic = false;
    bool is_cactus = false;
    bool is_path = false;
    bool is_complete = false;
    bool has_isolated_vertex = false;
    int cycle_count = 0;  // |E| - |V| + #components
    VertexSet cut_vertices;
    VertexSet pendant_vertices;
};

StructuralSummary structural_queries(const Graph& g);

// Biconnected components: each block as its vertex set, plus the cut vertices.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<long> block_edge_counts;
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

// Named construction helpers.
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}, center = vertex 0
Graph petersen_graph();
Graph lollipop_graph(int n, int l);  // K_n plus a pendant path P_l
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace barbell
