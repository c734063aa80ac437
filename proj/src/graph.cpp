#include "barbell/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace barbell {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
}

long Graph::edge_count() const {
    long deg_sum = 0;
    for (const auto& a : adj_) deg_sum += a.count();
    return deg_sum / 2;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

const VertexSet& Graph::neighbors(int v) const {
    check(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    if (s.universe() != n_) throw std::invalid_argument("neighborhood: set universe mismatch");
    VertexSet out(n_);
    s.for_each([&](int v) { out |= adj_[v]; });
    return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    VertexSet out = neighborhood(s);
    out |= s;
    return out;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> comps;
    VertexSet seen(n_);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n_);
        stack.push_back(s);
        seen.set(s);
        comp.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            adj_[v].for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    comp.set(u);
                    stack.push_back(u);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    return components().size() == 1;
}

int Graph::diameter() const {
    if (n_ == 0) return -1;
    int best = 0;
    std::vector<int> dist(n_);
    std::vector<int> queue;
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            adj_[v].for_each([&](int u) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            });
        }
        for (int v = 0; v < n_; ++v) {
            if (dist[v] < 0) return -1;  // disconnected
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

bool Graph::is_path_graph() const {
    return n_ >= 1 && connected() && edge_count() == n_ - 1 && max_degree() <= 2;
}

bool Graph::is_complete() const {
    return edge_count() == long(n_) * (n_ - 1) / 2;
}

const std::string& Graph::label(int v) const {
    check(v);
    if (!labels_.empty()) return labels_[v];
    if (label_cache_.empty()) {
        label_cache_.reserve(n_);
        for (int i = 0; i < n_; ++i) label_cache_.push_back(std::to_string(i + 1));
    }
    return label_cache_[v];
}

void Graph::set_labels(std::vector<std::string> labels) {
    if ((int)labels.size() != n_) throw std::invalid_argument("set_labels: wrong length");
    labels_ = std::move(labels);
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.order();
    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), scan(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    auto pop_block = [&](int u, int v) {
        VertexSet verts(n);
        long edges = 0;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.set(a);
            verts.set(b);
            ++edges;
            if (a == u && b == v) break;
        }
        out.blocks.push_back(std::move(verts));
        out.block_edge_counts.push_back(edges);
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            int u = g.neighbors(v).next(scan[v]);
            scan[v] = u;
            if (u < 0) {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (parent[p] >= 0) out.cut_vertices.set(p);
                        pop_block(p, v);
                    }
                }
                continue;
            }
            if (disc[u] < 0) {
                if (v == root) ++root_children;
                parent[u] = v;
                disc[u] = low[u] = timer++;
                edge_stack.push_back({v, u});
                stack.push_back(u);
            } else if (u != parent[v] && disc[u] < disc[v]) {
                edge_stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (root_children >= 2) out.cut_vertices.set(root);
    }
    return out;
}

StructuralSummary structural_queries(const Graph& g) {
    const int n = g.order();
    StructuralSummary s;
    s.max_degree = g.max_degree();
    s.cut_vertices = VertexSet(n);
    s.pendant_vertices = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0) s.has_isolated_vertex = true;
        if (d == 1) s.pendant_vertices.set(v);
    }
    const long m = g.edge_count();
    const auto comps = g.components();
    const bool conn = n >= 1 && comps.size() == 1;
    s.cycle_count = int(m - n + long(comps.size()));
    s.is_tree = conn && m == n - 1;
    s.is_unicyclic = conn && m == n;
    s.is_path = g.is_path_graph();
    s.is_complete = g.is_complete();

    auto blocks = block_decomposition(g);
    s.cut_vertices = blocks.cut_vertices;
    // Cactus: connected and every block is a single edge or a cycle.  A block
    // with more edges than vertices fails; a 2-connected block with exactly as
    // many edges as vertices is a cycle.
    s.is_cactus = conn;
    for (size_t i = 0; i < blocks.blocks.size() && s.is_cactus; ++i) {
        long bv = blocks.blocks[i].count();
        long be = blocks.block_edge_counts[i];
        if (!(be == 1 || be == bv)) s.is_cactus = false;
    }
    return s;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    // Kneser graph K(5,2): vertices are the 2-subsets of {0..4}, edges join
    // disjoint pairs.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    Graph g(10);
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y) {
            auto [a, b] = pairs[x];
            auto [c, d] = pairs[y];
            if (a != c && a != d && b != c && b != d) g.add_edge(x, y);
        }
    return g;
}

Graph lollipop_graph(int n, int l) {
    if (n < 2 || l < 1) throw std::invalid_argument("lollipop_graph: need n >= 2, l >= 1");
    Graph g(n + l);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.add_edge(n - 1, n);
    for (int i = n; i + 1 < n + l; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int v = 0; v < a.order(); ++v)
        a.neighbors(v).for_each([&](int u) {
            if (u > v) g.add_edge(v, u);
        });
    for (int v = 0; v < b.order(); ++v)
        b.neighbors(v).for_each([&](int u) {
            if (u > v) g.add_edge(a.order() + v, a.order() + u);
        });
    return g;
}

}  // namespace barbell
