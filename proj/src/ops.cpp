#include "barbell/ops.hpp"

#include <stdexcept>
#include <string>

namespace barbell {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

void require_valid(const Graph& g, const BarbellPartition& p, const char* what) {
    auto check = verify_barbell_partition(g, p);
    if (!check.valid) throw std::invalid_argument(std::string(what) + ": invalid input partition: " + check.violations.front());
}

// Transfers promise validity by theorem; a failed re-verification means a bug,
// so it fails loudly instead of returning nullopt.
BarbellPartition reverify(const Graph& g, BarbellPartition p, const char* what) {
    auto check = verify_barbell_partition(g, p);
    if (!check.valid) throw std::logic_error(std::string(what) + ": transferred partition failed verification: " + check.violations.front());
    return p;
}

int classify(const BarbellPartition& p, int v) {  // 0=R, 1=W1, 2=W2
    if (p.w1.test(v)) return 1;
    if (p.w2.test(v)) return 2;
    return 0;
}

Graph copy_graph(const Graph& g, int extra) {
    Graph out(g.order() + extra);
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int u) {
            if (u > v) out.add_edge(v, u);
        });
    return out;
}

VertexSet widen(const VertexSet& s, int new_universe) {
    VertexSet out(new_universe);
    s.for_each([&](int v) { out.set(v); });
    return out;
}

}  // namespace

Graph dup(const Graph& g, int v) {
    check_vertex(g, v, "dup");
    Graph out = copy_graph(g, 1);
    g.neighbors(v).for_each([&](int u) { out.add_edge(g.order(), u); });
    return out;
}

Graph jdup(const Graph& g, int v) {
    Graph out = dup(g, v);
    out.add_edge(g.order(), v);
    return out;
}

Graph add_edge(const Graph& g, int u, int v) {
    check_vertex(g, u, "add_edge");
    check_vertex(g, v, "add_edge");
    if (g.has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
    Graph out = copy_graph(g, 0);
    out.add_edge(u, v);
    return out;
}

Graph remove_edge(const Graph& g, int u, int v) {
    check_vertex(g, u, "remove_edge");
    check_vertex(g, v, "remove_edge");
    if (!g.has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
    Graph out(g.order());
    for (int a = 0; a < g.order(); ++a)
        g.neighbors(a).for_each([&](int b) {
            if (b > a && !(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
        });
    return out;
}

Graph remove_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw std::invalid_argument("remove_set: set universe mismatch");
    std::vector<int> new_id(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!s.test(v)) new_id[v] = next++;
    Graph out(next);
    for (int v = 0; v < g.order(); ++v) {
        if (new_id[v] < 0) continue;
        g.neighbors(v).for_each([&](int u) {
            if (u > v && new_id[u] >= 0) out.add_edge(new_id[v], new_id[u]);
        });
    }
    return out;
}

Graph remove_vertex(const Graph& g, int v) {
    check_vertex(g, v, "remove_vertex");
    return remove_set(g, VertexSet::of(g.order(), {v}));
}

Graph add_vertex_with_neighbors(const Graph& g, const VertexSet& nbrs) {
    if (nbrs.universe() != g.order()) throw std::invalid_argument("add_vertex_with_neighbors: set universe mismatch");
    Graph out = copy_graph(g, 1);
    nbrs.for_each([&](int u) { out.add_edge(g.order(), u); });
    return out;
}

Graph join_graphs(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("join_graphs: factors must be nonempty");
    Graph out = disjoint_union(g, h);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) out.add_edge(a, g.order() + b);
    return out;
}

int vertex_sum_h_id(const Graph& g, int u, int w, int x) {
    if (x == w) return u;
    return g.order() + (x < w ? x : x - 1);
}

Graph vertex_sum(const Graph& g, int u, const Graph& h, int w) {
    check_vertex(g, u, "vertex_sum");
    check_vertex(h, w, "vertex_sum");
    Graph out = copy_graph(g, h.order() - 1);
    for (int a = 0; a < h.order(); ++a)
        h.neighbors(a).for_each([&](int b) {
            if (b > a) out.add_edge(vertex_sum_h_id(g, u, w, a), vertex_sum_h_id(g, u, w, b));
        });
    return out;
}

Graph corona(const Graph& g, const Graph& h) {
    const int k = g.order(), m = h.order();
    if (k == 0 || m == 0) throw std::invalid_argument("corona: factors must be nonempty");
    Graph out = copy_graph(g, k * m);
    for (int i = 0; i < k; ++i) {
        const int base = k + i * m;
        for (int a = 0; a < m; ++a) {
            out.add_edge(i, base + a);
            h.neighbors(a).for_each([&](int b) {
                if (b > a) out.add_edge(base + a, base + b);
            });
        }
    }
    return out;
}

namespace {

std::vector<std::string> product_labels(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    labels.reserve(size_t(g.order()) * h.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    return labels;
}

Graph product_graph(const Graph& g, const Graph& h, ProductKind kind, ProductVertexMap* map) {
    if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("product: factors must be nonempty");
    ProductVertexMap pm{g.order(), h.order()};
    Graph out(g.order() * h.order());
    for (int g1 = 0; g1 < g.order(); ++g1)
        for (int h1 = 0; h1 < h.order(); ++h1)
            for (int g2 = g1; g2 < g.order(); ++g2)
                for (int h2 = 0; h2 < h.order(); ++h2) {
                    if (g2 == g1 && h2 <= h1) continue;
                    const bool ge = g.has_edge(g1, g2) || g1 == g2;
                    const bool he = h.has_edge(h1, h2) || h1 == h2;
                    bool edge = false;
                    switch (kind) {
                        case ProductKind::cartesian:
                            edge = (g1 == g2 && h.has_edge(h1, h2)) || (h1 == h2 && g.has_edge(g1, g2));
                            break;
                        case ProductKind::tensor:
                            edge = g.has_edge(g1, g2) && h.has_edge(h1, h2);
                            break;
                        case ProductKind::strong:
                            edge = ge && he && !(g1 == g2 && h1 == h2);
                            break;
                    }
                    if (edge) out.add_edge(pm.id(g1, h1), pm.id(g2, h2));
                }
    out.set_labels(product_labels(g, h));
    if (map) *map = pm;
    return out;
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h, ProductVertexMap* map) {
    return product_graph(g, h, ProductKind::cartesian, map);
}
Graph tensor_product(const Graph& g, const Graph& h, ProductVertexMap* map) {
    return product_graph(g, h, ProductKind::tensor, map);
}
Graph strong_product(const Graph& g, const Graph& h, ProductVertexMap* map) {
    return product_graph(g, h, ProductKind::strong, map);
}

std::optional<BarbellPartition> transfer_barbell_edge_edit(const Graph& g, const BarbellPartition& p, int u, int v,
                                                           EdgeEditMode mode) {
    require_valid(g, p, "transfer_barbell_edge_edit");
    check_vertex(g, u, "transfer_barbell_edge_edit");
    check_vertex(g, v, "transfer_barbell_edge_edit");
    if (mode == EdgeEditMode::remove && !g.has_edge(u, v))
        throw std::invalid_argument("transfer_barbell_edge_edit: edge not present");
    if (mode == EdgeEditMode::add && g.has_edge(u, v))
        throw std::invalid_argument("transfer_barbell_edge_edit: edge already present");

    const int cu = classify(p, u), cv = classify(p, v);
    const Graph edited = mode == EdgeEditMode::remove ? remove_edge(g, u, v) : add_edge(g, u, v);
    if (cu == cv)  // both in R or both in the same W: no clause involves e
        return reverify(edited, p, "transfer_barbell_edge_edit");
    // One endpoint in R, the other in a W class.
    if (cu != 0 && cv != 0) return std::nullopt;  // spans W1 and W2 (only possible when adding)
    const int r = cu == 0 ? u : v;
    const int w = cu == 0 ? v : u;
    const VertexSet& wi = classify(p, w) == 1 ? p.w1 : p.w2;
    const int count = g.neighbors(r).intersection_count(wi);
    if (mode == EdgeEditMode::remove ? count > 2 : count >= 2)
        return reverify(edited, p, "transfer_barbell_edge_edit");
    return std::nullopt;
}

namespace {

VertexSet drop_and_shift(const VertexSet& s, int v) {
    VertexSet out(s.universe() - 1);
    s.for_each([&](int x) {
        if (x != v) out.set(x < v ? x : x - 1);
    });
    return out;
}

}  // namespace

std::optional<BarbellPartition> transfer_barbell_vertex_removal(const Graph& g, const BarbellPartition& p, int v) {
    require_valid(g, p, "transfer_barbell_vertex_removal");
    check_vertex(g, v, "transfer_barbell_vertex_removal");
    const Graph smaller = remove_vertex(g, v);
    auto shifted = [&]() {
        return BarbellPartition{drop_and_shift(p.r, v), drop_and_shift(p.w1, v), drop_and_shift(p.w2, v)};
    };
    const int cls = classify(p, v);
    if (cls == 0) return reverify(smaller, shifted(), "transfer_barbell_vertex_removal");
    const VertexSet& wi = cls == 1 ? p.w1 : p.w2;
    if (wi.count() < 2) return std::nullopt;  // W_i must stay nonempty
    bool applies = g.neighbors(v).subset_of(wi);
    if (!applies) {
        applies = true;
        (g.neighbors(v) & p.r).for_each([&](int u) {
            if (g.neighbors(u).intersection_count(wi) <= 2) applies = false;
        });
    }
    if (!applies) return std::nullopt;
    return reverify(smaller, shifted(), "transfer_barbell_vertex_removal");
}

std::optional<BarbellPartition> transfer_barbell_vertex_extension(const Graph& g, const BarbellPartition& p,
                                                                  const VertexSet& nbrs) {
    require_valid(g, p, "transfer_barbell_vertex_extension");
    if (nbrs.universe() != g.order()) throw std::invalid_argument("transfer_barbell_vertex_extension: set universe mismatch");
    const Graph extended = add_vertex_with_neighbors(g, nbrs);
    const int v = g.order();
    auto widened = [&](int cls) {
        BarbellPartition q{widen(p.r, v + 1), widen(p.w1, v + 1), widen(p.w2, v + 1)};
        (cls == 0 ? q.r : cls == 1 ? q.w1 : q.w2).set(v);
        return q;
    };
    // All neighbors inside a single class: the new vertex joins it.
    for (int cls : {1, 2, 0}) {
        const VertexSet& part = cls == 0 ? p.r : cls == 1 ? p.w1 : p.w2;
        if (nbrs.subset_of(part)) return reverify(extended, widened(cls), "transfer_barbell_vertex_extension");
    }
    // != 1 neighbors in each W: the new vertex can sit in R.
    if (nbrs.intersection_count(p.w1) != 1 && nbrs.intersection_count(p.w2) != 1)
        return reverify(extended, widened(0), "transfer_barbell_vertex_extension");
    // Neighbors confined to R u W_i with every R-neighbor holding >= 2
    // W_i-neighbors already: the new vertex joins W_i.
    for (int cls : {1, 2}) {
        const VertexSet& wi = cls == 1 ? p.w1 : p.w2;
        if (!(nbrs - p.r - wi).empty()) continue;
        bool ok = true;
        (nbrs & p.r).for_each([&](int u) {
            if (g.neighbors(u).intersection_count(wi) < 2) ok = false;
        });
        if (ok) return reverify(extended, widened(cls), "transfer_barbell_vertex_extension");
    }
    return std::nullopt;
}

std::pair<BarbellPartition, BarbellPartition> transfer_barbell_dup(const Graph& g, const BarbellPartition& p, int v) {
    require_valid(g, p, "transfer_barbell_dup");
    check_vertex(g, v, "transfer_barbell_dup");
    const int u = g.order();
    const int cls = classify(p, v);
    auto extend = [&](const Graph& bigger) {
        BarbellPartition q{widen(p.r, u + 1), widen(p.w1, u + 1), widen(p.w2, u + 1)};
        (cls == 0 ? q.r : cls == 1 ? q.w1 : q.w2).set(u);
        return reverify(bigger, q, "transfer_barbell_dup");
    };
    return {extend(dup(g, v)), extend(jdup(g, v))};
}

bool dup_creates_barbell(const Graph& g, int v) {
    check_vertex(g, v, "dup_creates_barbell");
    auto cert = find_barbell_partition(g);
    if (cert.verdict == Verdict::budget_exceeded)
        throw budget_error("dup_creates_barbell: could not establish the precondition");
    if (cert.verdict == Verdict::admits)
        throw std::invalid_argument("dup_creates_barbell: graph already admits a barbell partition");
    VertexSet outside = VertexSet::full(g.order()) - g.closed_neighborhood(VertexSet::of(g.order(), {v}));
    return extract_fort_within(g, outside).has_value();
}

BarbellPartition transfer_barbell_join(const Graph& g, const Graph& h, const BarbellPartition& p_h) {
    require_valid(h, p_h, "transfer_barbell_join");
    if (g.min_degree() == 0 || h.min_degree() == 0)
        throw std::invalid_argument("transfer_barbell_join: factors must have no isolated vertices");
    if (p_h.w1.count() < 2 || p_h.w2.count() < 2)
        throw std::invalid_argument("transfer_barbell_join: need |W1|,|W2| >= 2");
    const Graph k = join_graphs(g, h);
    const int n = k.order();
    BarbellPartition q{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int a = 0; a < g.order(); ++a) q.r.set(a);
    p_h.r.for_each([&](int b) { q.r.set(g.order() + b); });
    p_h.w1.for_each([&](int b) { q.w1.set(g.order() + b); });
    p_h.w2.for_each([&](int b) { q.w2.set(g.order() + b); });
    return reverify(k, q, "transfer_barbell_join");
}

bool join_admits(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("join_admits: factors must be nonempty");
    if (g.min_degree() == 0 || h.min_degree() == 0)
        throw std::invalid_argument("join_admits: factors must have no isolated vertices");
    // Without isolated vertices every partition of a factor already has
    // |W1|,|W2| >= 2, so the side condition collapses to plain existence.
    auto cg = find_barbell_partition(g);
    auto ch = find_barbell_partition(h);
    if (cg.verdict == Verdict::budget_exceeded || ch.verdict == Verdict::budget_exceeded)
        throw budget_error("join_admits: factor search exceeded its budget");
    return cg.verdict == Verdict::admits || ch.verdict == Verdict::admits;
}

BarbellPartition transfer_barbell_vertex_sum(const Graph& g, int u, const Graph& h, int w,
                                             const std::optional<BarbellPartition>& p_h) {
    check_vertex(g, u, "transfer_barbell_vertex_sum");
    check_vertex(h, w, "transfer_barbell_vertex_sum");
    const Graph k = vertex_sum(g, u, h, w);
    const int n = k.order();
    if (p_h) {
        require_valid(h, *p_h, "transfer_barbell_vertex_sum");
        const int cls = classify(*p_h, w);
        BarbellPartition q{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (int x = 0; x < h.order(); ++x) {
            int id = vertex_sum_h_id(g, u, w, x);
            int c = classify(*p_h, x);
            (c == 0 ? q.r : c == 1 ? q.w1 : q.w2).set(id);
        }
        // V(g) follows the identified vertex's class.
        for (int a = 0; a < g.order(); ++a)
            if (a != u) (cls == 0 ? q.r : cls == 1 ? q.w1 : q.w2).set(a);
        return reverify(k, q, "transfer_barbell_vertex_sum");
    }
    if (g.is_path_graph() || h.is_path_graph())
        throw std::invalid_argument("transfer_barbell_vertex_sum: without a supplied partition both factors must be non-paths");
    // A single vertex never forces a non-path, so each side holds a fort
    // avoiding the glued vertex; together they form a separated pair.
    auto fg = extract_fort_within(g, VertexSet::full(g.order()) - VertexSet::of(g.order(), {u}));
    auto fh = extract_fort_within(h, VertexSet::full(h.order()) - VertexSet::of(h.order(), {w}));
    if (!fg || !fh) throw std::logic_error("transfer_barbell_vertex_sum: non-path factor without a fort avoiding the glued vertex");
    VertexSet f1(n), f2(n);
    fg->vertices.for_each([&](int a) { f1.set(a); });
    fh->vertices.for_each([&](int x) { f2.set(vertex_sum_h_id(g, u, w, x)); });
    return forts_to_barbell(k, Fort{f1}, Fort{f2});
}

BarbellPartition barbell_corona(const Graph& g, const Graph& h) {
    const int k = g.order(), m = h.order();
    if (k < 2 || m < 2) throw std::invalid_argument("barbell_corona: both factors need at least two vertices");
    const Graph c = corona(g, h);
    const int n = c.order();
    BarbellPartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int a = 0; a < m; ++a) {
        p.w1.set(k + a);       // copy attached to g_1
        p.w2.set(k + m + a);   // copy attached to g_2
    }
    p.r = VertexSet::full(n) - (p.w1 | p.w2);
    return reverify(c, p, "barbell_corona");
}

BarbellPartition lift_barbell_product(const Graph& g, const Graph& h, const BarbellPartition& p_h, ProductKind kind) {
    require_valid(h, p_h, "lift_barbell_product");
    if (kind == ProductKind::strong) throw std::invalid_argument("lift_barbell_product: cylinder lift covers cartesian and tensor only");
    if (g.order() == 0) throw std::invalid_argument("lift_barbell_product: empty first factor");
    ProductVertexMap map;
    const Graph prod = product_graph(g, h, kind, &map);
    BarbellPartition q{VertexSet(prod.order()), VertexSet(prod.order()), VertexSet(prod.order())};
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            int c = classify(p_h, b);
            (c == 0 ? q.r : c == 1 ? q.w1 : q.w2).set(map.id(a, b));
        }
    return reverify(prod, q, "lift_barbell_product");
}

BarbellPartition barbell_cartesian_disjoint_forts(const Graph& g, const Graph& h, const Fort& fg1, const Fort& fg2,
                                                  const Fort& fh1, const Fort& fh2) {
    if (!is_fort(g, fg1.vertices) || !is_fort(g, fg2.vertices))
        throw std::invalid_argument("barbell_cartesian_disjoint_forts: first factor sets are not forts");
    if (!is_fort(h, fh1.vertices) || !is_fort(h, fh2.vertices))
        throw std::invalid_argument("barbell_cartesian_disjoint_forts: second factor sets are not forts");
    if (fg1.vertices.intersects(fg2.vertices) || fh1.vertices.intersects(fh2.vertices))
        throw std::invalid_argument("barbell_cartesian_disjoint_forts: fort pairs must be disjoint");
    ProductVertexMap map;
    const Graph prod = product_graph(g, h, ProductKind::cartesian, &map);
    BarbellPartition q{VertexSet(prod.order()), VertexSet(prod.order()), VertexSet(prod.order())};
    fg1.vertices.for_each([&](int a) { fh1.vertices.for_each([&](int b) { q.w1.set(map.id(a, b)); }); });
    fg2.vertices.for_each([&](int a) { fh2.vertices.for_each([&](int b) { q.w2.set(map.id(a, b)); }); });
    q.r = VertexSet::full(prod.order()) - (q.w1 | q.w2);
    return reverify(prod, q, "barbell_cartesian_disjoint_forts");
}

std::pair<Graph, BarbellPartition> barbell_prism(int k, int m) {
    if (k < 4) throw std::invalid_argument("barbell_prism: need k >= 4");
    if (m < 1) throw std::invalid_argument("barbell_prism: need m >= 1");
    ProductVertexMap map;
    const Graph prod = product_graph(cycle_graph(k), cycle_graph(m * k), ProductKind::cartesian, &map);
    BarbellPartition p{VertexSet(prod.order()), VertexSet(prod.order()), VertexSet(prod.order())};
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < m * k; ++b) {
            int residue = ((b - a) % k + k) % k;
            if (residue == 0)
                p.w1.set(map.id(a, b));
            else if (residue == 1 || residue == k - 1)
                p.r.set(map.id(a, b));
            else
                p.w2.set(map.id(a, b));
        }
    return {prod, reverify(prod, p, "barbell_prism")};
}

std::pair<Graph, BarbellPartition> barbell_tensor_complete(int n, int m) {
    if (n < 2) throw std::invalid_argument("barbell_tensor_complete: need n >= 2");
    if (m < 6) throw std::invalid_argument("barbell_tensor_complete: need m >= 6");
    ProductVertexMap map;
    const Graph prod = product_graph(complete_graph(n), complete_graph(m), ProductKind::tensor, &map);
    BarbellPartition p{VertexSet(prod.order()), VertexSet(prod.order()), VertexSet(prod.order())};
    const int half = (m + 1) / 2;
    for (int j = 0; j < m; ++j)
        (j < half ? p.w1 : p.w2).set(map.id(0, j));
    p.r = VertexSet::full(prod.order()) - (p.w1 | p.w2);
    return {prod, reverify(prod, p, "barbell_tensor_complete")};
}

BarbellPartition barbell_nonadjacent_pair(const Graph& g, const Graph& h, int u, int v, ProductKind kind) {
    check_vertex(g, u, "barbell_nonadjacent_pair");
    check_vertex(g, v, "barbell_nonadjacent_pair");
    if (u == v) throw std::invalid_argument("barbell_nonadjacent_pair: u and v must differ");
    if (g.has_edge(u, v)) throw std::invalid_argument("barbell_nonadjacent_pair: u and v must be non-adjacent");
    if (kind == ProductKind::cartesian) throw std::invalid_argument("barbell_nonadjacent_pair: covers tensor and strong only");
    if (h.order() < 2) throw std::invalid_argument("barbell_nonadjacent_pair: second factor needs more than one vertex");
    if (kind == ProductKind::tensor && structural_queries(h).pendant_vertices.count() > 0)
        throw std::invalid_argument("barbell_nonadjacent_pair: tensor construction needs a pendant-free second factor");
    ProductVertexMap map;
    const Graph prod = product_graph(g, h, kind, &map);
    if (!g.connected() || !h.connected()) {
        // Disconnected factor: the product is disconnected and the component
        // split already settles it.
        auto comps = prod.components();
        if (comps.size() < 2) throw std::logic_error("barbell_nonadjacent_pair: disconnected factor gave a connected product");
        BarbellPartition p{VertexSet(prod.order()), comps.front(), VertexSet(prod.order())};
        for (size_t i = 1; i < comps.size(); ++i) p.w2 |= comps[i];
        return reverify(prod, p, "barbell_nonadjacent_pair");
    }
    BarbellPartition p{VertexSet(prod.order()), VertexSet(prod.order()), VertexSet(prod.order())};
    for (int b = 0; b < h.order(); ++b) {
        p.w1.set(map.id(u, b));
        p.w2.set(map.id(v, b));
    }
    p.r = VertexSet::full(prod.order()) - (p.w1 | p.w2);
    return reverify(prod, p, "barbell_nonadjacent_pair");
}

}  // namespace barbell
