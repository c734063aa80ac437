#include "doctest.h"

#include "barbell/barbell.hpp"
#include "barbell/forcing.hpp"
#include "barbell/graph.hpp"
#include "barbell/ops.hpp"
#include "barbell/rng.hpp"

using namespace barbell;

TEST_CASE("a vertex and its duplicate form a fort of the doubled graph") {
    SplitMix64 rng(0xF0F0u);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + int(rng.below(7));
        Graph g = random_graph(n, 100 + int(rng.below(800)), rng);
        int v = int(rng.below(uint64_t(n)));
        VertexSet pair = VertexSet::of(n + 1, {v, n});
        CHECK(is_fort(dup(g, v), pair));
        CHECK(is_fort(jdup(g, v), pair));
    }
}

TEST_CASE("duplication") {
    // dup(K_2, v): the copy sees only the other endpoint, giving P_3.
    CHECK(dup(path_graph(2), 0) == path_graph(3));
    // jdup(K_2, v) = K_3.
    CHECK(jdup(path_graph(2), 0) == complete_graph(3));
    // dup(P_3, center) = C_4 up to labels.
    Graph c = dup(path_graph(3), 1);
    CHECK(c.order() == 4);
    CHECK(c.edge_count() == 4);
    CHECK(c.has_edge(3, 0));
    CHECK(c.has_edge(3, 2));
    CHECK(!c.has_edge(3, 1));
    CHECK_THROWS_AS(dup(path_graph(3), 7), std::invalid_argument);
}

TEST_CASE("edit operations") {
    CHECK(add_edge(path_graph(3), 0, 2) == cycle_graph(3));
    CHECK(remove_vertex(cycle_graph(4), 3) == path_graph(3));
    CHECK(remove_set(complete_graph(4), VertexSet::of(4, {0, 1})) == complete_graph(2));
    CHECK(remove_edge(cycle_graph(3), 0, 2) == path_graph(3));
    Graph g = add_vertex_with_neighbors(path_graph(2), VertexSet::of(2, {0, 1}));
    CHECK(g == complete_graph(3));
    CHECK_THROWS_AS(add_edge(complete_graph(3), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(remove_edge(path_graph(3), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(remove_vertex(path_graph(3), 3), std::invalid_argument);
}

TEST_CASE("join, vertex sum, corona sizes and shapes") {
    Graph wheel = join_graphs(complete_graph(1), cycle_graph(4));
    CHECK(wheel.order() == 5);
    CHECK(wheel.edge_count() == 8);

    // P_3 + P_3 glued at both centers is a 4-leaf star around the glue.
    Graph vs = vertex_sum(path_graph(3), 1, path_graph(3), 1);
    CHECK(vs.order() == 5);
    CHECK(vs.edge_count() == 4);
    CHECK(vs.degree(1) == 4);

    Graph cor = corona(complete_graph(2), complete_graph(2));
    CHECK(cor.order() == 2 + 2 * 2);
    CHECK(cor.edge_count() == 1 + 2 * (1 + 2));
}

TEST_CASE("products match their defining edge rules and counts") {
    Graph k6 = strong_product(complete_graph(2), complete_graph(3));
    CHECK(k6.order() == 6);
    CHECK(k6.is_complete());

    Graph t = tensor_product(path_graph(2), path_graph(2));
    CHECK(t.order() == 4);
    CHECK(t.edge_count() == 2);
    CHECK(t.components().size() == 2);  // 2K_2

    SplitMix64 rng(0x90DCu);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(2 + int(rng.below(4)), 200 + int(rng.below(600)), rng);
        Graph h = random_graph(2 + int(rng.below(4)), 200 + int(rng.below(600)), rng);
        ProductVertexMap map;
        Graph cart = cartesian_product(g, h, &map);
        Graph tens = tensor_product(g, h);
        Graph strong = strong_product(g, h);
        CHECK(cart.edge_count() == g.edge_count() * h.order() + h.edge_count() * g.order());
        CHECK(tens.edge_count() == 2 * g.edge_count() * h.edge_count());
        CHECK(strong.edge_count() == cart.edge_count() + tens.edge_count());
        // The strong product's edges are exactly the union, disjointly.
        for (int a = 0; a < strong.order(); ++a)
            strong.neighbors(a).for_each([&](int b) {
                CHECK(cart.has_edge(a, b) != tens.has_edge(a, b));
            });
        // Vertex map is a bijection.
        std::vector<bool> seen(size_t(g.order()) * h.order(), false);
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < h.order(); ++y) {
                int id = map.id(x, y);
                CHECK(!seen[id]);
                seen[id] = true;
                auto [xx, yy] = map.factors(id);
                CHECK(xx == x);
                CHECK(yy == y);
            }
    }
}

TEST_CASE("edge edit transfer") {
    // K_{1,4} partitioned around its center.
    Graph star = star_graph(4);
    BarbellPartition p{VertexSet::of(5, {0}), VertexSet::of(5, {1, 2}), VertexSet::of(5, {3, 4})};

    // Endpoints sharing a class: add an edge between the two W1 leaves.
    auto q = transfer_barbell_edge_edit(star, p, 1, 2, EdgeEditMode::add);
    REQUIRE(q.has_value());
    CHECK(verify_barbell_partition(add_edge(star, 1, 2), *q).valid);

    // Same-class removal is an exact equivalence: removing it again restores
    // validity on the original.
    Graph plus = add_edge(star, 1, 2);
    auto back = transfer_barbell_edge_edit(plus, *q, 1, 2, EdgeEditMode::remove);
    REQUIRE(back.has_value());
    CHECK(verify_barbell_partition(star, *back).valid);

    // R endpoint with only 2 neighbors in W1: removal hypothesis (> 2) fails.
    CHECK(!transfer_barbell_edge_edit(star, p, 0, 1, EdgeEditMode::remove).has_value());

    // R endpoint with >= 2 neighbors in W1 tolerates a new edge into W1.
    Graph star5 = star_graph(5);
    BarbellPartition p5{VertexSet::of(6, {0}), VertexSet::of(6, {1, 2, 3}), VertexSet::of(6, {4, 5})};
    Graph no01 = remove_edge(star5, 0, 1);
    BarbellPartition p5b = p5;
    auto added = transfer_barbell_edge_edit(no01, p5b, 0, 1, EdgeEditMode::add);
    REQUIRE(added.has_value());
    // R endpoint with > 2 neighbors in W1 tolerates a removal.
    auto removed = transfer_barbell_edge_edit(star5, p5, 0, 1, EdgeEditMode::remove);
    REQUIRE(removed.has_value());
    CHECK(verify_barbell_partition(no01, *removed).valid);
}

TEST_CASE("same-class edge edits always carry the partition over") {
    SplitMix64 rng(0xED17u);
    int partitions = 0;
    for (int trial = 0; trial < 120 && partitions < 25; ++trial) {
        Graph g = random_graph(4 + int(rng.below(6)), 150 + int(rng.below(550)), rng);
        auto cert = find_barbell_partition(g);
        if (cert.verdict != Verdict::admits) continue;
        ++partitions;
        const BarbellPartition& p = *cert.partition;
        auto cls = [&](int v) { return p.w1.test(v) ? 1 : p.w2.test(v) ? 2 : 0; };
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (cls(u) != cls(v)) continue;
                auto mode = g.has_edge(u, v) ? EdgeEditMode::remove : EdgeEditMode::add;
                auto q = transfer_barbell_edge_edit(g, p, u, v, mode);
                REQUIRE(q.has_value());  // co-resident endpoints never block
                Graph edited = mode == EdgeEditMode::remove ? remove_edge(g, u, v) : add_edge(g, u, v);
                CHECK(verify_barbell_partition(edited, *q).valid);
            }
    }
    CHECK(partitions == 25);
}

TEST_CASE("vertex removal and extension transfer") {
    Graph star = star_graph(4);
    BarbellPartition p{VertexSet::of(5, {0}), VertexSet::of(5, {1, 2}), VertexSet::of(5, {3, 4})};

    // Removing an R vertex always transfers.
    auto q = transfer_barbell_vertex_removal(star, p, 0);
    REQUIRE(q.has_value());
    CHECK(verify_barbell_partition(remove_vertex(star, 0), *q).valid);

    // Removing a W vertex whose R-neighbor has only 2 W1-neighbors fails both clauses.
    CHECK(!transfer_barbell_vertex_removal(star, p, 1).has_value());

    // Extension with all neighbors inside W1.
    auto ext = transfer_barbell_vertex_extension(star, p, VertexSet::of(5, {1, 2}));
    REQUIRE(ext.has_value());
    CHECK(verify_barbell_partition(add_vertex_with_neighbors(star, VertexSet::of(5, {1, 2})), *ext).valid);
    CHECK(ext->w1.test(5));

    // Extension with != 1 neighbors in each W joins R.
    auto ext_r = transfer_barbell_vertex_extension(star, p, VertexSet::of(5, {1, 2, 3, 4}));
    REQUIRE(ext_r.has_value());
    CHECK(ext_r->r.test(5));

    // Exactly one neighbor in each W: every clause fails.
    CHECK(!transfer_barbell_vertex_extension(star, p, VertexSet::of(5, {1, 3})).has_value());
}

TEST_CASE("duplication transfer on the running examples") {
    Graph star = star_graph(4);
    BarbellPartition p{VertexSet::of(5, {0}), VertexSet::of(5, {1, 2}), VertexSet::of(5, {3, 4})};
    auto [pd, pj] = transfer_barbell_dup(star, p, 0);  // duplicate the center (in R)
    CHECK(pd.r.count() == 2);
    CHECK(verify_barbell_partition(dup(star, 0), pd).valid);
    CHECK(verify_barbell_partition(jdup(star, 0), pj).valid);

    auto [pd2, pj2] = transfer_barbell_dup(star, p, 1);  // duplicate a W1 leaf
    CHECK(pd2.w1.count() == 3);
    CHECK(verify_barbell_partition(dup(star, 1), pd2).valid);

    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    auto comps = two_k2.components();
    BarbellPartition pk{VertexSet(4), comps[0], comps[1]};
    auto [pk_d, pk_j] = transfer_barbell_dup(two_k2, pk, 0);
    CHECK(pk_d.w1.count() == 3);
    CHECK(verify_barbell_partition(dup(two_k2, 0), pk_d).valid);
    CHECK(verify_barbell_partition(jdup(two_k2, 0), pk_j).valid);
}

TEST_CASE("duplication fort criterion") {
    // A claw leaf: the other two leaves form a fort avoiding N[v].
    CHECK(dup_creates_barbell(star_graph(3), 1));
    // A path endpoint: no fort avoids its closed neighborhood.
    CHECK(!dup_creates_barbell(path_graph(4), 0));
    CHECK(!brute_force_barbell(dup(path_graph(4), 0)).has_value());
    // Petersen: cross-check every vertex against brute force.
    Graph pet = petersen_graph();
    for (int v = 0; v < 10; ++v) {
        bool predicted = dup_creates_barbell(pet, v);
        CHECK(predicted == brute_force_barbell(dup(pet, v)).has_value());
        CHECK(predicted == brute_force_barbell(jdup(pet, v)).has_value());
    }
    // Precondition: the base graph must not already admit a partition.
    CHECK_THROWS_AS(dup_creates_barbell(star_graph(4), 1), std::invalid_argument);
}

TEST_CASE("join transfer and biconditional") {
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto cert = find_barbell_partition(bowtie);
    REQUIRE(cert.verdict == Verdict::admits);
    Graph k = join_graphs(path_graph(2), bowtie);
    auto q = transfer_barbell_join(path_graph(2), bowtie, *cert.partition);
    CHECK(verify_barbell_partition(k, q).valid);
    CHECK(q.r.test(0));
    CHECK(q.r.test(1));

    CHECK(join_admits(path_graph(2), bowtie));
    // K_2 v K_2 = K_4: neither factor admits, so the join admits none.
    CHECK(!join_admits(path_graph(2), path_graph(2)));
    CHECK(!brute_force_barbell(join_graphs(path_graph(2), path_graph(2))).has_value());
    CHECK_THROWS_AS(join_admits(empty_graph(2), path_graph(2)), std::invalid_argument);

    // Dominating vertex over a partitioned graph: R gains the new vertex.
    Graph dom = join_graphs(complete_graph(1), bowtie);
    BarbellPartition shifted{VertexSet(6), VertexSet(6), VertexSet(6)};
    cert.partition->r.for_each([&](int v) { shifted.r.set(v + 1); });
    cert.partition->w1.for_each([&](int v) { shifted.w1.set(v + 1); });
    cert.partition->w2.for_each([&](int v) { shifted.w2.set(v + 1); });
    shifted.r.set(0);
    CHECK(verify_barbell_partition(dom, shifted).valid);
}

TEST_CASE("vertex sum constructions") {
    // Two claws glued at a leaf: both non-paths.
    Graph claw = star_graph(3);
    Graph k = vertex_sum(claw, 1, claw, 1);
    auto p = transfer_barbell_vertex_sum(claw, 1, claw, 1);
    CHECK(verify_barbell_partition(k, p).valid);
    CHECK(brute_force_barbell(k).has_value());

    // P_3 + P_3 glued at both centers = K_{1,4}: admits.
    Graph sum_centers = vertex_sum(path_graph(3), 1, path_graph(3), 1);
    CHECK(brute_force_barbell(sum_centers).has_value());
    // Glued at an endpoint of one: a spider with a single branch vertex of
    // degree 3, no partition.
    Graph sum_endpoint = vertex_sum(path_graph(3), 0, path_graph(3), 1);
    CHECK(!brute_force_barbell(sum_endpoint).has_value());
    CHECK_THROWS_AS(transfer_barbell_vertex_sum(path_graph(3), 0, path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("corona partition") {
    auto p = barbell_corona(complete_graph(2), complete_graph(2));
    CHECK(verify_barbell_partition(corona(complete_graph(2), complete_graph(2)), p).valid);
    CHECK(p.w1.count() == 2);

    auto q = barbell_corona(path_graph(3), path_graph(2));
    Graph c = corona(path_graph(3), path_graph(2));
    CHECK(verify_barbell_partition(c, q).valid);
    // R holds the three hosts and the third copy.
    CHECK(q.r.count() == 3 + 2);
    CHECK_THROWS_AS(barbell_corona(complete_graph(1), complete_graph(2)), std::invalid_argument);
}

TEST_CASE("product lifts") {
    Graph star = star_graph(4);
    BarbellPartition p{VertexSet::of(5, {0}), VertexSet::of(5, {1, 2}), VertexSet::of(5, {3, 4})};
    auto pc = lift_barbell_product(path_graph(2), star, p, ProductKind::cartesian);
    CHECK(verify_barbell_partition(cartesian_product(path_graph(2), star), pc).valid);
    CHECK(pc.w1.count() == 4);
    auto pt = lift_barbell_product(path_graph(2), star, p, ProductKind::tensor);
    CHECK(verify_barbell_partition(tensor_product(path_graph(2), star), pt).valid);
    CHECK_THROWS_AS(lift_barbell_product(path_graph(2), star, p, ProductKind::strong), std::invalid_argument);
}

TEST_CASE("prism partitions") {
    auto [g42, p42] = barbell_prism(4, 2);  // C_4 box C_8
    CHECK(g42.order() == 32);
    CHECK(verify_barbell_partition(g42, p42).valid);
    CHECK(p42.w1.count() == 8);

    auto [g51, p51] = barbell_prism(5, 1);  // odd cycles allowed
    CHECK(verify_barbell_partition(g51, p51).valid);
    CHECK_THROWS_AS(barbell_prism(3, 2), std::invalid_argument);
}

TEST_CASE("tensor of complete graphs") {
    auto [g, p] = barbell_tensor_complete(2, 6);
    CHECK(g.order() == 12);
    CHECK(verify_barbell_partition(g, p).valid);
    auto [g37, p37] = barbell_tensor_complete(3, 7);
    CHECK(p37.w1.count() == 4);
    CHECK(p37.w2.count() == 3);
    CHECK_THROWS_AS(barbell_tensor_complete(3, 3), std::invalid_argument);
}

TEST_CASE("row constructions for tensor and strong products") {
    // tensor(P_3, C_3) on the endpoints of P_3.
    auto p = barbell_nonadjacent_pair(path_graph(3), cycle_graph(3), 0, 2, ProductKind::tensor);
    CHECK(verify_barbell_partition(tensor_product(path_graph(3), cycle_graph(3)), p).valid);
    // strong(P_3, K_2) on the same pair.
    auto q = barbell_nonadjacent_pair(path_graph(3), complete_graph(2), 0, 2, ProductKind::strong);
    CHECK(verify_barbell_partition(strong_product(path_graph(3), complete_graph(2)), q).valid);
    // tensor(P_3, K_2): the second factor has pendant vertices.
    CHECK_THROWS_AS(barbell_nonadjacent_pair(path_graph(3), complete_graph(2), 0, 2, ProductKind::tensor),
                    std::invalid_argument);
    CHECK_THROWS_AS(barbell_nonadjacent_pair(cycle_graph(4), complete_graph(2), 0, 1, ProductKind::strong),
                    std::invalid_argument);  // adjacent pair
}
