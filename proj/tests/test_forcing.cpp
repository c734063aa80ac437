#include "doctest.h"

#include "barbell/catalog.hpp"
#include "barbell/forcing.hpp"
#include "barbell/graph.hpp"
#include "barbell/rng.hpp"

using namespace barbell;

namespace {

uint64_t mask_of(const VertexSet& s) {
    uint64_t m = 0;
    s.for_each([&](int v) { m |= uint64_t(1) << v; });
    return m;
}

}  // namespace

TEST_CASE("zero forcing closure") {
    Graph p4 = path_graph(4);
    CHECK(zero_forcing_closure(p4, VertexSet::of(4, {0})) == VertexSet::full(4));
    Graph c4 = cycle_graph(4);
    CHECK(zero_forcing_closure(c4, VertexSet::of(4, {0})) == VertexSet::of(4, {0}));
    CHECK(zero_forcing_closure(petersen_graph(), VertexSet(10)).empty());

    CHECK(is_zero_forcing_set(p4, VertexSet::of(4, {0})));
    CHECK(!is_zero_forcing_set(c4, VertexSet::of(4, {0})));
    CHECK(is_zero_forcing_set(c4, VertexSet::full(4)));
}

TEST_CASE("closure is monotone and idempotent") {
    SplitMix64 rng(0xC105u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng.below(10));
        Graph g = random_graph(n, int(rng.below(900)), rng);
        uint64_t smask = rng.below(uint64_t(1) << n);
        uint64_t tmask = smask | rng.below(uint64_t(1) << n);
        VertexSet s(n), t(n);
        for (int v = 0; v < n; ++v) {
            if (smask & (uint64_t(1) << v)) s.set(v);
            if (tmask & (uint64_t(1) << v)) t.set(v);
        }
        VertexSet cs = zero_forcing_closure(g, s);
        CHECK(cs.subset_of(zero_forcing_closure(g, t)));
        CHECK(zero_forcing_closure(g, cs) == cs);
        CHECK(s.subset_of(cs));
    }
}

TEST_CASE("fort recognition") {
    // Two leaves of the claw: the center sees 2, the third leaf sees 0.
    CHECK(is_fort(star_graph(3), VertexSet::of(4, {1, 2})));
    // Opposite vertices of C_4.
    CHECK(is_fort(cycle_graph(4), VertexSet::of(4, {0, 2})));
    // One interior vertex of P_4: its neighbor sees exactly one.
    CHECK(!is_fort(path_graph(4), VertexSet::of(4, {1})));
    CHECK(!is_fort(path_graph(4), VertexSet(4)));
    // V(G) is a fort of every graph with n >= 1, including K_1.
    CHECK(is_fort(complete_graph(1), VertexSet::full(1)));
    CHECK(is_fort(path_graph(4), VertexSet::full(4)));
}

TEST_CASE("fort extraction from a stalled closure") {
    Graph p4 = path_graph(4);
    CHECK(!extract_fort_within(p4, VertexSet::of(4, {1, 2, 3})).has_value());
    Graph c4 = cycle_graph(4);
    auto f = extract_fort_within(c4, VertexSet::of(4, {1, 2, 3}));
    REQUIRE(f.has_value());
    CHECK(f->vertices.subset_of(VertexSet::of(4, {1, 2, 3})));
    CHECK(is_fort(c4, f->vertices));
    CHECK(f->vertices == VertexSet::of(4, {1, 2, 3}));
    CHECK(!extract_fort_within(c4, VertexSet(4)).has_value());
}

TEST_CASE("minimal fort enumeration on the named examples") {
    auto forts = enumerate_minimal_forts(cycle_graph(4));
    REQUIRE(forts.size() == 2);
    CHECK(forts[0].vertices == VertexSet::of(4, {0, 2}));
    CHECK(forts[1].vertices == VertexSet::of(4, {1, 3}));

    // Minimal forts of K_4 are exactly the six 2-subsets.
    auto k4 = enumerate_minimal_forts(complete_graph(4));
    CHECK(k4.size() == 6);
    for (const auto& f : k4) CHECK(f.vertices.count() == 2);

    // P_3: the endpoint pair {1,3} is the unique minimal fort (the middle
    // vertex sees both).
    auto p3 = enumerate_minimal_forts(path_graph(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].vertices == VertexSet::of(3, {0, 2}));

    // K_1: the whole vertex set, by convention.
    auto k1 = enumerate_minimal_forts(complete_graph(1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].vertices == VertexSet::full(1));
}

TEST_CASE("minimal forts agree with the exhaustive filter on random graphs") {
    SplitMix64 rng(0xF027u);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng.below(7));
        Graph g = random_graph(n, 100 + int(rng.below(800)), rng);
        // Exhaustive: forts with no proper fort subset.
        std::vector<uint64_t> expected;
        for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (uint64_t(1) << v)) s.set(v);
            if (!is_fort(g, s)) continue;
            bool minimal = true;
            for (uint64_t sub = (mask - 1) & mask; sub && minimal; sub = (sub - 1) & mask) {
                VertexSet t(n);
                for (int v = 0; v < n; ++v)
                    if (sub & (uint64_t(1) << v)) t.set(v);
                if (is_fort(g, t)) minimal = false;
            }
            if (minimal) expected.push_back(mask);
        }
        auto got = enumerate_minimal_forts(g);
        REQUIRE(got.size() == expected.size());
        for (const auto& f : got) {
            CHECK(is_fort(g, f.vertices));
            CHECK(std::find(expected.begin(), expected.end(), mask_of(f.vertices)) != expected.end());
        }
        // Lexicographic output order.
        for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i].vertices.lex_less(got[i + 1].vertices));
    }
}

TEST_CASE("fort enumeration respects limit and budget") {
    auto limited = enumerate_minimal_forts(complete_graph(5), 3);
    CHECK(limited.size() == 3);
    SearchBudget tiny(10);
    CHECK_THROWS_AS(enumerate_minimal_forts(petersen_graph(), std::nullopt, &tiny), budget_error);
}

TEST_CASE("separated fort pairs") {
    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    auto pair = separated_fort_pair(two_k2);
    REQUIRE(pair.has_value());
    CHECK(!pair->first.vertices.intersects(pair->second.vertices));
    CHECK(!two_k2.neighborhood(pair->first.vertices).intersects(pair->second.vertices));

    CHECK(!separated_fort_pair(petersen_graph()).has_value());
    // C_4's two forts are adjacent to each other.
    CHECK(!separated_fort_pair(cycle_graph(4)).has_value());
}
