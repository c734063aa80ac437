#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "barbell/budget.hpp"
#include "barbell/graph.hpp"

namespace barbell {

// Nonempty vertex set F such that no vertex outside F is adjacent to exactly
// one member of F.  V(G) itself qualifies for every graph with n >= 1 (the
// criterion is vacuous when nothing lies outside).
struct Fort {
    VertexSet vertices;

    int graph_order() const { return vertices.universe(); }
};

// Color-change closure: starting from the blue set S, a blue vertex with a
// unique white neighbor forces it blue, until no rule applies.  The result is
// independent of application order.
VertexSet zero_forcing_closure(const Graph& g, const VertexSet& s);

bool is_zero_forcing_set(const Graph& g, const VertexSet& s);

bool is_fort(const Graph& g, const VertexSet& f);

// Closure-based fort extraction: the complement of closure(V - S) is a fort
// contained in S whenever the closure stalls, and no fort lies in S otherwise.
std::optional<Fort> extract_fort_within(const Graph& g, const VertexSet& s);

// All inclusion-minimal forts, in lexicographic order by ascending member
// list.  Branch-and-bound over in/out decisions per vertex; practical up to
// roughly 24 vertices.  With `limit`, stops once that many minimal forts have
// been collected (the lexicographically sorted prefix of the search order).
std::vector<Fort> enumerate_minimal_forts(const Graph& g, std::optional<size_t> limit = std::nullopt,
                                          SearchBudget* budget = nullptr);

// A disjoint, mutually non-adjacent pair of forts, or nullopt only after a
// complete search proves none exists.  Pairs of minimal forts are tried
// first, then for each minimal fort F the closure-based extraction inside
// V - N[F]; if any separated pair exists, some minimal fort yields one this
// way, so the search is exhaustive.
std::optional<std::pair<Fort, Fort>> separated_fort_pair(const Graph& g, SearchBudget* budget = nullptr);

}  // namespace barbell
