#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barbell/budget.hpp"
#include "barbell/forcing.hpp"
#include "barbell/graph.hpp"

namespace barbell {

// Tripartition {R, W1, W2} of V(G): W1 and W2 nonempty and mutually
// non-adjacent, and every vertex of R has != 1 neighbors in each W_i.
// R may be empty.  Its existence certifies that some symmetric matrix with
// this pattern lacks the strong spectral property.
struct BarbellPartition {
    VertexSet r;
    VertexSet w1;
    VertexSet w2;

    int graph_order() const { return w1.universe(); }
};

struct PartitionCheck {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks every clause and reports each violation with a witness vertex/edge.
PartitionCheck verify_barbell_partition(const Graph& g, const BarbellPartition& p);

// The fort correspondence: {W1, W2} of a valid partition is a separated fort
// pair, and conversely R = V - (F1 u F2) completes any separated pair into a
// partition.  Both directions validate their input and round-trip exactly.
std::pair<Fort, Fort> barbell_to_forts(const Graph& g, const BarbellPartition& p);
BarbellPartition forts_to_barbell(const Graph& g, const Fort& f1, const Fort& f2);

enum class Verdict { admits, does_not_admit, budget_exceeded };
enum class Method { structural, separated_forts, brute_force, constructive_transfer };

const char* to_string(Verdict v);
const char* to_string(Method m);

struct BarbellCertificate {
    Verdict verdict = Verdict::budget_exceeded;
    std::optional<BarbellPartition> partition;
    Method method = Method::structural;
    std::string notes;
};

// Cut-set shortcut: with S a cut set whose every attachment vertex has at
// least two neighbors in each adjacent component, R = S and one component
// against the rest form a partition.
std::optional<BarbellPartition> cutset_barbell(const Graph& g, const VertexSet& s);

// Fast structural decisions: disconnection, cut-vertex groupings and
// hub-pair splits (which cover the qualifying trees, unicyclic graphs and
// multi-cycle cacti), and the negative shortcut for connected graphs of
// diameter 2 and maximum degree 3.  nullopt when no shortcut applies.
std::optional<BarbellCertificate> structural_screen(const Graph& g);

struct FindOptions {
    int brute_cap = 15;                                  // max order for the 3^n stage
    uint64_t fort_budget = SearchBudget::kDefaultCap;    // node cap for fort search
};

// Three-stage pipeline: structural screen, complete separated-fort search,
// then (within the vertex cap) exhaustive tripartition search.  A
// does_not_admit verdict only ever comes from a completed exhaustive stage or
// the degree/diameter shortcut.
BarbellCertificate find_barbell_partition(const Graph& g, const FindOptions& opts = {});

// Plain 3^n enumeration oracle: first valid partition in lexicographic
// assignment order (classes R < W1 < W2 per vertex), or nullopt.  The OpenMP
// variant shards the assignment prefix space and returns the identical
// lexicographically-least witness.
std::optional<BarbellPartition> brute_force_barbell(const Graph& g, int cap = 15);
std::optional<BarbellPartition> brute_force_barbell_serial(const Graph& g, int cap = 15);

// |W1|,|W2| >= 2 holds for every partition of a graph without isolated
// vertices; vacuously true when the hypothesis fails.
bool noiso_bound_check(const Graph& g, const BarbellPartition& p);

}  // namespace barbell
