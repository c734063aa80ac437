#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "barbell/graph.hpp"
#include "barbell/rational.hpp"

namespace barbell {

enum class Arithmetic { rational, floating };

// Dense symmetric matrix with exact rational entries.  The pattern graph has
// an edge ij exactly where i != j and a_ij != 0; the diagonal is free.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n, Arithmetic mode = Arithmetic::rational);

    int order() const { return n_; }
    Arithmetic mode() const { return mode_; }
    void set_mode(Arithmetic m) { mode_ = m; }

    const Rational& at(int i, int j) const;
    void set(int i, int j, const Rational& value);  // keeps symmetry

    Graph pattern() const;
    bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    Arithmetic mode_ = Arithmetic::rational;
    std::vector<Rational> a_;  // row-major
};

Graph pattern_of(const SymMatrix& a);
bool in_s_of(const SymMatrix& a, const Graph& g);

enum class MatrixProperty { sap, ssp, smp };

const char* to_string(MatrixProperty p);

// Kernel report for the linear system defining a property.  Unknowns are the
// off-pattern entries x_ij (i < j, ij not an edge); holds iff the kernel is
// trivial.  Witness matrices satisfy every defining constraint exactly
// (rational mode only).
struct PropertyReport {
    MatrixProperty property = MatrixProperty::ssp;
    Arithmetic arithmetic = Arithmetic::rational;
    int unknowns = 0;
    int rank = 0;
    int kernel_dim = 0;
    bool holds = false;
    bool indeterminate = false;  // floating mode: singular values straddle the cutoff
    double tolerance = 0.0;
    std::vector<SymMatrix> witness;
};

// Constraint rows: SSP uses the strict upper triangle of [A,X] (a commutator
// of symmetric matrices is skew); SAP uses all n^2 entries of AX; SMP adds
// the trace rows tr(A^i X), i = 2..n-1, to the SSP rows.  Rational mode ranks
// by fraction-free elimination; floating mode by singular-value threshold.
PropertyReport property_kernel(const SymMatrix& a, MatrixProperty prop,
                               Arithmetic arithmetic = Arithmetic::rational, double tol = 1e-9);

// Even-cycle family: pattern C_n, first n/2 diagonal entries lambda, the rest
// -lambda, every cycle edge b.  Verified to satisfy the SSP on construction.
SymMatrix cn_even_matrix(int n, const Rational& lambda, const Rational& b);

// Pendant-duplication family over the complete block A (pattern K_n):
// B = [[A, e_n, e_n], [e_n^T, mu1, 0], [e_n^T, 0, mu2]], mu1 != mu2.
SymMatrix lollipop_jdup_matrix(const SymMatrix& a, const Rational& mu1, const Rational& mu2);

// Corona family: B = [[A, D_mu], [D_mu, lambda I]], pattern K_n o K_1, with
// nonzero mu of pairwise distinct magnitudes.
SymMatrix corona_matrix(const SymMatrix& a, const std::vector<Rational>& mu, const Rational& lambda);

// Seeded random element of S(G): edge entries are dyadic rationals with
// magnitude in [1/4, 4] and random sign, diagonal dyadic in [-2, 2].
SymMatrix sample_matrix(const Graph& g, uint64_t seed);

struct EvidenceReport {
    int trials = 0;
    int ssp_count = 0;
    int sap_count = 0;
    int smp_count = 0;
    std::optional<int> non_ssp_trial;
    std::optional<SymMatrix> non_ssp_witness;
};

// Property counts over sampled matrices.  Evidence only: says nothing about
// the graph's class membership in either direction.
EvidenceReport ssp_evidence(const Graph& g, int trials, uint64_t seed);

// Plain text format: first line n, then n rows of entries ("p/q", integers,
// or finite decimals).  Symmetry is validated exactly.
SymMatrix read_matrix(std::istream& in);
void write_matrix(const SymMatrix& a, std::ostream& out);

}  // namespace barbell
