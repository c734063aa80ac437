#include "barbell/ssp.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "barbell/rng.hpp"

namespace barbell {

SymMatrix::SymMatrix(int n, Arithmetic mode) : n_(n), mode_(mode), a_(size_t(n) * n) {
    if (n < 0) throw std::invalid_argument("SymMatrix: negative order");
}

const Rational& SymMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SymMatrix::at: index out of range");
    return a_[size_t(i) * n_ + j];
}

void SymMatrix::set(int i, int j, const Rational& value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SymMatrix::set: index out of range");
    a_[size_t(i) * n_ + j] = value;
    a_[size_t(j) * n_ + i] = value;
}

Graph SymMatrix::pattern() const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!at(i, j).is_zero()) g.add_edge(i, j);
    return g;
}

Graph pattern_of(const SymMatrix& a) { return a.pattern(); }

bool in_s_of(const SymMatrix& a, const Graph& g) { return a.order() == g.order() && a.pattern() == g; }

const char* to_string(MatrixProperty p) {
    switch (p) {
        case MatrixProperty::sap: return "sap";
        case MatrixProperty::ssp: return "ssp";
        case MatrixProperty::smp: return "smp";
    }
    return "?";
}

namespace {

// The unknown entries of X: unordered non-edge pairs of the pattern (the
// Hadamard and diagonal constraints zero out everything else).
std::vector<std::pair<int, int>> unknown_pairs(const Graph& pattern) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j)
            if (!pattern.has_edge(i, j)) out.push_back({i, j});
    return out;
}

// Coefficient of unknown x_ij (basis matrix E_ij + E_ji) in ([A,X])_rs.
Rational commutator_coeff(const SymMatrix& a, int r, int s, int i, int j) {
    Rational c;
    if (s == j) c += a.at(r, i);
    if (s == i) c += a.at(r, j);
    if (r == i) c -= a.at(j, s);
    if (r == j) c -= a.at(i, s);
    return c;
}

// Coefficient of x_ij in (AX)_rs.
Rational product_coeff(const SymMatrix& a, int r, int s, int i, int j) {
    Rational c;
    if (s == j) c += a.at(r, i);
    if (s == i) c += a.at(r, j);
    return c;
}

std::vector<std::vector<Rational>> constraint_rows(const SymMatrix& a, MatrixProperty prop,
                                                   const std::vector<std::pair<int, int>>& unknowns) {
    const int n = a.order();
    std::vector<std::vector<Rational>> rows;
    auto add_row = [&](auto&& coeff_fn) {
        std::vector<Rational> row;
        row.reserve(unknowns.size());
        bool nonzero = false;
        for (auto [i, j] : unknowns) {
            row.push_back(coeff_fn(i, j));
            if (!row.back().is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    };

    if (prop == MatrixProperty::sap) {
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                add_row([&](int i, int j) { return product_coeff(a, r, s, i, j); });
        return rows;
    }
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            add_row([&](int i, int j) { return commutator_coeff(a, r, s, i, j); });
    if (prop == MatrixProperty::smp) {
        // tr(A^t X) rows for t = 2..n-1, via one running power of A.
        SymMatrix power = a;
        for (int t = 2; t <= n - 1; ++t) {
            SymMatrix next(n);
            for (int r = 0; r < n; ++r)
                for (int s = r; s < n; ++s) {
                    Rational sum;
                    for (int k = 0; k < n; ++k) sum += power.at(r, k) * a.at(k, s);
                    next.set(r, s, sum);
                }
            power = next;
            add_row([&](int i, int j) { return power.at(i, j) * Rational(2); });
        }
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<int> pivot_cols;
};

// Fraction-free (Bareiss) forward elimination; every division is exact.
Echelon fraction_free_echelon(std::vector<std::vector<BigInt>> m) {
    Echelon e;
    if (m.empty()) return e;
    const size_t cols = m[0].size();
    size_t r = 0;
    BigInt prev(1);
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t pivot_row = r;
        while (pivot_row < m.size() && m[pivot_row][c].is_zero()) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[r], m[pivot_row]);
        const BigInt pivot = m[r][c];
        for (size_t i = r + 1; i < m.size(); ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (pivot * m[i][j] - m[i][c] * m[r][j]).divexact(prev);
            m[i][c] = BigInt(0);
        }
        prev = pivot;
        e.pivot_cols.push_back(int(c));
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

std::vector<std::vector<BigInt>> clear_denominators(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        BigInt lcm(1);
        for (const Rational& x : row)
            if (!x.is_zero()) lcm = (lcm * x.den()).divexact(BigInt::gcd(lcm, x.den()));
        std::vector<BigInt> irow;
        irow.reserve(row.size());
        for (const Rational& x : row) irow.push_back(x.num() * lcm.divexact(x.den()));
        out.push_back(std::move(irow));
    }
    return out;
}

// Nullspace basis from the integer echelon form, one vector per free column.
std::vector<std::vector<Rational>> nullspace_from_echelon(const Echelon& e, int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols);
        x[f] = Rational(1);
        for (size_t ri = e.pivot_cols.size(); ri-- > 0;) {
            const int pc = e.pivot_cols[ri];
            Rational sum;
            for (int j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero() && !e.rows[ri][j].is_zero())
                    sum += Rational(e.rows[ri][j], BigInt(1)) * x[j];
            x[pc] = -sum / Rational(e.rows[ri][pc], BigInt(1));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// One-sided Jacobi: orthogonalize the columns, singular values are the final
// column norms.  Small systems only; plenty for the floating comparison mode.
std::vector<double> singular_values(std::vector<std::vector<double>> m, int cols) {
    if (cols == 0) return {};
    if (m.empty()) return std::vector<double>(cols, 0.0);
    const size_t rows = m.size();
    auto col_dot = [&](int p, int q) {
        double s = 0;
        for (size_t r = 0; r < rows; ++r) s += m[r][p] * m[r][q];
        return s;
    };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < cols; ++p)
            for (int q = p + 1; q < cols; ++q) {
                double app = col_dot(p, p), aqq = col_dot(q, q), apq = col_dot(p, q);
                if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                double zeta = (aqq - app) / (2 * apq);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double cs = 1.0 / std::sqrt(1 + t * t), sn = cs * t;
                for (size_t r = 0; r < rows; ++r) {
                    double vp = m[r][p], vq = m[r][q];
                    m[r][p] = cs * vp - sn * vq;
                    m[r][q] = sn * vp + cs * vq;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sigma(cols);
    for (int c = 0; c < cols; ++c) sigma[c] = std::sqrt(col_dot(c, c));
    std::sort(sigma.rbegin(), sigma.rend());
    return sigma;
}

}  // namespace

PropertyReport property_kernel(const SymMatrix& a, MatrixProperty prop, Arithmetic arithmetic, double tol) {
    const int n = a.order();
    if (n < 1) throw std::invalid_argument("property_kernel: order must be >= 1");
    PropertyReport rep;
    rep.property = prop;
    rep.arithmetic = arithmetic;
    rep.tolerance = arithmetic == Arithmetic::floating ? tol : 0.0;

    const Graph pattern = a.pattern();
    const auto unknowns = unknown_pairs(pattern);
    rep.unknowns = int(unknowns.size());
    if (unknowns.empty()) {
        rep.holds = true;
        return rep;
    }
    const auto rows = constraint_rows(a, prop, unknowns);

    if (arithmetic == Arithmetic::floating) {
        std::vector<std::vector<double>> dm;
        dm.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<double> drow(row.size());
            for (size_t i = 0; i < row.size(); ++i) drow[i] = row[i].to_double();
            dm.push_back(std::move(drow));
        }
        auto sigma = singular_values(std::move(dm), rep.unknowns);
        double smax = sigma.empty() ? 0.0 : sigma.front();
        double cutoff = tol * smax;
        int rank = 0;
        for (double s : sigma)
            if (smax > 0 && s >= cutoff) ++rank;
        rep.rank = rank;
        rep.kernel_dim = rep.unknowns - rank;
        rep.holds = rep.kernel_dim == 0;
        // Flag a murky cutoff: smallest kept and largest dropped values
        // within a factor of 10 of each other.
        if (rank > 0 && rank < int(sigma.size())) {
            double kept = sigma[rank - 1], dropped = sigma[rank];
            if (dropped > 0 && kept / dropped < 10.0) rep.indeterminate = true;
        }
        return rep;
    }

    Echelon ech = fraction_free_echelon(clear_denominators(rows));
    rep.rank = int(ech.pivot_cols.size());
    rep.kernel_dim = rep.unknowns - rep.rank;
    rep.holds = rep.kernel_dim == 0;
    for (const auto& vec : nullspace_from_echelon(ech, rep.unknowns)) {
        SymMatrix x(n);
        for (size_t k = 0; k < unknowns.size(); ++k) x.set(unknowns[k].first, unknowns[k].second, vec[k]);
        rep.witness.push_back(std::move(x));
    }
    return rep;
}

SymMatrix cn_even_matrix(int n, const Rational& lambda, const Rational& b) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("cn_even_matrix: n must be even and >= 4");
    if (lambda.is_zero()) throw std::invalid_argument("cn_even_matrix: lambda must be nonzero");
    if (b.is_zero()) throw std::invalid_argument("cn_even_matrix: b must be nonzero");
    SymMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a.set(i, i, i < n / 2 ? lambda : -lambda);
        a.set(i, (i + 1) % n, b);
    }
    return a;
}

SymMatrix lollipop_jdup_matrix(const SymMatrix& a, const Rational& mu1, const Rational& mu2) {
    const int n = a.order();
    if (!in_s_of(a, complete_graph(n))) throw std::invalid_argument("lollipop_jdup_matrix: block must have pattern K_n");
    if (mu1 == mu2) throw std::invalid_argument("lollipop_jdup_matrix: mu1 and mu2 must differ");
    SymMatrix b(n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) b.set(i, j, a.at(i, j));
    b.set(n - 1, n, Rational(1));
    b.set(n - 1, n + 1, Rational(1));
    b.set(n, n, mu1);
    b.set(n + 1, n + 1, mu2);
    auto rep = property_kernel(b, MatrixProperty::ssp);
    if (!rep.holds) throw std::logic_error("lollipop_jdup_matrix: constructed matrix failed its SSP check");
    return b;
}

SymMatrix corona_matrix(const SymMatrix& a, const std::vector<Rational>& mu, const Rational& lambda) {
    const int n = a.order();
    if (!in_s_of(a, complete_graph(n))) throw std::invalid_argument("corona_matrix: block must have pattern K_n");
    if (int(mu.size()) != n) throw std::invalid_argument("corona_matrix: need n values of mu");
    for (int i = 0; i < n; ++i) {
        if (mu[i].is_zero()) throw std::invalid_argument("corona_matrix: mu must be nonzero");
        for (int j = i + 1; j < n; ++j)
            if (mu[i].abs() == mu[j].abs())
                throw std::invalid_argument("corona_matrix: |mu_" + std::to_string(i + 1) + "| and |mu_" +
                                            std::to_string(j + 1) + "| collide");
    }
    SymMatrix b(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) b.set(i, j, a.at(i, j));
        b.set(i, n + i, mu[i]);
        b.set(n + i, n + i, lambda);
    }
    auto rep = property_kernel(b, MatrixProperty::ssp);
    if (!rep.holds) throw std::logic_error("corona_matrix: constructed matrix failed its SSP check");
    return b;
}

SymMatrix sample_matrix(const Graph& g, uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = g.order();
    SymMatrix a(n);
    for (int i = 0; i < n; ++i) {
        // diagonal: k/256 with k in [-512, 512]
        long long k = (long long)(rng.below(1025)) - 512;
        a.set(i, i, Rational(k, 256));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            // magnitude k/256 with k in [64, 1024] (so in [1/4, 4]), then sign
            long long k = 64 + (long long)(rng.below(961));
            if (rng.below(2)) k = -k;
            a.set(i, j, Rational(k, 256));
        }
    return a;
}

EvidenceReport ssp_evidence(const Graph& g, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("ssp_evidence: need at least one trial");
    EvidenceReport out;
    out.trials = trials;
    int ssp = 0, sap = 0, smp = 0;
    int first_bad = trials;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : ssp, sap, smp) reduction(min : first_bad)
#endif
    for (int t = 0; t < trials; ++t) {
        SymMatrix a = sample_matrix(g, derive_seed(seed, uint64_t(t)));
        bool has_ssp = g.order() == 0 || property_kernel(a, MatrixProperty::ssp).holds;
        if (has_ssp) ++ssp;
        if (g.order() == 0 || property_kernel(a, MatrixProperty::sap).holds) ++sap;
        if (g.order() == 0 || property_kernel(a, MatrixProperty::smp).holds) ++smp;
        if (!has_ssp && t < first_bad) first_bad = t;
    }
    out.ssp_count = ssp;
    out.sap_count = sap;
    out.smp_count = smp;
    if (first_bad < trials) {
        out.non_ssp_trial = first_bad;
        out.non_ssp_witness = sample_matrix(g, derive_seed(seed, uint64_t(first_bad)));
    }
    return out;
}

SymMatrix read_matrix(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("matrix: empty input");
    long n;
    try {
        n = std::stol(tok);
    } catch (...) {
        throw std::invalid_argument("matrix: first token must be the order, got '" + tok + "'");
    }
    if (n < 1 || n > 512) throw std::invalid_argument("matrix: unsupported order " + std::to_string(n));
    SymMatrix a{int(n)};
    std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (!(in >> tok))
                throw std::invalid_argument("matrix: missing entry at row " + std::to_string(i + 1) + ", column " +
                                            std::to_string(j + 1));
            entries[i][j] = Rational::parse(tok);
        }
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
            if (entries[i][j] != entries[j][i])
                throw std::invalid_argument("matrix: asymmetric at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
            a.set(int(i), int(j), entries[i][j]);
        }
    return a;
}

void write_matrix(const SymMatrix& a, std::ostream& out) {
    out << a.order() << "\n";
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) out << (j ? " " : "") << a.at(i, j).to_string();
        out << "\n";
    }
}

}  // namespace barbell
