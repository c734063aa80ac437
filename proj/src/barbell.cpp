#include "barbell/barbell.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barbell {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::admits: return "admits";
        case Verdict::does_not_admit: return "does_not_admit";
        case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::structural: return "structural";
        case Method::separated_forts: return "separated_forts";
        case Method::brute_force: return "brute_force";
        case Method::constructive_transfer: return "constructive_transfer";
    }
    return "?";
}

PartitionCheck verify_barbell_partition(const Graph& g, const BarbellPartition& p) {
    const int n = g.order();
    PartitionCheck out;
    auto flag = [&](std::string msg) {
        out.valid = false;
        out.violations.push_back(std::move(msg));
    };
    if (p.r.universe() != n || p.w1.universe() != n || p.w2.universe() != n) {
        flag("sets are not indexed against this graph");
        return out;
    }
    if (p.r.intersects(p.w1)) flag("R and W1 overlap at vertex " + std::to_string((p.r & p.w1).first() + 1));
    if (p.r.intersects(p.w2)) flag("R and W2 overlap at vertex " + std::to_string((p.r & p.w2).first() + 1));
    if (p.w1.intersects(p.w2)) flag("W1 and W2 overlap at vertex " + std::to_string((p.w1 & p.w2).first() + 1));
    VertexSet uncovered = VertexSet::full(n) - (p.r | p.w1 | p.w2);
    if (!uncovered.empty()) flag("vertex " + std::to_string(uncovered.first() + 1) + " lies in no part");
    if (p.w1.empty()) flag("W1 is empty");
    if (p.w2.empty()) flag("W2 is empty");
    bool cross_reported = false;
    p.w1.for_each([&](int v) {
        if (cross_reported) return;
        VertexSet bad = g.neighbors(v) & p.w2;
        if (!bad.empty()) {
            flag("edge {" + std::to_string(v + 1) + "," + std::to_string(bad.first() + 1) + "} joins W1 and W2");
            cross_reported = true;
        }
    });
    p.r.for_each([&](int v) {
        if (g.neighbors(v).intersection_count(p.w1) == 1)
            flag("vertex " + std::to_string(v + 1) + " in R has exactly one neighbor in W1");
        if (g.neighbors(v).intersection_count(p.w2) == 1)
            flag("vertex " + std::to_string(v + 1) + " in R has exactly one neighbor in W2");
    });
    return out;
}

std::pair<Fort, Fort> barbell_to_forts(const Graph& g, const BarbellPartition& p) {
    auto check = verify_barbell_partition(g, p);
    if (!check.valid) throw std::invalid_argument("barbell_to_forts: " + check.violations.front());
    Fort f1{p.w1}, f2{p.w2};
    if (!is_fort(g, f1.vertices) || !is_fort(g, f2.vertices))
        throw std::logic_error("barbell_to_forts: valid partition whose W is not a fort");
    return {f1, f2};
}

BarbellPartition forts_to_barbell(const Graph& g, const Fort& f1, const Fort& f2) {
    if (!is_fort(g, f1.vertices)) throw std::invalid_argument("forts_to_barbell: first set is not a fort");
    if (!is_fort(g, f2.vertices)) throw std::invalid_argument("forts_to_barbell: second set is not a fort");
    if (f1.vertices.intersects(f2.vertices)) throw std::invalid_argument("forts_to_barbell: forts overlap");
    if (g.neighborhood(f1.vertices).intersects(f2.vertices))
        throw std::invalid_argument("forts_to_barbell: forts are adjacent");
    BarbellPartition p{VertexSet::full(g.order()) - (f1.vertices | f2.vertices), f1.vertices, f2.vertices};
    auto check = verify_barbell_partition(g, p);
    if (!check.valid) throw std::logic_error("forts_to_barbell: separated forts gave an invalid partition");
    return p;
}

std::optional<BarbellPartition> cutset_barbell(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    if (s.universe() != n) throw std::invalid_argument("cutset_barbell: set universe mismatch");
    Graph rest(n);
    for (int v = 0; v < n; ++v) {
        if (s.test(v)) continue;
        g.neighbors(v).for_each([&](int u) {
            if (u > v && !s.test(u)) rest.add_edge(v, u);
        });
    }
    std::vector<VertexSet> comps;
    for (const VertexSet& c : rest.components())
        if (!c.intersects(s)) comps.push_back(c);
    if (comps.size() < 2) return std::nullopt;
    bool ok = true;
    s.for_each([&](int v) {
        for (const VertexSet& c : comps) {
            int k = g.neighbors(v).intersection_count(c);
            if (k == 1) ok = false;
        }
    });
    if (!ok) return std::nullopt;
    BarbellPartition p{s, comps.front(), VertexSet(n)};
    for (size_t i = 1; i < comps.size(); ++i) p.w2 |= comps[i];
    if (!verify_barbell_partition(g, p).valid) return std::nullopt;
    return p;
}

namespace {

// Components of G - v, with how many neighbors of v land in each.
struct HubSplit {
    std::vector<VertexSet> comps;
    std::vector<int> nbr_counts;
};

HubSplit split_at(const Graph& g, int hub) {
    const int n = g.order();
    HubSplit out;
    VertexSet seen(n);
    seen.set(hub);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen.set(s);
        comp.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    comp.set(u);
                    stack.push_back(u);
                }
            });
        }
        out.nbr_counts.push_back(g.neighbors(hub).intersection_count(comp));
        out.comps.push_back(std::move(comp));
    }
    return out;
}

// Group the components of G - hub into two classes whose neighbor totals are
// both >= 2, if possible: R = {hub} then completes a partition.
std::optional<BarbellPartition> single_hub_partition(const Graph& g, int hub) {
    auto split = split_at(g, hub);
    const size_t c = split.comps.size();
    if (c < 2) return std::nullopt;
    std::vector<size_t> side1;
    int total = 0;
    for (int k : split.nbr_counts) total += k;
    if (c >= 4) {
        side1 = {0, 1};
    } else if (c == 3) {
        size_t big = 0;
        for (size_t i = 1; i < 3; ++i)
            if (split.nbr_counts[i] > split.nbr_counts[big]) big = i;
        if (split.nbr_counts[big] < 2) return std::nullopt;
        side1 = {big};
    } else {
        if (split.nbr_counts[0] < 2 || split.nbr_counts[1] < 2) return std::nullopt;
        side1 = {0};
    }
    int sum1 = 0;
    for (size_t i : side1) sum1 += split.nbr_counts[i];
    if (sum1 < 2 || total - sum1 < 2) return std::nullopt;
    const int n = g.order();
    BarbellPartition p{VertexSet::of(n, {hub}), VertexSet(n), VertexSet(n)};
    for (size_t i = 0; i < c; ++i) {
        if (std::find(side1.begin(), side1.end(), i) != side1.end())
            p.w1 |= split.comps[i];
        else
            p.w2 |= split.comps[i];
    }
    if (!verify_barbell_partition(g, p).valid) return std::nullopt;
    return p;
}

// W1 = components of G-h1 avoiding h2, W2 = components of G-h2 avoiding h1.
// The two unions are disjoint and non-adjacent for any pair of vertices, so
// the split works whenever each hub keeps >= 2 neighbors on its own side.
// Covers trees with two degree-3 branch vertices, unicyclic graphs with an
// off-cycle branch vertex, and cacti with cycles joined by a path.
std::optional<BarbellPartition> hub_pair_partition(const Graph& g, int h1, int h2) {
    const int n = g.order();
    auto s1 = split_at(g, h1);
    VertexSet w1(n);
    for (const VertexSet& c : s1.comps)
        if (!c.test(h2)) w1 |= c;
    if (g.neighbors(h1).intersection_count(w1) < 2) return std::nullopt;
    auto s2 = split_at(g, h2);
    VertexSet w2(n);
    for (const VertexSet& c : s2.comps)
        if (!c.test(h1)) w2 |= c;
    if (g.neighbors(h2).intersection_count(w2) < 2) return std::nullopt;
    BarbellPartition p{VertexSet::full(n) - (w1 | w2), w1, w2};
    if (!verify_barbell_partition(g, p).valid) return std::nullopt;
    return p;
}

}  // namespace

std::optional<BarbellCertificate> structural_screen(const Graph& g) {
    const int n = g.order();
    if (n <= 1) {
        return BarbellCertificate{Verdict::does_not_admit, std::nullopt, Method::structural,
                                  "fewer than two vertices cannot fill both W parts"};
    }
    auto comps = g.components();
    if (comps.size() >= 2) {
        BarbellPartition p{VertexSet(n), comps.front(), VertexSet(n)};
        for (size_t i = 1; i < comps.size(); ++i) p.w2 |= comps[i];
        if (!verify_barbell_partition(g, p).valid)
            throw std::logic_error("structural_screen: component split failed verification");
        return BarbellCertificate{Verdict::admits, p, Method::structural, "disconnected: one component against the rest, R empty"};
    }
    if (g.diameter() == 2 && g.max_degree() == 3) {
        return BarbellCertificate{Verdict::does_not_admit, std::nullopt, Method::structural,
                                  "connected with diameter 2 and maximum degree 3: the middle vertex of any W1-W2 path of length 2 would need a fourth neighbor"};
    }
    VertexSet cuts = block_decomposition(g).cut_vertices;
    for (int v = cuts.first(); v >= 0; v = cuts.next(v)) {
        if (auto p = single_hub_partition(g, v)) {
            return BarbellCertificate{Verdict::admits, *p, Method::structural,
                                      "cut vertex " + std::to_string(v + 1) + " with both component groups holding >= 2 of its neighbors"};
        }
    }
    for (int a = cuts.first(); a >= 0; a = cuts.next(a)) {
        for (int b = cuts.first(); b >= 0; b = cuts.next(b)) {
            if (a == b) continue;
            if (auto p = hub_pair_partition(g, a, b)) {
                return BarbellCertificate{Verdict::admits, *p, Method::structural,
                                          "hub pair {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}: branches away from each hub"};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Recursive lexicographic assignment search shared by the serial oracle and
// the sharded OpenMP variant.  Classes: 0 = R, 1 = W1, 2 = W2.
class BruteSearch {
public:
    BruteSearch(const Graph& g) : g_(g), n_(g.order()), assign_(n_, -1), cnt1_(n_, 0), cnt2_(n_, 0), undecided_(n_, 0) {
        for (int v = 0; v < n_; ++v) undecided_[v] = g.degree(v);
    }

    // Applies one assignment; returns false if the partial state is already
    // doomed (and must then be undone by the caller via unassign).
    bool assign(int v, int cls) {
        assign_[v] = cls;
        if (cls != 0) ++w_seen_;
        bool ok = true;
        // Counters track W-neighbors for every vertex, assigned or not, so a
        // vertex entering R late still sees the right totals.
        g_.neighbors(v).for_each([&](int u) {
            undecided_[u]--;
            if (cls == 1) cnt1_[u]++;
            if (cls == 2) cnt2_[u]++;
            if (assign_[u] < 0) return;
            if (cls == 1 && assign_[u] == 2) ok = false;
            if (cls == 2 && assign_[u] == 1) ok = false;
            if (assign_[u] == 0 && undecided_[u] == 0 && (cnt1_[u] == 1 || cnt2_[u] == 1)) ok = false;
        });
        if (cls == 0 && undecided_[v] == 0 && (cnt1_[v] == 1 || cnt2_[v] == 1)) ok = false;
        return ok;
    }

    void unassign(int v) {
        int cls = assign_[v];
        if (cls != 0) --w_seen_;
        g_.neighbors(v).for_each([&](int u) {
            undecided_[u]++;
            if (cls == 1) cnt1_[u]--;
            if (cls == 2) cnt2_[u]--;
        });
        assign_[v] = -1;
    }

    // First valid completion from depth d in lexicographic order.  With
    // pin_first_w set, W2 stays forbidden until some vertex has entered W1,
    // which quotients out the W1/W2 swap symmetry.
    bool search(int d) {
        if (d == n_) return leaf_valid();
        const int hi = (pin_first_w && w_seen_ == 0) ? 1 : 2;
        for (int cls = 0; cls <= hi; ++cls) {
            if (assign(d, cls) && search(d + 1)) return true;
            unassign(d);
        }
        return false;
    }

    bool pin_first_w = false;

    bool leaf_valid() const {
        bool has1 = false, has2 = false;
        for (int v = 0; v < n_; ++v) {
            has1 |= assign_[v] == 1;
            has2 |= assign_[v] == 2;
        }
        return has1 && has2;
    }

    BarbellPartition partition() const {
        BarbellPartition p{VertexSet(n_), VertexSet(n_), VertexSet(n_)};
        for (int v = 0; v < n_; ++v) {
            if (assign_[v] == 0) p.r.set(v);
            if (assign_[v] == 1) p.w1.set(v);
            if (assign_[v] == 2) p.w2.set(v);
        }
        return p;
    }

    const Graph& g_;
    int n_;
    std::vector<int8_t> assign_;
    std::vector<int> cnt1_, cnt2_, undecided_;
    int w_seen_ = 0;
};

void check_cap(const Graph& g, int cap) {
    if (g.order() > cap)
        throw std::invalid_argument("brute_force_barbell: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::optional<BarbellPartition> brute_force_barbell_serial(const Graph& g, int cap) {
    check_cap(g, cap);
    if (g.order() == 0) return std::nullopt;
    BruteSearch s(g);
    if (!s.search(0)) return std::nullopt;
    auto p = s.partition();
    if (!verify_barbell_partition(g, p).valid) throw std::logic_error("brute_force_barbell: invalid witness");
    return p;
}

std::optional<BarbellPartition> brute_force_barbell(const Graph& g, int cap) {
    check_cap(g, cap);
    const int n = g.order();
    if (n == 0) return std::nullopt;
    const int prefix_len = std::min(6, std::max(0, n - 6));
    if (prefix_len == 0) return brute_force_barbell_serial(g, cap);

    long shards = 1;
    for (int i = 0; i < prefix_len; ++i) shards *= 3;

    std::atomic<long> best_shard{shards};
    std::vector<std::pair<long, BarbellPartition>> hits;
    std::mutex hits_mutex;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long shard = 0; shard < shards; ++shard) {
        if (shard > best_shard.load(std::memory_order_relaxed)) continue;
        BruteSearch s(g);
        bool viable = true;
        long rest = shard;
        // Most-significant digit first keeps shard order equal to
        // lexicographic assignment order.
        for (int v = 0; v < prefix_len && viable; ++v) {
            long place = 1;
            for (int i = v + 1; i < prefix_len; ++i) place *= 3;
            int cls = int((rest / place) % 3);
            viable = s.assign(v, cls);
        }
        if (viable && s.search(prefix_len)) {
            std::lock_guard<std::mutex> lock(hits_mutex);
            hits.push_back({shard, s.partition()});
            long cur = best_shard.load();
            while (shard < cur && !best_shard.compare_exchange_weak(cur, shard)) {
            }
        }
    }
    if (hits.empty()) return std::nullopt;
    auto best = std::min_element(hits.begin(), hits.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!verify_barbell_partition(g, best->second).valid) throw std::logic_error("brute_force_barbell: invalid witness");
    return best->second;
}

BarbellCertificate find_barbell_partition(const Graph& g, const FindOptions& opts) {
    if (auto cert = structural_screen(g)) return *cert;

    SearchBudget budget(opts.fort_budget);
    std::string fort_note;
    try {
        if (auto pair = separated_fort_pair(g, &budget)) {
            BarbellPartition p = forts_to_barbell(g, pair->first, pair->second);
            return {Verdict::admits, p, Method::separated_forts,
                    "separated fort pair " + pair->first.vertices.to_string() + " / " + pair->second.vertices.to_string()};
        }
        return {Verdict::does_not_admit, std::nullopt, Method::separated_forts,
                "complete minimal-fort search found no separated pair"};
    } catch (const budget_error& e) {
        fort_note = e.what();
    }

    if (g.order() <= opts.brute_cap) {
        BruteSearch s(g);
        s.pin_first_w = true;
        if (s.search(0)) {
            auto p = s.partition();
            if (!verify_barbell_partition(g, p).valid)
                throw std::logic_error("find_barbell_partition: invalid brute-force witness");
            return {Verdict::admits, p, Method::brute_force, "exhaustive tripartition search with W1/W2 symmetry pinned"};
        }
        return {Verdict::does_not_admit, std::nullopt, Method::brute_force,
                "exhaustive tripartition search with W1/W2 symmetry pinned"};
    }
    return {Verdict::budget_exceeded, std::nullopt, Method::separated_forts,
            fort_note + "; order " + std::to_string(g.order()) + " above brute-force cap " + std::to_string(opts.brute_cap)};
}

bool noiso_bound_check(const Graph& g, const BarbellPartition& p) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;  // hypothesis fails, nothing to check
    if (!verify_barbell_partition(g, p).valid) throw std::invalid_argument("noiso_bound_check: invalid partition");
    return p.w1.count() >= 2 && p.w2.count() >= 2;
}

}  // namespace barbell
