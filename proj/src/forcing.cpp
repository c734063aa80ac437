#include "barbell/forcing.hpp"

#include <algorithm>
#include <stdexcept>

namespace barbell {

VertexSet zero_forcing_closure(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    if (s.universe() != n) throw std::invalid_argument("zero_forcing_closure: set universe mismatch");
    VertexSet blue = s;
    std::vector<int> work = s.members();
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        VertexSet white = g.neighbors(v) - blue;
        if (white.count() != 1) continue;
        int u = white.first();
        blue.set(u);
        work.push_back(u);
        // Blue neighbors of u may now have a unique white neighbor.
        (g.neighbors(u) & blue).for_each([&](int w) { work.push_back(w); });
    }
    return blue;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
    return zero_forcing_closure(g, s) == VertexSet::full(g.order());
}

bool is_fort(const Graph& g, const VertexSet& f) {
    const int n = g.order();
    if (f.universe() != n) throw std::invalid_argument("is_fort: set universe mismatch");
    if (f.empty()) return false;
    for (int v = 0; v < n; ++v) {
        if (f.test(v)) continue;
        if (g.neighbors(v).intersection_count(f) == 1) return false;
    }
    return true;
}

std::optional<Fort> extract_fort_within(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    if (s.universe() != n) throw std::invalid_argument("extract_fort_within: set universe mismatch");
    VertexSet closure = zero_forcing_closure(g, VertexSet::full(n) - s);
    VertexSet rest = VertexSet::full(n) - closure;
    if (rest.empty()) return std::nullopt;
    return Fort{rest};  // stalled closure: every blue vertex has != 1 white neighbor
}

namespace {

// Depth-first in/out decisions over vertices 0..n-1 with the "out" branch
// explored first.  That order enumerates every fort after all of its subsets,
// so a fort is minimal exactly when no previously kept fort is contained in
// it, and any branch whose committed members already contain a kept fort can
// only produce strict supersets.
class MinimalFortSearch {
public:
    MinimalFortSearch(const Graph& g, SearchBudget& budget, std::function<bool(const Fort&)> visit)
        : g_(g), n_(g.order()), budget_(budget), visit_(std::move(visit)), in_(n_), decided_(n_) {}

    void run() {
        if (n_ == 0) return;
        descend(0);
    }

    const std::vector<Fort>& found() const { return found_; }

private:
    // A committed-out vertex with exactly one committed-in neighbor and no
    // undecided neighbor left can never be fixed: dead branch.
    bool dead_out_vertex(int v) const {
        if (g_.neighbors(v).intersection_count(in_) != 1) return false;
        return (g_.neighbors(v) - decided_).empty();
    }

    bool any_kept_subset_of_in() const {
        for (const Fort& f : found_)
            if (f.vertices.subset_of(in_)) return true;
        return false;
    }

    // Returns false to stop the whole search (visitor satisfied / limit hit).
    bool descend(int d) {
        budget_.charge();
        if (d == n_) {
            if (in_.empty()) return true;
            if (any_kept_subset_of_in()) return true;  // non-minimal
            Fort f{in_};
            found_.push_back(f);
            return visit_(f);
        }
        // out branch
        decided_.set(d);
        if (!dead_out_vertex(d) && neighbors_alive(d)) {
            if (!descend(d + 1)) return false;
        }
        // in branch
        in_.set(d);
        bool viable = !any_kept_subset_of_in() && neighbors_alive(d);
        if (viable) {
            if (!descend(d + 1)) return false;
        }
        in_.reset(d);
        decided_.reset(d);
        return true;
    }

    // Deciding vertex d removes it from the undecided pool of its neighbors;
    // recheck the committed-out ones among them.
    bool neighbors_alive(int d) const {
        bool ok = true;
        (g_.neighbors(d) & decided_).for_each([&](int v) {
            if (ok && !in_.test(v) && dead_out_vertex(v)) ok = false;
        });
        return ok;
    }

    const Graph& g_;
    const int n_;
    SearchBudget& budget_;
    std::function<bool(const Fort&)> visit_;
    VertexSet in_;
    VertexSet decided_;
    std::vector<Fort> found_;
};

std::vector<Fort> collect_minimal_forts(const Graph& g, std::optional<size_t> limit, SearchBudget& budget,
                                        const std::function<bool(const Fort&)>& early) {
    size_t seen = 0;
    MinimalFortSearch search(g, budget, [&](const Fort& f) {
        ++seen;
        if (early && !early(f)) return false;
        return !(limit && seen >= *limit);
    });
    search.run();
    auto forts = search.found();
    std::sort(forts.begin(), forts.end(),
              [](const Fort& a, const Fort& b) { return a.vertices.lex_less(b.vertices); });
    return forts;
}

}  // namespace

std::vector<Fort> enumerate_minimal_forts(const Graph& g, std::optional<size_t> limit, SearchBudget* budget) {
    SearchBudget local;
    return collect_minimal_forts(g, limit, budget ? *budget : local, nullptr);
}

std::optional<std::pair<Fort, Fort>> separated_fort_pair(const Graph& g, SearchBudget* budget) {
    const int n = g.order();
    SearchBudget local;
    SearchBudget& b = budget ? *budget : local;

    std::optional<std::pair<Fort, Fort>> hit;
    std::vector<Fort> collected;
    auto separated = [&](const Fort& a, const Fort& c) {
        return !a.vertices.intersects(c.vertices) && !g.neighborhood(a.vertices).intersects(c.vertices);
    };
    // Stage 1: scan pairs of minimal forts while they stream in.
    collect_minimal_forts(g, std::nullopt, b, [&](const Fort& f) {
        for (const Fort& prev : collected) {
            if (separated(prev, f)) {
                hit = {prev, f};
                return false;
            }
        }
        collected.push_back(f);
        return true;
    });
    if (hit) return hit;

    // Stage 2: for each minimal fort F, look for a companion fort beyond its
    // closed neighborhood.  If a separated pair (W1, W2) exists at all, any
    // minimal fort F inside W1 has W2 disjoint from N[F], so the extraction
    // succeeds for it and this stage cannot miss.
    std::sort(collected.begin(), collected.end(),
              [](const Fort& a, const Fort& c) { return a.vertices.lex_less(c.vertices); });
    for (const Fort& f : collected) {
        VertexSet outside = VertexSet::full(n) - g.closed_neighborhood(f.vertices);
        if (auto companion = extract_fort_within(g, outside)) return {{f, *companion}};
    }
    return std::nullopt;
}

}  // namespace barbell
