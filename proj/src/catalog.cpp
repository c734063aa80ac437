#include "barbell/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "barbell/rng.hpp"

namespace barbell {

namespace {

inline int pair_index(int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
}

}  // namespace

uint64_t mask_from_graph(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("mask_from_graph: order above 11");
    uint64_t mask = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= uint64_t(1) << pair_index(i, j);
    return mask;
}

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (uint64_t(1) << pair_index(i, j))) g.add_edge(i, j);
    return g;
}

uint64_t canonical_edge_mask(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_edge_mask: order above 11");
    if (n <= 1) return 0;

    // Refinement invariant per vertex: (degree, sorted neighbor degrees).
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        g.neighbors(v).for_each([&](int u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        sig[v] = {g.degree(v), std::move(nd)};
    }
    // Group vertices by signature; signatures ordered, so slot ranges are
    // isomorphism-invariant.
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[sig[v]].push_back(v);

    std::vector<std::vector<int>> cls;
    for (auto& [key, members] : classes) cls.push_back(members);

    std::vector<int> perm(n);  // perm[slot] = original vertex
    uint64_t best = ~uint64_t(0);
    auto emit = [&]() {
        std::vector<int> pos(n);  // pos[original] = slot
        for (int s = 0; s < n; ++s) pos[perm[s]] = s;
        uint64_t mask = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g.has_edge(i, j)) {
                    int a = pos[i], b = pos[j];
                    if (a > b) std::swap(a, b);
                    mask |= uint64_t(1) << pair_index(a, b);
                }
        best = std::min(best, mask);
    };

    // Odometer over per-class permutations.
    std::vector<std::vector<int>> arrangement = cls;
    for (auto& c : arrangement) std::sort(c.begin(), c.end());
    while (true) {
        int slot = 0;
        for (const auto& c : arrangement)
            for (int v : c) perm[slot++] = v;
        emit();
        size_t k = 0;
        while (k < arrangement.size() && !std::next_permutation(arrangement[k].begin(), arrangement[k].end())) ++k;
        if (k == arrangement.size()) break;
    }
    return best;
}

std::vector<Graph> graphs_up_to_iso(int n, int max_degree) {
    if (n < 1 || n > 8) throw std::invalid_argument("graphs_up_to_iso: supported range is 1..8");
    const int cap = max_degree < 0 ? n : max_degree;
    std::vector<uint64_t> reps{0};  // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        std::set<uint64_t> next;
        for (uint64_t rep : reps) {
            Graph base = graph_from_mask(k - 1, rep);
            // Attach vertex k-1 with every admissible neighborhood.  Every
            // graph on k vertices arises this way from the class of one of
            // its vertex-deleted subgraphs.
            for (uint64_t nbrs = 0; nbrs < (uint64_t(1) << (k - 1)); ++nbrs) {
                if (std::popcount(nbrs) > cap) continue;
                bool ok = true;
                Graph h(k);
                for (int j = 1; j < k - 1; ++j)
                    for (int i = 0; i < j; ++i)
                        if (rep & (uint64_t(1) << pair_index(i, j))) h.add_edge(i, j);
                for (int v = 0; v < k - 1 && ok; ++v) {
                    if (nbrs & (uint64_t(1) << v)) {
                        if (base.degree(v) >= cap) ok = false;
                        else h.add_edge(v, k - 1);
                    }
                }
                if (!ok) continue;
                next.insert(canonical_edge_mask(h));
            }
        }
        reps.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (uint64_t rep : reps) out.push_back(graph_from_mask(n, rep));
    return out;
}

Graph random_graph(int n, int per_mille, SplitMix64& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(1000) < uint64_t(per_mille)) g.add_edge(i, j);
    return g;
}

}  // namespace barbell
