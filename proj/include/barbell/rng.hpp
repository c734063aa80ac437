#pragma once

#include <cstdint>

#include "barbell/graph.hpp"

namespace barbell {

// splitmix64: tiny, seedable, and identical on every platform, which the
// reproducibility contracts need (std:: distributions are not portable).
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1.
    uint64_t below(uint64_t bound) { return next() % bound; }
};

// Independent stream for work item `index` under a run-level seed; lets
// parallel loops draw per-item randomness deterministically.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    SplitMix64 mix(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
    return mix.next();
}

// Erdos-Renyi sample with edge probability per_mille/1000.
Graph random_graph(int n, int per_mille, SplitMix64& rng);

}  // namespace barbell
