// Timing comparison between the serial reference implementations and their
// OpenMP counterparts: the exhaustive tripartition search, the sampled
// matrix-property evidence, and the census pipeline.  Single-run wall times,
// informational only.

#include <chrono>
#include <cstdio>
#include <sstream>

#include "barbell/barbell.hpp"
#include "barbell/census.hpp"
#include "barbell/graph6.hpp"
#include "barbell/rng.hpp"
#include "barbell/ssp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace barbell;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_brute(const char* name, const Graph& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = brute_force_barbell_serial(g, 21);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = brute_force_barbell(g, 21);
    double tp = seconds_since(t0);
    bool same = serial.has_value() == parallel.has_value() &&
                (!serial || (serial->r == parallel->r && serial->w1 == parallel->w1 && serial->w2 == parallel->w2));
    std::printf("brute   %-22s n=%2d  serial %7.3fs  parallel %7.3fs  witnesses %s\n", name, g.order(), ts, tp,
                same ? "match" : "DIFFER");
}

void bench_evidence(const char* name, const Graph& g, int trials) {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    auto t0 = std::chrono::steady_clock::now();
    auto serial = ssp_evidence(g, trials, 1);
    double ts = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    t0 = std::chrono::steady_clock::now();
    auto parallel = ssp_evidence(g, trials, 1);
    double tp = seconds_since(t0);
    bool same = serial.ssp_count == parallel.ssp_count && serial.sap_count == parallel.sap_count &&
                serial.smp_count == parallel.smp_count && serial.non_ssp_trial == parallel.non_ssp_trial;
    std::printf("matrix  %-22s %d trials  1 thread %7.3fs  %d threads %7.3fs  counts %s\n", name, trials, ts,
                threads, tp, same ? "match" : "DIFFER");
}

void bench_census(int graphs, int jobs) {
    SplitMix64 rng(0xBE7Cu);
    std::ostringstream catalog;
    for (int i = 0; i < graphs; ++i) catalog << encode_graph6(random_graph(10 + int(rng.below(4)), 400, rng)) << "\n";
    CensusOptions opts;
    opts.jobs = jobs;
    opts.ssp_trials = 4;
    std::istringstream in(catalog.str());
    std::ostringstream out, err;
    auto t0 = std::chrono::steady_clock::now();
    auto totals = run_census(in, out, err, opts);
    std::printf("census  %4d graphs (+4 matrix samples each)  jobs=%d  %7.3fs  (%zu admit / %zu not)\n", graphs,
                jobs, seconds_since(t0), totals.admits, totals.does_not_admit);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif
    SplitMix64 rng(0x13EAu);
    bench_brute("random n=16 p=0.25", random_graph(16, 250, rng));
    bench_brute("random n=18 p=0.20", random_graph(18, 200, rng));
    bench_brute("cycle C_20", cycle_graph(20));
    bench_evidence("petersen", petersen_graph(), 24);
    bench_evidence("C_12", cycle_graph(12), 24);
    bench_census(48, 1);
#ifdef _OPENMP
    if (omp_get_max_threads() > 1) bench_census(48, omp_get_max_threads());
#endif
    return 0;
}
