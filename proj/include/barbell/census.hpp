#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "barbell/barbell.hpp"
#include "barbell/ssp.hpp"

#include "json.hpp"

namespace barbell {

// JSON shapes shared by the CLI and the census (schema-tagged, stable key
// order).
nlohmann::ordered_json partition_to_json(const Graph& g, const BarbellPartition& p);
nlohmann::ordered_json certificate_to_json(const Graph& g, const BarbellCertificate& cert);
nlohmann::ordered_json property_report_to_json(const PropertyReport& rep);
nlohmann::ordered_json evidence_to_json(const EvidenceReport& rep);

struct CensusOptions {
    int jobs = 1;
    int brute_cap = 15;
    uint64_t fort_budget = SearchBudget::kDefaultCap;
    int ssp_trials = 0;     // 0 = skip matrix sampling
    uint64_t seed = 1;
    bool timings = false;   // off by default so output stays byte-stable
};

struct CensusTotals {
    size_t processed = 0;
    size_t admits = 0;
    size_t does_not_admit = 0;
    size_t budget_exceeded = 0;
    size_t parse_failures = 0;
};

// One JSON line per input graph6 line, in input order, independent of the
// worker count.  Parse failures go to `err` with their line number and
// processing continues.
CensusTotals run_census(std::istream& in, std::ostream& out, std::ostream& err, const CensusOptions& opts);

}  // namespace barbell
