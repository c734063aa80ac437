#include "barbell/census.hpp"

#include <chrono>
#include <istream>
#include <ostream>

#include "barbell/graph6.hpp"
#include "barbell/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barbell {

using nlohmann::ordered_json;

namespace {

ordered_json labels_json(const Graph& g, const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    if (g.has_custom_labels()) {
        s.for_each([&](int v) { arr.push_back(g.label(v)); });
    } else {
        s.for_each([&](int v) { arr.push_back(v + 1); });
    }
    return arr;
}

}  // namespace

ordered_json partition_to_json(const Graph& g, const BarbellPartition& p) {
    ordered_json j;
    j["R"] = labels_json(g, p.r);
    j["W1"] = labels_json(g, p.w1);
    j["W2"] = labels_json(g, p.w2);
    return j;
}

ordered_json certificate_to_json(const Graph& g, const BarbellCertificate& cert) {
    ordered_json j;
    j["schema"] = "barbell.certificate/1";
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["verdict"] = to_string(cert.verdict);
    j["method"] = to_string(cert.method);
    if (cert.partition) {
        auto p = partition_to_json(g, *cert.partition);
        j["R"] = p["R"];
        j["W1"] = p["W1"];
        j["W2"] = p["W2"];
    }
    j["notes"] = cert.notes;
    if (cert.verdict == Verdict::admits) j["implies"] = "some matrix with this pattern lacks the strong spectral property";
    return j;
}

ordered_json property_report_to_json(const PropertyReport& rep) {
    ordered_json j;
    j["schema"] = "barbell.property/1";
    j["property"] = to_string(rep.property);
    j["arithmetic"] = rep.arithmetic == Arithmetic::rational ? "rational" : "floating";
    if (rep.arithmetic == Arithmetic::floating) j["tolerance"] = rep.tolerance;
    j["unknowns"] = rep.unknowns;
    j["rank"] = rep.rank;
    j["kernel_dim"] = rep.kernel_dim;
    j["holds"] = rep.holds;
    if (rep.indeterminate) j["indeterminate"] = true;
    if (!rep.witness.empty()) {
        ordered_json ws = ordered_json::array();
        for (const SymMatrix& x : rep.witness) {
            ordered_json rows = ordered_json::array();
            for (int i = 0; i < x.order(); ++i) {
                ordered_json row = ordered_json::array();
                for (int jj = 0; jj < x.order(); ++jj) row.push_back(x.at(i, jj).to_string());
                rows.push_back(row);
            }
            ws.push_back(rows);
        }
        j["witness"] = ws;
    }
    return j;
}

ordered_json evidence_to_json(const EvidenceReport& rep) {
    ordered_json j;
    j["trials"] = rep.trials;
    j["ssp_count"] = rep.ssp_count;
    j["sap_count"] = rep.sap_count;
    j["smp_count"] = rep.smp_count;
    if (rep.non_ssp_trial) j["non_ssp_trial"] = *rep.non_ssp_trial;
    return j;
}

CensusTotals run_census(std::istream& in, std::ostream& out, std::ostream& err, const CensusOptions& opts) {
    CensusTotals totals;
    std::vector<std::string> lines;
    std::vector<size_t> line_numbers;
    {
        std::string line;
        size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            // Tolerate blank separator lines.
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            lines.push_back(line);
            line_numbers.push_back(no);
        }
    }

    struct Slot {
        std::string record;
        std::string error;
        int verdict = -1;
    };

    const size_t chunk_size = 256;  // constant memory per flush
    std::vector<Slot> results;
    for (size_t base = 0; base < lines.size(); base += chunk_size) {
        const size_t count = std::min(chunk_size, lines.size() - base);
        results.assign(count, Slot{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs > 0 ? opts.jobs : 1)
#endif
        for (size_t k = 0; k < count; ++k) {
            const size_t idx = base + k;
            try {
                const auto start = std::chrono::steady_clock::now();
                Graph g = parse_graph6(lines[idx]);
                FindOptions fo;
                fo.brute_cap = opts.brute_cap;
                fo.fort_budget = opts.fort_budget;
                BarbellCertificate cert = find_barbell_partition(g, fo);
                ordered_json rec;
                rec["schema"] = "barbell.census/1";
                rec["graph6"] = encode_graph6(g);
                rec["n"] = g.order();
                rec["m"] = g.edge_count();
                ordered_json cj = certificate_to_json(g, cert);
                cj.erase("schema");
                cj.erase("graph6");
                cj.erase("n");
                cj.erase("m");
                rec["barbell"] = cj;
                int diam = g.diameter();
                if (diam < 0)
                    rec["diameter"] = nullptr;
                else
                    rec["diameter"] = diam;
                rec["max_degree"] = g.max_degree();
                if (opts.ssp_trials > 0) {
                    auto ev = ssp_evidence(g, opts.ssp_trials, derive_seed(opts.seed, idx));
                    rec["ssp_evidence"] = evidence_to_json(ev);
                }
                if (opts.timings) {
                    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
                    rec["wall_time_ms"] = ms.count();
                }
                results[k].record = rec.dump();
                results[k].verdict = int(cert.verdict);
            } catch (const std::exception& e) {
                results[k].error = "line " + std::to_string(line_numbers[idx]) + ": " + e.what();
            }
        }
        for (size_t k = 0; k < count; ++k) {
            if (!results[k].error.empty()) {
                err << "census: " << results[k].error << "\n";
                ++totals.parse_failures;
                continue;
            }
            out << results[k].record << "\n";
            ++totals.processed;
            if (results[k].verdict == int(Verdict::admits)) ++totals.admits;
            else if (results[k].verdict == int(Verdict::does_not_admit)) ++totals.does_not_admit;
            else ++totals.budget_exceeded;
        }
    }
    return totals;
}

}  // namespace barbell
