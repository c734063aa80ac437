#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "barbell/barbell.hpp"
#include "barbell/catalog.hpp"
#include "barbell/cli.hpp"
#include "barbell/graph.hpp"
#include "barbell/graph6.hpp"

using namespace barbell;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check exit codes") {
    // Petersen: no partition -> 1.
    auto petersen = cli({"check", encode_graph6(petersen_graph())});
    CHECK(petersen.exit_code == 1);
    CHECK(petersen.out.find("does_not_admit") != std::string::npos);

    // Disconnected 2K_2 -> 0 with empty R.
    auto two_k2 = cli({"check", "--json", encode_graph6(disjoint_union(path_graph(2), path_graph(2)))});
    CHECK(two_k2.exit_code == 0);
    auto j = json::parse(two_k2.out);
    CHECK(j["verdict"] == "admits");
    CHECK(j["R"].empty());
    CHECK(j["schema"] == "barbell.certificate/1");

    // Malformed input -> 64 with a diagnostic.
    auto bad = cli({"check", "thisisnotagraph6line!!"});
    CHECK(bad.exit_code == 64);
    CHECK(!bad.err.empty());

    // stdin edge-list input.
    auto viastdin = cli({"check", "-"}, "4\n1 2\n2 3\n3 4\n");
    CHECK(viastdin.exit_code == 1);  // P_4 admits nothing
}

TEST_CASE("ops build prism and tensor-complete") {
    auto prism = cli({"ops", "build", "prism", "4", "2"});
    CHECK(prism.exit_code == 0);
    auto j = json::parse(prism.out);
    CHECK(j["n"] == 32);
    CHECK(j["partition"]["W1"].size() == 8);

    auto bad = cli({"ops", "build", "tensor-complete", "3", "3"});
    CHECK(bad.exit_code == 65);
    auto jb = json::parse(bad.out);
    CHECK(jb.contains("error"));
    CHECK(jb["fallback_verdict"] == "does_not_admit");
    CHECK(jb["fallback_notes"] == "no partition exists");
}

TEST_CASE("ops build jdup of a path pendant") {
    std::string p5 = encode_graph6(path_graph(5));
    auto res = cli({"ops", "build", "jdup", p5, "1"});
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j["n"] == 6);
    std::string notes = j["notes"];
    CHECK(notes.find("fewer distinct eigenvalue") != std::string::npos);
}

TEST_CASE("ops build join with auto partition") {
    // bowtie has a partition; join with K_2 absorbs the first factor into R.
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto res = cli({"ops", "build", "join", encode_graph6(path_graph(2)), encode_graph6(bowtie)});
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j["n"] == 7);
    CHECK(j.contains("partition"));

    // Factors swapped: only the first factor admits, so the second joins R.
    auto swapped = cli({"ops", "build", "join", encode_graph6(bowtie), encode_graph6(path_graph(2))});
    CHECK(swapped.exit_code == 0);
    auto js = json::parse(swapped.out);
    REQUIRE(js.contains("partition"));
    auto r = js["partition"]["R"];
    CHECK(std::find(r.begin(), r.end(), json(6)) != r.end());
    CHECK(std::find(r.begin(), r.end(), json(7)) != r.end());
}

TEST_CASE("ssp check") {
    auto holds = cli({"ssp", "check", "-"}, "2\n1 2\n2 1\n");
    CHECK(holds.exit_code == 0);
    auto j = json::parse(holds.out);
    CHECK(j["holds"] == true);
    CHECK(j["schema"] == "barbell.property/1");

    // diag(1,1): kernel dimension 1 with the swap witness.
    auto fails = cli({"ssp", "check", "-"}, "2\n1 0\n0 1\n");
    CHECK(fails.exit_code == 1);
    auto jf = json::parse(fails.out);
    CHECK(jf["kernel_dim"] == 1);
    REQUIRE(jf.contains("witness"));
    CHECK(jf["witness"][0][0][1] == "1");
    CHECK(jf["witness"][0][1][0] == "1");

    auto asym = cli({"ssp", "check", "-"}, "2\n1 2\n3 1\n");
    CHECK(asym.exit_code == 64);

    auto props = cli({"ssp", "check", "--property", "sap", "-"}, "2\n1 2\n2 1\n");
    CHECK(props.exit_code == 0);

    // Near-threshold floating run: exit 2 when the cutoff is ambiguous.
    std::string murky =
        "4\n"
        "0 0 0 0\n"
        "0 1 0 0\n"
        "0 0 1.0000000005 0\n"
        "0 0 0 1.000000004\n";
    auto indet = cli({"ssp", "check", "--float", "-"}, murky);
    CHECK(indet.exit_code == 2);
}

TEST_CASE("census") {
    std::string catalog = encode_graph6(petersen_graph()) + "\n" + "not-a-graph!!\n" +
                          encode_graph6(star_graph(4)) + "\n";
    auto res = cli({"census", "-", "--jobs", "2"}, catalog);
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
        auto j = json::parse(line);
        CHECK(j["schema"] == "barbell.census/1");
        ++records;
    }
    CHECK(records == 2);
    CHECK(res.err.find("line 2") != std::string::npos);
    // Empty input: empty output, exit 0.
    auto empty = cli({"census", "-"}, "");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("census over the 11 graphs on 4 vertices") {
    std::string catalog;
    int expected_admits = 0;
    for (const Graph& g : graphs_up_to_iso(4)) {
        catalog += encode_graph6(g) + "\n";
        if (brute_force_barbell(g)) ++expected_admits;
    }
    auto res = cli({"census", "-"}, catalog);
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int records = 0, admits = 0;
    while (std::getline(lines, line)) {
        ++records;
        if (json::parse(line)["barbell"]["verdict"] == "admits") ++admits;
    }
    CHECK(records == 11);
    CHECK(admits == expected_admits);
}

TEST_CASE("ops build dup with a supplied partition file") {
    Graph star = star_graph(4);
    {
        std::ofstream f("cli_partition_test.json");
        f << R"({"R":[1],"W1":[2,3],"W2":[4,5]})";
    }
    auto res = cli({"ops", "build", "dup", encode_graph6(star), "1", "--transfer-partition",
                    "cli_partition_test.json"});
    std::remove("cli_partition_test.json");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    REQUIRE(j.contains("partition"));
    CHECK(j["partition"]["R"].size() == 2);  // the center and its duplicate
    CHECK(j["n"] == 6);
}

TEST_CASE("census echoes its seed when sampling") {
    auto res = cli({"census", "-", "--ssp-trials", "1", "--seed", "99"}, "C~\n");
    CHECK(res.exit_code == 0);
    CHECK(res.err.find("seed=99") != std::string::npos);
}

TEST_CASE("theorems list and filter") {
    auto listed = cli({"theorems", "--list"});
    CHECK(listed.exit_code == 0);
    CHECK(listed.out.find("prism") != std::string::npos);
    CHECK(listed.out.find("join-biconditional") != std::string::npos);

    auto run = cli({"theorems", "--filter", "strong-complete"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("PASS") != std::string::npos);

    auto none = cli({"theorems", "--filter", "zzz-no-such-suite"});
    CHECK(none.exit_code == 64);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).exit_code == 64);
    CHECK(cli({"frobnicate"}).exit_code == 64);
    CHECK(cli({"ops", "build", "nosuchkind", "@"}).exit_code == 64);
}
