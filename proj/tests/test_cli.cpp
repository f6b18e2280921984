#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "stablerep/cli.hpp"
#include "stablerep/report.hpp"
#include "stablerep/stable_cohomology.hpp"

namespace fs = std::filesystem;
using stablerep::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = stablerep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("stablerep-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("partitions") {
    const Run r = run({"partitions", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    const json j = run_json({"partitions", "6"});
    CHECK(j.at("count") == oracle::partition_count(6));
    CHECK(run({"partitions", "x"}).code == 2);
    CHECK(run({"partitions", "-1"}).code == 2);
}

TEST_CASE("char and lr") {
    const json j = run_json({"char", "2,1"});
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("character").size() == 3);
    CHECK(run({"lr", "2,1", "1", "1,1"}).out == "1\n");
    CHECK(run({"lr", "3,2,1", "2,1", "2,1"}).out == "2\n");
    CHECK(run({"lr", "2", "1", "1,1"}).out == "0\n");
    CHECK(run({"char", "1,2"}).code == 2);
}

TEST_CASE("stable-cohomology") {
    const json j = run_json({"stable-cohomology", "2", "1"});
    CHECK(j.at("dimension") == 3);
    CHECK(j.at("degree") == 1);
    CHECK(j.at("valid_n_bound") == 8);
    CHECK(stablerep::stable_cohomology_from_json(j) == stablerep::stable_cohomology(2, 1, 1));

    const json off = run_json({"stable-cohomology", "2", "1", "--degree", "2"});
    CHECK(off.at("dimension") == 0);
    const Run text = run({"stable-cohomology", "2", "1"});
    CHECK(text.out.find("dimension: 3") != std::string::npos);
    CHECK(text.out.find("H(n)^{⊗2} ⊗ (H(n)^*)^{⊗1}") != std::string::npos);

    const json table = run_json({"stable-cohomology", "--table", "3", "2"});
    const auto rows = stablerep::dimension_table_from_json(table.at("table"));
    CHECK(rows == stablerep::dimension_table(3, 2));
    CHECK(rows.size() == 9);

    CHECK(run({"stable-cohomology"}).code == 2);
    CHECK(run({"stable-cohomology", "2", "1", "--table", "3", "3"}).code == 2);
}

TEST_CASE("labeled partitions and hom-dim") {
    const json j = run_json({"labeled-partitions", "3", "1"});
    CHECK(j.at("count") == oracle::labeled_pq(3, 1).size());
    CHECK(j.at("text").size() == j.at("elements").size());
    CHECK(run({"labeled-partitions", "1", "2"}).code == 2);
    const json h = run_json({"hom-dim", "2", "1", "2"});
    CHECK(h.at("by_highest_weights") == h.at("by_characters"));
    CHECK(h.at("by_characters") == 5);
}

TEST_CASE("verifications and exit codes") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "rw-prop", "2", "1", "2"},
                                                                 {"verify", "splitting", "3", "2", "3"},
                                                                 {"verify", "extension", "2,1", "2", "1"},
                                                                 {"verify", "induction", "3", "1"},
                                                                 {"verify", "step1", "3", "2", "2"},
                                                                 {"cauchy", "2", "2", "2"},
                                                                 {"schur-weyl", "3", "2"}}) {
        const Run r = run(args);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("PASS  ", 0) == 0);
        auto with_json = args;
        with_json.insert(with_json.begin(), "--json");
        const stablerep::Report report = json::parse(run(with_json).out).get<stablerep::Report>();
        CHECK(report.pass);
    }
    const Run failing = run({"verify", "rw-prop", "2", "1", "1"});
    CHECK(failing.code == 1);
    CHECK(failing.out.rfind("FAIL  ", 0) == 0);
    CHECK(run({"verify", "rw-prop", "2", "1"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget") {
    CHECK(run({"--budget", "10", "schur-weyl", "4", "3"}).code == 3);
    CHECK(run({"schur-weyl", "4", "3", "--budget", "10"}).code == 3);
    ::setenv("STABLEREP_BUDGET", "10", 1);
    CHECK(run({"schur-weyl", "4", "3"}).code == 3);
    CHECK(run({"--budget", "100000", "schur-weyl", "4", "3"}).code == 0);
    ::setenv("STABLEREP_BUDGET", "lots", 1);
    CHECK(run({"partitions", "3"}).code == 2);
    ::unsetenv("STABLEREP_BUDGET");
    CHECK(run({"schur-weyl", "4", "3"}).code == 0);
}

TEST_CASE("cache") {
    const fs::path dir = fresh_dir("cache");
    const std::vector<std::vector<std::string>> commands{{"stable-cohomology", "3", "1"},
                                                         {"--json", "stable-cohomology", "3", "1"},
                                                         {"verify", "rw-prop", "2", "1", "1"},
                                                         {"--json", "lr", "3,2,1", "2,1", "2,1"},
                                                         {"labeled-partitions", "3", "2"}};
    for (auto args : commands) {
        const Run plain = run(args);
        args.push_back("--cache");
        args.push_back(dir.string());
        const Run first = run(args);
        const Run second = run(args);
        CHECK(first.out == plain.out);
        CHECK(second.out == plain.out);
        CHECK(second.code == plain.code);
    }
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        ++entries;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(entries == 4);  // text and JSON runs of one command share an entry

    // A corrupt entry is recomputed.
    for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
    const Run again = run({"lr", "3,2,1", "2,1", "2,1", "--cache", dir.string()});
    CHECK(again.code == 0);
    CHECK(again.out == "2\n");
    fs::remove_all(dir);
}
