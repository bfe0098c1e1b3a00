#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sbinv/cli.hpp"
#include "sbinv/json_util.hpp"

using namespace sbinv;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path, std::ios::binary);
    file << contents;
    return path;
}

} // namespace

TEST_CASE("construct emits the report document") {
    const RunResult r = run_cli({"construct", "2", "2"});
    CHECK(r.code == cli::exit_ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("signature") == 16);
    CHECK(j.at("fibration1").at("base_genus") == 2);
    CHECK(j.at("fibration1").at("fiber_genus") == 25);
    CHECK(j.at("fibration2").at("base_genus") == 9);
    CHECK(j.at("fibration2").at("fiber_genus") == 4);
}

TEST_CASE("usage errors and invalid parameters use distinct exit codes") {
    CHECK(run_cli({}).code == cli::exit_usage);
    CHECK(run_cli({"construct", "2"}).code == cli::exit_usage);
    CHECK(run_cli({"construct", "two", "2"}).code == cli::exit_usage);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_usage);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);
    CHECK(run_cli({"construct", "1", "2"}).code == cli::exit_invalid_input);
    CHECK(run_cli({"bounds", "4", "--format", "csv"}).code == cli::exit_usage);
}

TEST_CASE("simple emits the double-cover example") {
    const RunResult r = run_cli({"simple"});
    CHECK(r.code == cli::exit_ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("signature") == 32);
    CHECK(j.at("fibration1").at("fiber_genus") == 49);
}

TEST_CASE("pullback scales both fibrations") {
    const RunResult r = run_cli({"pullback", "2", "2", "2"});
    CHECK(r.code == cli::exit_ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("pullback_degree") == 2);
    CHECK(j.at("fibration1").at("base_genus") == 3);
    CHECK(j.at("fibration1").at("signature") == 32);
    CHECK(j.at("fibration2").at("base_genus") == 17);
    CHECK(j.at("fibration2").at("signature") == 32);
}

TEST_CASE("bounds lists the reports that exist") {
    const RunResult with_m = run_cli({"bounds", "4", "4"});
    CHECK(with_m.code == cli::exit_ok);
    const Json j = Json::parse(with_m.out);
    CHECK(j.at("f") == 4);
    CHECK(j.at("m") == 4);
    REQUIRE(j.at("reports").size() == 4);
    CHECK(j.at("reports")[0].at("kind") == "gf_upper");
    CHECK(j.at("reports")[0].at("source") == "this_paper");
    CHECK(j.at("reports")[3].at("kind") == "bfm_upper");
    CHECK(j.at("reports")[3].at("value") == "9");

    // Prime fiber genus: no realized bound, no even-f comparison bound.
    const Json prime = Json::parse(run_cli({"bounds", "5"}).out);
    REQUIRE(prime.at("reports").size() == 1);
    CHECK(prime.at("reports")[0].at("kind") == "gf_lower");

    // m with no dividing construction: the bfm report is absent.
    const Json no_fit = Json::parse(run_cli({"bounds", "4", "3"}).out);
    CHECK(no_fit.at("reports").size() == 3);
}

TEST_CASE("table renders CSV by default and JSON on request") {
    const RunResult csv = run_cli({"table", "4"});
    CHECK(csv.code == cli::exit_ok);
    CHECK(csv.out == "f,gf_upper,gf_witness,ekkos_upper,kotschick_lower\n"
                     "4,2,\"(2,2)\",8,2/3\n");
    const RunResult json = run_cli({"table", "4", "--format", "json"});
    CHECK(json.code == cli::exit_ok);
    const Json j = Json::parse(json.out);
    CHECK(j.at("rows")[0].at("f") == 4);
}

TEST_CASE("verify sweeps the family and reports success") {
    const RunResult r = run_cli({"verify", "3", "3"});
    CHECK(r.code == cli::exit_ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("summary") == "all checks passed");
    CHECK(j.at("constructions") == 5); // 2x2 grid plus the simple example
    CHECK(j.at("failures").empty());
    CHECK(run_cli({"verify", "1", "3"}).code == cli::exit_invalid_input);
}

TEST_CASE("monodromy reports on a cover file") {
    const auto good = write_temp("sbinv_cover_good.json", R"({
      "base_genus": 2,
      "degree": 3,
      "handles": [[[0,1,2],[0,1,2]], [[0,1,2],[0,1,2]]],
      "branches": ["(0 1 2)", "(0 2 1)"]
    })");
    const RunResult r = run_cli({"monodromy", good.string()});
    CHECK(r.code == cli::exit_ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("component_count") == 1);
    CHECK(j.at("euler") == -10);
    CHECK(j.at("genus") == 6);
    std::filesystem::remove(good);

    const auto invalid = write_temp("sbinv_cover_invalid.json", R"({
      "base_genus": 0,
      "degree": 2,
      "handles": [],
      "branches": [[1,0]]
    })");
    const RunResult bad = run_cli({"monodromy", invalid.string()});
    CHECK(bad.code == cli::exit_invalid_input);
    CHECK(Json::parse(bad.out).at("valid") == false);
    std::filesystem::remove(invalid);

    CHECK(run_cli({"monodromy", "/nonexistent/cover.json"}).code == cli::exit_invalid_input);
    const auto garbage = write_temp("sbinv_cover_garbage.json", "not json at all {");
    CHECK(run_cli({"monodromy", garbage.string()}).code == cli::exit_invalid_input);
    std::filesystem::remove(garbage);
}

TEST_CASE("disconnected covers report per-component genera") {
    const auto split = write_temp("sbinv_cover_split.json", R"({
      "base_genus": 2,
      "degree": 2,
      "handles": [[[0,1],[0,1]], [[0,1],[0,1]]],
      "branches": []
    })");
    const Json j = Json::parse(run_cli({"monodromy", split.string()}).out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("component_count") == 2);
    CHECK(j.at("genus").is_null());
    REQUIRE(j.at("components").size() == 2);
    CHECK(j.at("components")[0].at("genus") == 2);
    std::filesystem::remove(split);
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"construct", "3", "2"},
             {"table", "12"},
             {"verify", "2", "3"},
             {"bounds", "12", "18"}}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("--out writes the same bytes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "sbinv_table_out.csv";
    const RunResult to_file = run_cli({"table", "6", "--out", path.string()});
    CHECK(to_file.code == cli::exit_ok);
    CHECK(to_file.out.empty());
    std::ifstream file(path, std::ios::binary);
    std::stringstream contents;
    contents << file.rdbuf();
    CHECK(contents.str() == run_cli({"table", "6"}).out);
    std::filesystem::remove(path);
}
