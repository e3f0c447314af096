#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = coxlen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const char* stem) {
  auto p = std::filesystem::temp_directory_path() /
           (std::string("coxlen_test_") + stem);
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("reduce prints the rewrite summary") {
    auto r = run_cli({"reduce", "-g", "single:3:3", "-w", "1 2 1 2 2 3 2 3"});
    CHECK(r.exit == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "input:       1 2 1 2 2 3 2 3\n"
          "reduced:     2 1 3 2\n"
          "length:      4\n"
          "braid moves: 2\n"
          "nil moves:   2\n"
          "identity:    no\n");
  }

  TEST_CASE("reduce of the empty word reports the identity") {
    auto r = run_cli({"reduce", "-g", "universal:3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("reduced:     (empty)") != std::string::npos);
    CHECK(r.out.find("identity:    yes") != std::string::npos);
  }

  TEST_CASE("reflen reports 1-based witness positions") {
    auto r = run_cli({"reflen", "-g", "single:3:4", "-w", "(123)^5 1 2",
                      "--witness"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("reflection length: 5") != std::string::npos);
    CHECK(r.out.find("{1, 3, 7, 10, 13}") != std::string::npos);
  }

  TEST_CASE("reflen --all enumerates deletion sets in colex order") {
    auto r = run_cli({"reflen", "-g", "single:3:4", "-w", "(123)^5 1 2",
                      "--all", "--format", "json"});
    CHECK(r.exit == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["deletion_set_count"] == 21);
    auto sets = doc["result"]["deletion_sets"];
    REQUIRE(sets.size() == 21);
    CHECK(sets[0] == json::array({1, 3, 7, 10, 13}));
  }

  TEST_CASE("json envelope carries the fixed schema") {
    auto r = run_cli({"reflen", "-g", "single:3:4", "-w", "(123)^5 1 2",
                      "--format", "json"});
    CHECK(r.exit == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "reflen");
    CHECK(doc["group"]["spec"] == "triangle:4:4:4");  // rank 3 renders so
    CHECK(doc["group"]["rank"] == 3);
    CHECK(doc["group"]["digest"].is_string());
    CHECK(doc["input"]["word"] == "(123)^5 1 2");
    CHECK(doc["result"]["reflection_length"] == 5);
    CHECK(doc["result"]["coxeter_length"] == 17);
    CHECK(doc["stats"].contains("elapsed_ms"));
    CHECK(doc["stats"].contains("subsets_tested"));
    CHECK(doc["stats"].contains("orbit_states"));
    CHECK(doc["stats"].contains("cache_hits"));
    CHECK(doc["stats"]["subsets_tested"].get<long long>() > 0);
  }

  TEST_CASE("oracle cross-check agrees") {
    auto r = run_cli({"reflen", "-g", "triangle:3:3:4", "-w", "(123)^3",
                      "--oracle", "both", "--format", "json"});
    CHECK(r.exit == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["oracle_check"]["agree"] == true);
    CHECK(doc["result"]["oracle_check"]["matrix"] ==
          doc["result"]["oracle_check"]["rewriting"]);
  }

  TEST_CASE("powers-table emits the csv header and pinned rows") {
    auto r = run_cli({"powers-table", "-g", "triangle:3:3:4", "--max", "4",
                      "--format", "csv"});
    CHECK(r.exit == 0);
    CHECK(r.out ==
          "lambda,reflection_length\n"
          "1,3\n"
          "2,4\n"
          "3,3\n"
          "4,4\n");
  }

  TEST_CASE("bounds compares closed forms against the search") {
    auto r = run_cli({"bounds", "-g", "single:3:4", "-l", "5", "-r", "2",
                      "--format", "json"});
    CHECK(r.exit == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["chi"] == 5);
    CHECK(doc["result"]["upper"] == 5);
    CHECK(doc["result"]["realized"] == 5);
    CHECK(doc["result"]["bounds_hold"] == true);
    CHECK(doc["result"]["unbounded_family"] == false);
    CHECK(doc["result"]["closed_form_lower"].is_null());
  }

  TEST_CASE("bounds reports the lower bound on pure powers") {
    auto r = run_cli({"bounds", "-g", "single:3:5", "-l", "6", "-r", "0",
                      "--format", "json"});
    CHECK(r.exit == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["chi"] == 7);
    CHECK(doc["result"]["unbounded_family"] == true);
    CHECK(doc["result"]["closed_form_lower"] == 3);  // 18 - 12 + 2 - floor(36/7)
    CHECK(doc["result"]["upper"] == 6);
    CHECK(doc["result"]["realized"] == 6);
    CHECK(doc["result"]["bounds_hold"] == true);
  }

  TEST_CASE("conjecture-scan lists descent positions") {
    auto r = run_cli({"conjecture-scan", "-g", "single:3:3", "-w", "1 2 1"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("descent positions:  {2}") != std::string::npos);
    CHECK(r.out.find("verdict:            witness found") != std::string::npos);
  }

  TEST_CASE("verify suites pass and print one line per check") {
    auto r = run_cli({"verify", "-g", "universal:3", "invariants"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS ") != std::string::npos);
    CHECK(r.out.find("checks passed") != std::string::npos);
  }

  TEST_CASE("exit codes separate input errors from budget exhaustion") {
    CHECK(run_cli({"reflen", "-g", "nonsense:9", "-w", "1"}).exit == 2);
    CHECK(run_cli({"reflen", "-g", "single:3:3", "-w", "1 4"}).exit == 2);
    CHECK(run_cli({"reflen", "-g", "single:3:3", "-w", "1 x"}).exit == 2);
    CHECK(run_cli({"nosuchcommand"}).exit == 2);
    auto budget = run_cli({"reflen", "-g", "single:3:4", "-w", "(123)^5 1 2",
                           "--max-subsets", "2"});
    CHECK(budget.exit == 3);
    CHECK(budget.err.find("budget exhausted") != std::string::npos);
    CHECK(coxlen::cli::kExitVerifyFail == 1);
  }

  TEST_CASE("result cache replays identical results and warns on corruption") {
    std::string path = temp_file("cache.jsonl");
    std::vector<std::string> args{"reflen", "-g",       "single:3:4",
                                  "-w",     "(123)^4 1", "--format",
                                  "json",   "--cache",  path};
    auto first = run_cli(args);
    REQUIRE(first.exit == 0);
    CHECK(std::filesystem::exists(path));

    // Corrupt line in the middle must be skipped with a warning, and the
    // cached rerun must reproduce the result payload bit for bit.
    {
      std::ofstream f(path, std::ios::app);
      f << "{not json\n";
    }
    auto second = run_cli(args);
    CHECK(second.exit == 0);
    CHECK(second.err.find("skipping corrupt cache line") != std::string::npos);

    json a = json::parse(first.out);
    json b = json::parse(second.out);
    CHECK(a["result"] == b["result"]);
    CHECK(b["stats"]["cache_hits"].get<long long>() >= 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("version flag prints and succeeds") {
    auto r = run_cli({"--version"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("coxlen") != std::string::npos);
  }
}
