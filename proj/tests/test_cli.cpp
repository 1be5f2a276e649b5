#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "pssp/cli.hpp"
#include "pssp/io.hpp"
#include "pssp/oracle.hpp"

using namespace pssp;
namespace fs = std::filesystem;

namespace {

const fs::path kData = PSSP_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pssp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("solve the 3x3 example") {
  const Time opt = brute_force_optimum(pssp::testing::table1());
  for (const char* model : {"dp-jps", "dp-cp-jps", "dp-cp"}) {
    const auto r = run({"solve", (kData / "table1.jsp").string(), "--model", model});
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == "optimal");
    CHECK(doc["makespan"] == opt);
  }
}

TEST_CASE("solve with a tiny time limit") {
  const auto path = scratch("big.json");
  REQUIRE(run({"gen", "-n", "12", "-m", "10", "--job-shop", "--max-duration", "60", "--seed", "2", "--out", path.string()})
              .code == kExitOk);
  const auto r = run({"solve", path.string(), "--time-limit", "0.01"});
  const auto doc = nlohmann::json::parse(r.out);
  if (doc["status"] == "unknown") {
    CHECK(r.code == kExitUnknown);
    CHECK(doc["makespan"].is_null());
  } else {
    CHECK(doc["status"] == "feasible");
    CHECK(r.code == kExitOk);
  }
}

TEST_CASE("solve writes identical artifacts for a seed") {
  const auto inst = pssp::testing::small_corpus(12)[11];
  const auto path = scratch("lns_input.json");
  write_file(path, write_pssp_json(inst));
  std::string first_json, first_trace, first_lns;
  for (int round = 0; round < 2; ++round) {
    const auto out = scratch("sol" + std::to_string(round) + ".json");
    const auto trace = scratch("trace" + std::to_string(round) + ".csv");
    const auto lns = scratch("lns" + std::to_string(round) + ".csv");
    const auto r = run({"solve", path.string(), "--lns", "--seed", "7", "--max-restarts", "50", "--out", out.string(),
                        "--trace", trace.string(), "--lns-trace", lns.string()});
    CHECK(r.code == kExitOk);
    if (round == 0) {
      first_json = read_file(out);
      first_trace = read_file(trace);
      first_lns = read_file(lns);
      CHECK(first_trace.rfind("elapsed_ms,lb,ub\n", 0) == 0);
    } else {
      CHECK(read_file(out) == first_json);
      CHECK(read_file(trace) == first_trace);
      CHECK(read_file(lns) == first_lns);
    }
  }
}

TEST_CASE("bench") {
  const auto dir = scratch("bench");
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto r = run({"bench", dir.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "instance,model,nodes,fixpoint_calls,lb,ub,status,time_ms\n");

  const auto corpus = pssp::testing::small_corpus(4);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    write_file(dir / ("g" + std::to_string(i) + ".json"), write_pssp_json(corpus[i]));
  write_file(dir / "broken.jsp", "2 2\n0 1 0 1\n1 1 0 1\n");
  r = run({"bench", dir.string(), "--models", "dp-jps,dp-cp"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::map<std::string, std::set<std::string>> ub_by_instance;
  int rows = 0;
  bool saw_ratio = false;
  bool saw_error = false;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (line.rfind("median_node_ratio", 0) == 0) {
      saw_ratio = true;
      continue;
    }
    ++rows;
    if (line.find(",error,") != std::string::npos) {
      saw_error = true;
      continue;
    }
    CHECK(cells[6] == "optimal");
    ub_by_instance[cells[0]].insert(cells[5]);
  }
  CHECK(rows == 10);
  CHECK(saw_ratio);
  CHECK(saw_error);
  for (const auto& [name, ubs] : ub_by_instance) CHECK(ubs.size() == 1);
}

TEST_CASE("verify") {
  auto r = run({"verify", (kData / "table1.jsp").string(), (kData / "table2_solution.json").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("valid makespan 11", 0) == 0);

  auto doc = nlohmann::json::parse(read_file(kData / "table2_solution.json"));
  doc["starts"][1] = 3;
  const auto bad = scratch("bad.json");
  write_file(bad, doc.dump());
  r = run({"verify", (kData / "table1.jsp").string(), bad.string()});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.out.find("invalid") == 0);
  CHECK(r.out.find('\n') + 1 < r.out.size());  // violations listed
}

TEST_CASE("gen") {
  const auto a = run({"gen", "-n", "3", "-m", "3", "--seed", "1"});
  const auto b = run({"gen", "-n", "3", "-m", "3", "--seed", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto inst = parse_pssp_json(a.out);
  CHECK(inst.size() == 9);
}

TEST_CASE("input errors") {
  CHECK(run({"solve", "/nonexistent/file.jsp"}).code == kExitInputError);
  const auto bad = scratch("bad.jsp");
  write_file(bad, "2 2\n0 1 1 x\n");
  const auto r = run({"solve", bad.string(), "--format", "jsp"});
  CHECK(r.code == kExitInputError);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"solve", bad.string(), "--model", "cp-s"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
}
