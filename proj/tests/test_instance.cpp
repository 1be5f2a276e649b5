#include <doctest.h>

#include "oracles.hpp"
#include "pssp/io.hpp"
#include "pssp/oracle.hpp"
#include "pssp/solution.hpp"

using namespace pssp;
using pssp::testing::table1;
using pssp::testing::table2_starts;

namespace {

InstanceErrorKind jsp_error(std::string_view text) {
  try {
    parse_jsp_standard(text);
  } catch (const InstanceError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return InstanceErrorKind::MalformedToken;
}

InstanceErrorKind json_error(std::string_view text) {
  try {
    parse_pssp_json(text);
  } catch (const InstanceError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return InstanceErrorKind::MalformedToken;
}

}  // namespace

TEST_CASE("jsp text: the 3x3 example") {
  const Instance inst = table1();
  CHECK(inst.machines() == 3);
  CHECK(inst.partitions() == 3);
  CHECK(inst.size() == 9);
  const std::vector<Precedence> chains{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
  CHECK(std::vector<Precedence>(inst.edges().begin(), inst.edges().end()) == chains);
  CHECK(inst.machine(0) == 0);
  CHECK(inst.duration(0) == 3);
  CHECK(inst.machine(5) == 1);
  CHECK(inst.duration(5) == 4);
  CHECK(inst.partition(7) == 2);
}

TEST_CASE("jsp text: single operation") {
  const auto inst = parse_jsp_standard("1 1\n0 5\n");
  CHECK(inst.size() == 1);
  CHECK(inst.edges().empty());
  CHECK(horizon(inst) == 5);
}

TEST_CASE("jsp text: distinct errors") {
  CHECK(jsp_error("2 2\n0 1 1 1\n1 1 1 1\n") == InstanceErrorKind::DuplicateMachine);
  CHECK(jsp_error("1 2\n0 1 2 1\n") == InstanceErrorKind::MachineOutOfRange);
  CHECK(jsp_error("1 1\n0 x\n") == InstanceErrorKind::MalformedToken);
  CHECK(jsp_error("1 1\n0 0\n") == InstanceErrorKind::NonPositiveDuration);
}

TEST_CASE("osp matrices") {
  SUBCASE("2x2 with identity machines") {
    const auto inst = parse_osp("2 2\n1 2\n3 4\n1 2\n1 2\n");
    CHECK(inst.size() == 4);
    CHECK(inst.edges().empty());
    CHECK(inst.duration(3) == 4);
    CHECK(inst.machine(1) == 1);
    CHECK(inst.partition(2) == 1);
    CHECK(horizon(inst) == 10);
  }
  SUBCASE("gueret-prins without machine matrix") {
    const auto inst = parse_osp("1\n7\n", InstanceFormat::OspGueretPrins);
    CHECK(inst.size() == 1);
    CHECK(inst.duration(0) == 7);
  }
  SUBCASE("ragged") {
    CHECK_THROWS_AS(parse_osp("2 2\n1 2\n3\n", InstanceFormat::OspGueretPrins), InstanceError);
  }
  SUBCASE("zero duration") {
    CHECK_THROWS_AS(parse_osp("1 1\n0\n", InstanceFormat::OspGueretPrins), InstanceError);
  }
}

TEST_CASE("pssp json") {
  const std::string table1_json = R"({"machines":3,"partitions":3,"operations":[
    {"machine":0,"partition":0,"duration":3},{"machine":1,"partition":0,"duration":2},{"machine":2,"partition":0,"duration":2},
    {"machine":0,"partition":1,"duration":2},{"machine":2,"partition":1,"duration":1},{"machine":1,"partition":1,"duration":4},
    {"machine":1,"partition":2,"duration":4},{"machine":2,"partition":2,"duration":3},{"machine":0,"partition":2,"duration":1}],
    "edges":[[0,1],[1,2],[3,4],[4,5],[6,7],[7,8]]})";
  CHECK(parse_pssp_json(table1_json) == table1());
  CHECK(parse_pssp_json(write_pssp_json(table1())) == table1());

  const std::string cyclic = R"({"machines":2,"partitions":1,"operations":[
    {"machine":0,"partition":0,"duration":1},{"machine":1,"partition":0,"duration":1}],"edges":[[0,1],[1,0]]})";
  CHECK(json_error(cyclic) == InstanceErrorKind::Cycle);

  const std::string open_shop = R"({"machines":2,"partitions":1,"operations":[
    {"machine":0,"partition":0,"duration":1},{"machine":1,"partition":0,"duration":1}],"edges":[]})";
  CHECK(parse_pssp_json(open_shop).edges().empty());

  const std::string uncovered = R"({"machines":2,"partitions":1,"operations":[
    {"machine":0,"partition":0,"duration":1},{"machine":0,"partition":0,"duration":1}],"edges":[]})";
  CHECK_THROWS_AS(parse_pssp_json(uncovered), InstanceError);

  const std::string bad_index = R"({"machines":2,"partitions":1,"operations":[
    {"machine":0,"partition":0,"duration":1},{"machine":1,"partition":0,"duration":1}],"edges":[[0,5]]})";
  CHECK(json_error(bad_index) == InstanceErrorKind::IndexOutOfRange);
}

TEST_CASE("verify: reference schedule") {
  const auto inst = table1();
  const auto report = verify_schedule(inst, table2_starts());
  CHECK(report.valid);
  CHECK(report.makespan == 11);

  auto moved = table2_starts();
  moved[1] = 3;  // o2 now overlaps o7 on M2
  const auto bad = verify_schedule(inst, moved);
  CHECK_FALSE(bad.valid);
  bool machine_overlap = false;
  for (const auto& v : bad.violations) machine_overlap |= v.kind == ViolationKind::MachineOverlap;
  CHECK(machine_overlap);

  const auto single = parse_jsp_standard("1 1\n0 5\n");
  const auto r = verify_schedule(single, {0});
  CHECK(r.valid);
  CHECK(r.makespan == 5);
}

TEST_CASE("verify agrees with a pairwise check on every small start vector") {
  for (const auto& inst : pssp::testing::tiny_corpus(12)) {
    if (inst.size() > 4) continue;
    std::vector<Time> starts(inst.size(), 0);
    const Time range = 5;
    std::size_t total = 1;
    for (std::size_t i = 0; i < inst.size(); ++i) total *= range;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& s : starts) {
        s = static_cast<Time>(c % range);
        c /= range;
      }
      REQUIRE(verify_schedule(inst, starts).valid == pssp::testing::naive_feasible(inst, starts));
    }
  }
  // touching intervals do not overlap
  const auto inst = parse_osp("1 2\n3 2\n", InstanceFormat::OspGueretPrins);
  CHECK(verify_schedule(inst, {0, 3}).valid);
  CHECK_FALSE(verify_schedule(inst, {0, 2}).valid);
}

TEST_CASE("horizon") {
  CHECK(horizon(table1()) == 22);
  const auto inst = table1();
  CHECK(verify_schedule(inst, serial_schedule(inst)).valid);
  CHECK(makespan_of(inst, serial_schedule(inst)) == 22);
}

TEST_CASE("brute force optimum") {
  const Time opt = brute_force_optimum(table1());
  CHECK(opt <= 11);
  CHECK(opt >= 10);  // M2 carries 2 + 4 + 4
  CHECK(brute_force_optimum(parse_jsp_standard("1 1\n0 5\n")) == 5);
  const auto two = parse_pssp_json(R"({"machines":1,"partitions":2,"operations":[
    {"machine":0,"partition":0,"duration":2},{"machine":0,"partition":1,"duration":3}],"edges":[]})");
  CHECK(brute_force_optimum(two) == 5);

  GeneratorOptions big;
  big.partitions = 4;
  big.machines = 4;
  CHECK_THROWS_AS(brute_force_optimum(generate_instance(big)), InstanceError);
}

TEST_CASE("brute force matches interval enumeration on tiny instances") {
  for (const auto& inst : pssp::testing::tiny_corpus(30)) {
    if (inst.size() > 5) continue;
    const Time opt = brute_force_optimum(inst);
    CHECK(opt == pssp::testing::interval_enumeration_optimum(inst));
    CHECK(horizon(inst) >= opt);
  }
}

TEST_CASE("canonical coverage of parsed and generated instances") {
  for (const auto& inst : pssp::testing::oracle_corpus()) {
    REQUIRE(inst.size() == static_cast<std::size_t>(inst.machines() * inst.partitions()));
    for (int j = 0; j < inst.partitions(); ++j) {
      std::vector<int> count(inst.machines(), 0);
      for (OpId o : inst.partition_ops(j)) ++count[inst.machine(o)];
      for (int c : count) REQUIRE(c == 1);
    }
  }
}

TEST_CASE("solution json") {
  Solution sol;
  sol.starts = table2_starts();
  sol.makespan = 11;
  sol.status = Status::Feasible;
  sol.stats.nodes = 4;
  sol.stats.trace = {{0, 10, 22}, {3, 10, 11}};
  const auto text = write_solution_json(sol);
  CHECK(text.find("\"makespan\": 11") != std::string::npos);
  CHECK(parse_solution_json(text) == sol);

  Solution empty;
  const auto unknown = write_solution_json(empty);
  CHECK(unknown.find("\"unknown\"") != std::string::npos);
  CHECK(parse_solution_json(unknown) == empty);

  sol.stats.elapsed_ms = 123;
  const auto quiet = write_solution_json(sol, {false});
  CHECK(quiet.find("123") == std::string::npos);
  CHECK(write_trace_csv(sol.stats.trace, {false}) == "elapsed_ms,lb,ub\n0,10,22\n0,10,11\n");
}
