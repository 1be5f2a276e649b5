#include <doctest.h>

#include "oracles.hpp"
#include "pssp/hybrid.hpp"
#include "pssp/oracle.hpp"
#include "pssp/solution.hpp"

using namespace pssp;
using pssp::testing::state_from;
using pssp::testing::table1;

namespace {

DpState table2_end(const Instance& inst) {
  return state_from(inst, {{3, 0}, {6, 0}, {0, 2}, {4, 2}, {7, 4}, {1, 5}, {8, 7}, {5, 7}, {2, 7}});
}

}  // namespace

TEST_CASE("initialize_csp at the 3x3 example root") {
  const auto inst = table1();
  const auto csp = initialize_csp(inst, root_state(inst), 22);
  REQUIRE(csp.size() == 9);
  for (const auto& v : csp.intervals()) {
    CHECK(v.est == 0);
    CHECK(v.lct() == 22);
  }
  CHECK(csp.precedences().size() == 6);
  REQUIRE(csp.disjunctive_sets().size() == 6);
  CHECK(csp.disjunctive_sets()[0] == std::vector<OpId>{0, 3, 8});  // machine sets first
  CHECK(csp.disjunctive_sets()[3] == std::vector<OpId>{0, 1, 2});  // then partitions
}

TEST_CASE("initialize_csp on a complete state") {
  const auto inst = table1();
  const auto end = table2_end(inst);
  auto fits = initialize_csp(inst, end, 11);
  for (OpId o = 0; o < 9; ++o) {
    CHECK(fits.interval(o).est == end.psi[o]);
    CHECK(fits.interval(o).lst == end.psi[o]);
  }
  CHECK(fixpoint(fits));
  auto short_ub = initialize_csp(inst, end, 10);
  CHECK_FALSE(fixpoint(short_ub));
}

TEST_CASE("initialize_csp on the two-operation state") {
  const auto inst = table1();
  const auto f3 = state_from(inst, {{3, 0}, {6, 0}});
  const auto csp = initialize_csp(inst, f3, 22);
  CHECK(csp.interval(4).est == 4);  // o5 is available but not in eta
  CHECK(csp.interval(0).est == 2);  // o1 in eta keeps psi
  CHECK(csp.interval(7).est == 4);
  CHECK(csp.interval(5).est == f3.psi[5]);  // not yet available
  CHECK(csp.interval(3).est == 0);
  CHECK(csp.interval(3).lst == 0);
}

TEST_CASE("transition_cp") {
  const auto inst = table1();
  const auto root = root_state(inst);
  std::uint64_t calls = 0;
  const auto next = transition_cp(inst, root, 0, 22, &calls);
  REQUIRE(next.has_value());
  CHECK(calls == 1);
  CHECK(next->done.to_vector() == std::vector<OpId>{0});
  CHECK(next->psi == transition(inst, root, 0).psi);
  CHECK(next->delta->is_superset_of(*root.delta));
  // o1 now precedes its M1 peers and, redundantly, o3
  const std::vector<Precedence> expected{{0, 1}, {0, 2}, {0, 3}, {0, 8}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
  CHECK(next->delta->pairs() == expected);

  // M2 carries 10 units of work
  const auto plain = transition(inst, root, 0);
  CHECK(jps_lower_bound(inst, plain, 9) > 9);
  CHECK_FALSE(transition_cp(inst, root, 0, 9).has_value());
}

TEST_CASE("transition_cp is sound on tiny instances") {
  int pruned = 0;
  int learned = 0;
  for (const auto& inst : pssp::testing::tiny_corpus(40)) {
    const Time opt = brute_force_optimum(inst);
    pssp::testing::CompletionOracle best(inst, true);
    for (const auto& s : pssp::testing::reachable_states(inst, true)) {
      if (s.complete()) continue;
      for (Time ub : {opt, opt + 1}) {
        for (OpId o : domain(inst, s)) {
          const auto plain = transition(inst, s, o);
          const auto next = transition_cp(inst, s, o, ub);
          if (!next) {
            ++pruned;
            REQUIRE(best.best(plain) > ub);
            continue;
          }
          REQUIRE(next->psi == plain.psi);
          REQUIRE(next->delta->is_superset_of(*s.delta));
          REQUIRE(next->delta->is_acyclic());
          if (next->delta->size() > s.delta->size()) ++learned;
          for (const auto& starts : pssp::testing::dp_completions(inst, plain, true)) {
            if (makespan_of(inst, starts) > ub) continue;
            for (const auto& [a, b] : next->delta->pairs()) REQUIRE(starts[a] + inst.duration(a) <= starts[b]);
          }
        }
      }
    }
  }
  CHECK(pruned > 0);
  CHECK(learned > 0);
}

TEST_CASE("lower_bound_cp") {
  const auto inst = table1();
  const auto root = root_state(inst);
  std::uint64_t calls = 0;
  CHECK(lower_bound_cp(inst, root, 10, &calls) == 10);
  CHECK(calls == 0);

  const Time opt = brute_force_optimum(inst);
  const Time lb = lower_bound_cp(inst, root, 100);
  CHECK(lb >= 10);
  CHECK(lb <= opt);

  const auto end = table2_end(inst);
  CHECK(lower_bound_cp(inst, end, 11) == 11);
  CHECK(lower_bound_cp(inst, end, 30) == 11);
}

TEST_CASE("lower_bound_cp is admissible and at least JPS") {
  for (const auto& inst : pssp::testing::tiny_corpus(40)) {
    pssp::testing::CompletionOracle best(inst, true);
    const Time h = horizon(inst);
    for (const auto& s : pssp::testing::reachable_states(inst, true)) {
      const Time b = best.best(s);
      for (Time ub : {b - 1, b, b + 2, h}) {
        if (ub < s.cmax) continue;
        const Time lb = lower_bound_cp(inst, s, ub);
        REQUIRE(lb >= std::min(jps_lower_bound(inst, s, ub), std::max(ub, s.cmax)));
        REQUIRE(lb <= std::max(b, std::min(ub, b)));
        if (ub >= b) REQUIRE(lb <= b);
      }
      // A smaller ub only lowers the result through the cap.
      const Time wide = lower_bound_cp(inst, s, h);
      for (Time ub = s.cmax; ub <= h; ++ub) REQUIRE(lower_bound_cp(inst, s, ub) >= std::min(wide, ub));
    }
  }
}
