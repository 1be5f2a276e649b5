// Independent, deliberately naive oracles shared by unit and acceptance tests.
#ifndef PSSP_TESTS_ORACLES_HPP
#define PSSP_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pssp/dp.hpp"
#include "pssp/generator.hpp"
#include "pssp/instance.hpp"

namespace pssp::testing {

Instance table1();
/// reference schedule, ids 0..8 for o1..o9.
std::vector<Time> table2_starts();

/// Generated instances: sizes cycle through `shapes` (partitions, machines),
/// densities through {0, 0.2, 0.5}, every other block is job-shop chained.
std::vector<Instance> corpus(std::size_t count, const std::vector<std::pair<int, int>>& shapes,
                             std::uint64_t first_seed, Time max_duration = 5);

/// 200 instances with partitions, machines in {2, 3}.
std::vector<Instance> oracle_corpus();
/// Instances with at most 6 operations.
std::vector<Instance> tiny_corpus(std::size_t count);
/// Instances with at most 8 operations.
std::vector<Instance> small_corpus(std::size_t count);

/// Every complete schedule reachable from `s` by DP transitions choosing from
/// eta (or from all available operations), with multiplicity.
std::vector<std::vector<Time>> dp_completions(const Instance& inst, const DpState& s, bool eta_only);

/// Smallest makespan over dp_completions, memoised on the exact state.
class CompletionOracle {
 public:
  CompletionOracle(const Instance& inst, bool eta_only) : inst_(inst), eta_only_(eta_only) {}
  Time best(const DpState& s);

 private:
  const Instance& inst_;
  bool eta_only_;
  std::map<std::string, Time> memo_;
};

/// Distinct reachable states (by psi, last machine, scheduled set).
std::vector<DpState> reachable_states(const Instance& inst, bool eta_only);

/// Calls `visit` on every integral start vector that respects E, machine and
/// partition no-overlap and ends by ub. Starts are restricted to
/// [lo[o], hi[o]] when those are given.
void for_each_feasible_schedule(const Instance& inst, Time ub, const std::function<void(const std::vector<Time>&)>& visit,
                                const std::vector<Time>& lo = {}, const std::vector<Time>& hi = {});

/// Optimum found by trying every start assignment; only for tiny instances.
Time interval_enumeration_optimum(const Instance& inst);

/// Pairwise overlap check written independently of verify_schedule.
bool naive_feasible(const Instance& inst, const std::vector<Time>& starts);

/// Machine dominance where only machine peers are examined.
bool machine_only_dominated(const Instance& inst, const DpState& s);

/// Valid schedule `extra` time units longer than `starts`: the last-ending
/// operation is delayed.
std::vector<Time> delayed_schedule(const Instance& inst, std::vector<Time> starts, Time extra);

/// Builds a state by scheduling the given operations at the given starts,
/// using transition() and asserting psi agrees.
DpState state_from(const Instance& inst, const std::vector<std::pair<OpId, Time>>& placed);

}  // namespace pssp::testing

#endif
