#ifndef PSSP_DP_HPP
#define PSSP_DP_HPP

#include <memory>
#include <span>
#include <vector>

#include "pssp/instance.hpp"
#include "pssp/op_set.hpp"
#include "pssp/precedence_set.hpp"

namespace pssp {

/**
 * DP state: earliest starts psi (the fixed start for scheduled operations),
 * machine of the last scheduled operation (-1 at the root), the scheduled
 * set, the known precedences delta (starts as E) and the partial makespan.
 *
 * States are values; transitions build fresh ones. delta is shared between
 * states until a transition learns a new pair.
 */
struct DpState {
  std::vector<Time> psi;
  int last_machine = -1;
  OpSet done;
  std::size_t done_count = 0;
  std::shared_ptr<const PrecedenceSet> delta;
  Time cmax = 0;

  bool complete() const { return done_count == psi.size(); }
};

DpState root_state(const Instance& inst);
/// Root whose delta is `fixed` instead of E (A* subproblems).
DpState root_state(const Instance& inst, PrecedenceSet fixed);

/// Unscheduled operations whose predecessors in E are all scheduled.
std::vector<OpId> eligible(const Instance& inst, const DpState& s);

/// Transition dominance: psi+p > C_max, or psi+p == C_max and a machine above the last one.
bool in_eta(const Instance& inst, const DpState& s, OpId o);
std::vector<OpId> eta(const Instance& inst, const DpState& s);

/// eta(s) restricted to operations whose delta-predecessors are all scheduled.
std::vector<OpId> domain(const Instance& inst, const DpState& s);

/**
 * Earliest starts after scheduling `o` at psi[o]: unscheduled operations
 * sharing o's machine or partition are pushed to o's end, then increases
 * cascade along E starting from o itself.
 */
std::vector<Time> update_est(const Instance& inst, const DpState& s, OpId o);

/// Appends `o`; delta is carried over unchanged.
DpState transition(const Instance& inst, const DpState& s, OpId o);

/// Increase of the partial makespan caused by appending `o`.
Time transition_cost(const Instance& inst, const DpState& s, OpId o);

/// Earliest completion of an available `o` following s.
Time alpha(const Instance& inst, const DpState& s, OpId o);

/// alpha over eligible(s), in increasing operation id.
std::vector<Time> alpha_profile(const Instance& inst, const DpState& s);

/// s1 dominates s2: same scheduled set and alpha pointwise no larger.
/// Complete states compare by makespan.
bool dominates(const Instance& inst, const DpState& s1, const DpState& s2);

/**
 * True when some available operation o outside eta has every available
 * operation on its machine or in its partition unable to start before
 * C_max. Such an o could have been placed earlier, so an equivalent or
 * better schedule avoids this state.
 */
bool machine_dominated(const Instance& inst, const DpState& s);

/// Latest completion times from a backward pass over delta, capped at ub.
std::vector<Time> compute_lct(const Instance& inst, const DpState& s, Time ub);

/// Jackson preemptive schedule per machine over unscheduled operations
/// (heads psi, EDD on lct, ties by lower id); max with C_max.
Time jps_lower_bound(const Instance& inst, const DpState& s, Time ub);

/// Completion time of a preemptive EDD run; jobs are (head, duration, deadline).
struct JpsJob {
  OpId id;
  Time head;
  Time duration;
  Time deadline;
};
Time jackson_preemptive_completion(std::vector<JpsJob> jobs);

inline const OpSet& dominance_key(const DpState& s) { return s.done; }

}  // namespace pssp

#endif  // PSSP_DP_HPP
