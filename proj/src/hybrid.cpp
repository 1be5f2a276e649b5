#include "pssp/hybrid.hpp"

#include <algorithm>

namespace pssp {

Csp initialize_csp(const Instance& inst, const DpState& s, Time ub) {
  const auto n = static_cast<OpId>(inst.size());
  std::vector<IntervalVar> intervals(inst.size());
  OpSet available(inst.size());
  for (OpId o : eligible(inst, s)) available.insert(o);

  for (OpId o = 0; o < n; ++o) {
    auto& v = intervals[o];
    v.duration = inst.duration(o);
    if (s.done.contains(o)) {
      // Fixed; empty when it already ends after ub.
      v.est = s.psi[o];
      v.lst = std::min(s.psi[o], ub - v.duration);
      continue;
    }
    if (available.contains(o) && !in_eta(inst, s, o))
      v.est = s.cmax;
    else
      v.est = s.psi[o];
    v.lst = ub - v.duration;
  }

  std::vector<std::vector<OpId>> sets;
  sets.reserve(static_cast<std::size_t>(inst.machines() + inst.partitions()));
  for (int k = 0; k < inst.machines(); ++k) {
    const auto ops = inst.machine_ops(k);
    sets.emplace_back(ops.begin(), ops.end());
  }
  for (int j = 0; j < inst.partitions(); ++j) {
    const auto ops = inst.partition_ops(j);
    sets.emplace_back(ops.begin(), ops.end());
  }
  const auto pairs = s.delta->pairs();
  return Csp(std::move(intervals), pairs, std::move(sets));
}

std::optional<DpState> transition_cp(const Instance& inst, const DpState& s, OpId o, Time ub,
                                     std::uint64_t* fixpoint_calls) {
  DpState next = transition(inst, s, o);
  Csp csp = initialize_csp(inst, next, ub);
  const bool ok = fixpoint(csp);
  if (fixpoint_calls) *fixpoint_calls += csp.fixpoint_calls;
  if (!ok) return std::nullopt;

  const auto learned = detected_precedence_pairs(csp);
  if (!learned.empty()) {
    auto delta = std::make_shared<PrecedenceSet>(*next.delta);
    for (const auto& p : learned) delta->insert(p);
    next.delta = std::move(delta);
  }
  return next;
}

Time lower_bound_cp(const Instance& inst, const DpState& s, Time ub, std::uint64_t* fixpoint_calls) {
  Time lb = jps_lower_bound(inst, s, ub);
  while (lb < ub) {
    const Time mid = lb + (ub - lb) / 2;
    Csp csp = initialize_csp(inst, s, mid);
    const bool ok = fixpoint(csp);
    if (fixpoint_calls) *fixpoint_calls += csp.fixpoint_calls;
    if (ok)
      ub = mid;
    else
      lb = mid + 1;
  }
  return lb;
}

}  // namespace pssp
