#include "pssp/dp.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pssp {

DpState root_state(const Instance& inst) {
  return root_state(inst, PrecedenceSet(inst.size(), inst.edges()));
}

DpState root_state(const Instance& inst, PrecedenceSet fixed) {
  DpState s;
  s.psi.assign(inst.size(), 0);
  s.done = OpSet(inst.size());
  s.delta = std::make_shared<const PrecedenceSet>(std::move(fixed));
  return s;
}

std::vector<OpId> eligible(const Instance& inst, const DpState& s) {
  std::vector<OpId> out;
  for (OpId o = 0; o < static_cast<OpId>(inst.size()); ++o) {
    if (s.done.contains(o)) continue;
    const auto preds = inst.preds(o);
    if (std::all_of(preds.begin(), preds.end(), [&](OpId p) { return s.done.contains(p); })) out.push_back(o);
  }
  return out;
}

bool in_eta(const Instance& inst, const DpState& s, OpId o) {
  const Time end = s.psi[o] + inst.duration(o);
  return end > s.cmax || (end == s.cmax && inst.machine(o) > s.last_machine);
}

std::vector<OpId> eta(const Instance& inst, const DpState& s) {
  auto ops = eligible(inst, s);
  std::erase_if(ops, [&](OpId o) { return !in_eta(inst, s, o); });
  return ops;
}

std::vector<OpId> domain(const Instance& inst, const DpState& s) {
  auto ops = eta(inst, s);
  std::erase_if(ops, [&](OpId o) { return !s.delta->preds_of(o).is_subset_of(s.done); });
  return ops;
}

std::vector<Time> update_est(const Instance& inst, const DpState& s, OpId o) {
  std::vector<Time> psi = s.psi;
  const Time end = psi[o] + inst.duration(o);
  std::vector<OpId> increased{o};

  auto push_peer = [&](OpId peer) {
    if (peer == o || s.done.contains(peer)) return;
    if (psi[peer] < end) {
      psi[peer] = end;
      increased.push_back(peer);
    }
  };
  for (OpId peer : inst.machine_ops(inst.machine(o))) push_peer(peer);
  for (OpId peer : inst.partition_ops(inst.partition(o))) push_peer(peer);

  while (!increased.empty()) {
    const OpId x = increased.back();
    increased.pop_back();
    const Time ready = psi[x] + inst.duration(x);
    for (OpId y : inst.succs(x)) {
      if (s.done.contains(y)) continue;
      if (psi[y] < ready) {
        psi[y] = ready;
        increased.push_back(y);
      }
    }
  }
  return psi;
}

DpState transition(const Instance& inst, const DpState& s, OpId o) {
  DpState next;
  next.psi = update_est(inst, s, o);
  next.last_machine = inst.machine(o);
  next.done = s.done;
  next.done.insert(o);
  next.done_count = s.done_count + 1;
  next.delta = s.delta;
  next.cmax = std::max(s.cmax, s.psi[o] + inst.duration(o));
  return next;
}

Time transition_cost(const Instance& inst, const DpState& s, OpId o) {
  return std::max(s.cmax, s.psi[o] + inst.duration(o)) - s.cmax;
}

Time alpha(const Instance& inst, const DpState& s, OpId o) {
  return in_eta(inst, s, o) ? s.psi[o] + inst.duration(o) : s.cmax + inst.duration(o);
}

std::vector<Time> alpha_profile(const Instance& inst, const DpState& s) {
  std::vector<Time> out;
  for (OpId o : eligible(inst, s)) out.push_back(alpha(inst, s, o));
  return out;
}

bool dominates(const Instance& inst, const DpState& s1, const DpState& s2) {
  if (!(s1.done == s2.done)) return false;
  // nothing left to compare on finished schedules
  if (s1.complete()) return s1.cmax <= s2.cmax;
  for (OpId o : eligible(inst, s1))
    if (alpha(inst, s1, o) > alpha(inst, s2, o)) return false;
  return true;
}

bool machine_dominated(const Instance& inst, const DpState& s) {
  const auto avail = eligible(inst, s);
  auto blocked = [&](OpId o) { return alpha(inst, s, o) == s.cmax + inst.duration(o); };
  for (OpId o : avail) {
    if (in_eta(inst, s, o)) continue;
    const bool all_blocked = std::all_of(avail.begin(), avail.end(), [&](OpId peer) {
      const bool shares = inst.machine(peer) == inst.machine(o) || inst.partition(peer) == inst.partition(o);
      return !shares || blocked(peer);
    });
    if (all_blocked) return true;
  }
  return false;
}

std::vector<Time> compute_lct(const Instance& inst, const DpState& s, Time ub) {
  const auto n = static_cast<OpId>(inst.size());
  const auto& delta = *s.delta;
  std::vector<int> outdegree(n, 0);
  for (OpId b = 0; b < n; ++b) delta.preds_of(b).for_each([&](OpId a) { ++outdegree[a]; });
  // Backward Kahn pass from the sinks. Operations on a cycle, if any, keep ub.
  std::vector<Time> lct(n, ub);
  std::vector<OpId> stack;
  for (OpId o = 0; o < n; ++o)
    if (outdegree[o] == 0) stack.push_back(o);
  while (!stack.empty()) {
    const OpId b = stack.back();
    stack.pop_back();
    delta.preds_of(b).for_each([&](OpId a) {
      lct[a] = std::min(lct[a], lct[b] - inst.duration(b));
      if (--outdegree[a] == 0) stack.push_back(a);
    });
  }
  return lct;
}

Time jackson_preemptive_completion(std::vector<JpsJob> jobs) {
  if (jobs.empty()) return std::numeric_limits<Time>::min();
  std::sort(jobs.begin(), jobs.end(), [](const JpsJob& a, const JpsJob& b) {
    return a.head != b.head ? a.head < b.head : a.id < b.id;
  });
  struct Pending {
    Time deadline;
    OpId id;
    Time remaining;
  };
  auto later = [](const Pending& a, const Pending& b) {
    return a.deadline != b.deadline ? a.deadline > b.deadline : a.id > b.id;
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> ready(later);

  Time t = jobs.front().head;
  std::size_t next = 0;
  while (next < jobs.size() || !ready.empty()) {
    if (ready.empty()) t = std::max(t, jobs[next].head);
    while (next < jobs.size() && jobs[next].head <= t) {
      ready.push({jobs[next].deadline, jobs[next].id, jobs[next].duration});
      ++next;
    }
    Pending cur = ready.top();
    ready.pop();
    const Time horizon_to_release = next < jobs.size() ? jobs[next].head - t : cur.remaining;
    const Time run = std::min(cur.remaining, horizon_to_release);
    t += run;
    cur.remaining -= run;
    if (cur.remaining > 0) ready.push(cur);
  }
  return t;
}

Time jps_lower_bound(const Instance& inst, const DpState& s, Time ub) {
  if (s.complete()) return s.cmax;
  const auto lct = compute_lct(inst, s, ub);
  Time bound = s.cmax;
  std::vector<JpsJob> jobs;
  for (int k = 0; k < inst.machines(); ++k) {
    jobs.clear();
    for (OpId o : inst.machine_ops(k))
      if (!s.done.contains(o)) jobs.push_back({o, s.psi[o], inst.duration(o), lct[o]});
    if (!jobs.empty()) bound = std::max(bound, jackson_preemptive_completion(jobs));
  }
  return bound;
}

}  // namespace pssp
