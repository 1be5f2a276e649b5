#include "pssp/oracle.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

namespace pssp {

namespace {

struct Enumerator {
  const Instance& inst;
  std::vector<Time> machine_free;
  std::vector<Time> partition_free;
  std::vector<Time> end;
  std::vector<int> missing_preds;
  std::vector<bool> scheduled;
  Time best;

  explicit Enumerator(const Instance& i)
      : inst(i),
        machine_free(i.machines(), 0),
        partition_free(i.partitions(), 0),
        end(i.size(), 0),
        missing_preds(i.size()),
        scheduled(i.size(), false),
        best(horizon(i)) {
    for (OpId o = 0; o < static_cast<OpId>(i.size()); ++o)
      missing_preds[o] = static_cast<int>(i.preds(o).size());
  }

  void dfs(std::size_t placed, Time cmax) {
    if (placed == inst.size()) {
      best = std::min(best, cmax);
      return;
    }
    for (OpId o = 0; o < static_cast<OpId>(inst.size()); ++o) {
      if (scheduled[o] || missing_preds[o] != 0) continue;
      const int mach = inst.machine(o);
      const int part = inst.partition(o);
      Time start = std::max(machine_free[mach], partition_free[part]);
      for (OpId p : inst.preds(o)) start = std::max(start, end[p]);
      const Time finish = start + inst.duration(o);
      const Time next_cmax = std::max(cmax, finish);
      if (next_cmax >= best) continue;

      const Time saved_machine = machine_free[mach];
      const Time saved_partition = partition_free[part];
      scheduled[o] = true;
      end[o] = finish;
      machine_free[mach] = finish;
      partition_free[part] = finish;
      for (OpId s : inst.succs(o)) --missing_preds[s];

      dfs(placed + 1, next_cmax);

      for (OpId s : inst.succs(o)) ++missing_preds[s];
      machine_free[mach] = saved_machine;
      partition_free[part] = saved_partition;
      scheduled[o] = false;
    }
  }
};

}  // namespace

Time brute_force_optimum(const Instance& inst) {
  if (inst.size() > kBruteForceMaxOps) {
    throw InstanceError(InstanceErrorKind::TooLarge,
                        fmt::format("brute force is limited to {} operations, instance has {}",
                                    kBruteForceMaxOps, inst.size()));
  }
  Enumerator e(inst);
  // The serial schedule reaches horizon(), so start one above it to let
  // the search record that value when nothing beats it.
  e.best = horizon(inst) + 1;
  e.dfs(0, 0);
  return e.best;
}

}  // namespace pssp
