#include "pssp/instance.hpp"

#include <algorithm>
#include <queue>

#include <fmt/format.h>

namespace pssp {

const char* to_string(InstanceErrorKind kind) {
  switch (kind) {
    case InstanceErrorKind::MalformedToken: return "malformed-token";
    case InstanceErrorKind::MachineOutOfRange: return "machine-out-of-range";
    case InstanceErrorKind::PartitionOutOfRange: return "partition-out-of-range";
    case InstanceErrorKind::DuplicateMachine: return "duplicate-machine";
    case InstanceErrorKind::NonPositiveDuration: return "non-positive-duration";
    case InstanceErrorKind::DimensionMismatch: return "dimension-mismatch";
    case InstanceErrorKind::MissingCoverage: return "missing-coverage";
    case InstanceErrorKind::IndexOutOfRange: return "index-out-of-range";
    case InstanceErrorKind::Cycle: return "cycle";
    case InstanceErrorKind::TooLarge: return "too-large";
  }
  return "unknown";
}

Instance::Instance(int machines, int partitions, std::vector<Operation> operations,
                   std::vector<Precedence> edges)
    : machines_(machines), partitions_(partitions), operations_(std::move(operations)) {
  if (machines_ < 1 || partitions_ < 1) {
    throw InstanceError(InstanceErrorKind::DimensionMismatch,
                        fmt::format("need at least one machine and one partition, got {}x{}",
                                    partitions_, machines_));
  }
  const auto n = static_cast<OpId>(operations_.size());
  if (operations_.size() != static_cast<std::size_t>(machines_) * partitions_) {
    throw InstanceError(InstanceErrorKind::MissingCoverage,
                        fmt::format("expected {} operations for {} partitions x {} machines, got {}",
                                    machines_ * partitions_, partitions_, machines_, n));
  }

  by_machine_.assign(machines_, {});
  by_partition_.assign(partitions_, {});
  std::vector<OpId> cell(static_cast<std::size_t>(machines_) * partitions_, -1);
  for (OpId o = 0; o < n; ++o) {
    auto& op = operations_[o];
    op.id = o;
    if (op.duration < 1) {
      throw InstanceError(InstanceErrorKind::NonPositiveDuration,
                          fmt::format("operation {} has duration {}", o, op.duration));
    }
    if (op.machine < 0 || op.machine >= machines_) {
      throw InstanceError(InstanceErrorKind::MachineOutOfRange,
                          fmt::format("operation {} uses machine {} (have {})", o, op.machine, machines_));
    }
    if (op.partition < 0 || op.partition >= partitions_) {
      throw InstanceError(InstanceErrorKind::PartitionOutOfRange,
                          fmt::format("operation {} is in partition {} (have {})", o, op.partition,
                                      partitions_));
    }
    auto& slot = cell[static_cast<std::size_t>(op.partition) * machines_ + op.machine];
    if (slot != -1) {
      throw InstanceError(InstanceErrorKind::DuplicateMachine,
                          fmt::format("partition {} uses machine {} twice (operations {} and {})",
                                      op.partition, op.machine, slot, o));
    }
    slot = o;
    by_machine_[op.machine].push_back(o);
    by_partition_[op.partition].push_back(o);
  }

  for (const auto& e : edges) {
    if (e.before < 0 || e.before >= n || e.after < 0 || e.after >= n) {
      throw InstanceError(InstanceErrorKind::IndexOutOfRange,
                          fmt::format("edge ({}, {}) references a missing operation", e.before, e.after));
    }
    if (e.before == e.after) {
      throw InstanceError(InstanceErrorKind::Cycle, fmt::format("self-loop on operation {}", e.before));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  preds_.assign(n, {});
  succs_.assign(n, {});
  for (const auto& e : edges_) {
    succs_[e.before].push_back(e.after);
    preds_[e.after].push_back(e.before);
  }

  std::vector<int> indegree(n);
  for (OpId o = 0; o < n; ++o) indegree[o] = static_cast<int>(preds_[o].size());
  std::priority_queue<OpId, std::vector<OpId>, std::greater<>> ready;
  for (OpId o = 0; o < n; ++o)
    if (indegree[o] == 0) ready.push(o);
  while (!ready.empty()) {
    OpId o = ready.top();
    ready.pop();
    topo_.push_back(o);
    for (OpId s : succs_[o])
      if (--indegree[s] == 0) ready.push(s);
  }
  if (topo_.size() != operations_.size()) {
    throw InstanceError(InstanceErrorKind::Cycle, "precedence edges contain a directed cycle");
  }
}

bool Instance::has_edge(OpId before, OpId after) const {
  const auto& s = succs_[before];
  return std::find(s.begin(), s.end(), after) != s.end();
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.machines_ != b.machines_ || a.partitions_ != b.partitions_) return false;
  if (a.operations_.size() != b.operations_.size()) return false;
  for (std::size_t i = 0; i < a.operations_.size(); ++i) {
    const auto& x = a.operations_[i];
    const auto& y = b.operations_[i];
    if (x.machine != y.machine || x.partition != y.partition || x.duration != y.duration) return false;
  }
  return a.edges_ == b.edges_;
}

Time horizon(const Instance& inst) {
  Time total = 0;
  for (const auto& op : inst.operations()) total += op.duration;
  return total;
}

std::vector<Time> serial_schedule(const Instance& inst) {
  std::vector<Time> starts(inst.size(), 0);
  Time t = 0;
  for (OpId o : inst.topological_order()) {
    starts[o] = t;
    t += inst.duration(o);
  }
  return starts;
}

}  // namespace pssp
