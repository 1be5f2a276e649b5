#ifndef PSSP_INSTANCE_HPP
#define PSSP_INSTANCE_HPP

#include <cstdint>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pssp {

using Time = std::int64_t;
using OpId = std::int32_t;

/// One operation: runs on `machine`, belongs to `partition` (its job).
struct Operation {
  OpId id = 0;
  int machine = 0;
  int partition = 0;
  Time duration = 1;
};

/// Ordered pair: `before` must end no later than `after` starts.
struct Precedence {
  OpId before = 0;
  OpId after = 0;

  friend auto operator<=>(const Precedence&, const Precedence&) = default;
};

enum class InstanceErrorKind {
  MalformedToken,
  MachineOutOfRange,
  PartitionOutOfRange,
  DuplicateMachine,
  NonPositiveDuration,
  DimensionMismatch,
  MissingCoverage,
  IndexOutOfRange,
  Cycle,
  TooLarge,
};

const char* to_string(InstanceErrorKind kind);

/// Raised by parsers and by Instance construction when the input is not a
/// canonical PSSP instance.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  InstanceErrorKind kind() const { return kind_; }

 private:
  InstanceErrorKind kind_;
};

/**
 * Immutable Partial Shop Scheduling instance.
 *
 * Canonical form: every (machine, partition) pair hosts exactly one
 * operation, so there are machines() * partitions() operations. Operation
 * ids are dense, 0..size()-1, and equal their index. The precedence edges
 * form a DAG.
 */
class Instance {
 public:
  Instance() = default;
  Instance(int machines, int partitions, std::vector<Operation> operations,
           std::vector<Precedence> edges);

  int machines() const { return machines_; }
  int partitions() const { return partitions_; }
  std::size_t size() const { return operations_.size(); }

  const Operation& op(OpId o) const { return operations_[o]; }
  std::span<const Operation> operations() const { return operations_; }
  Time duration(OpId o) const { return operations_[o].duration; }
  int machine(OpId o) const { return operations_[o].machine; }
  int partition(OpId o) const { return operations_[o].partition; }

  /// Original precedence edges E, sorted and deduplicated.
  std::span<const Precedence> edges() const { return edges_; }
  std::span<const OpId> preds(OpId o) const { return preds_[o]; }
  std::span<const OpId> succs(OpId o) const { return succs_[o]; }
  bool has_edge(OpId before, OpId after) const;

  std::span<const OpId> machine_ops(int machine) const { return by_machine_[machine]; }
  std::span<const OpId> partition_ops(int partition) const { return by_partition_[partition]; }

  /// A topological order of E (Kahn, smallest id first).
  std::span<const OpId> topological_order() const { return topo_; }

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  int machines_ = 0;
  int partitions_ = 0;
  std::vector<Operation> operations_;
  std::vector<Precedence> edges_;
  std::vector<std::vector<OpId>> preds_;
  std::vector<std::vector<OpId>> succs_;
  std::vector<std::vector<OpId>> by_machine_;
  std::vector<std::vector<OpId>> by_partition_;
  std::vector<OpId> topo_;
};

/// Sum of all durations; always achievable by running operations one at a time.
Time horizon(const Instance& inst);

/// Start times of the one-at-a-time schedule in topological order; its
/// makespan equals horizon(inst).
std::vector<Time> serial_schedule(const Instance& inst);

}  // namespace pssp

#endif  // PSSP_INSTANCE_HPP
