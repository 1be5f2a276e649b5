#ifndef PSSP_SOLUTION_HPP
#define PSSP_SOLUTION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pssp/instance.hpp"

namespace pssp {

enum class Status { Optimal, Feasible, Infeasible, Unknown };

const char* to_string(Status status);
Status parse_status(std::string_view name);

/// One row of the anytime trace ("elapsed_ms,lb,ub").
struct TracePoint {
  std::int64_t elapsed_ms = 0;
  Time lb = 0;
  Time ub = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchStats {
  std::uint64_t nodes = 0;           // states that passed dominance and bound checks, plus the root
  std::uint64_t fixpoint_calls = 0;
  std::int64_t elapsed_ms = 0;
  Time lower_bound = 0;
  Time upper_bound = 0;
  std::vector<TracePoint> trace;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct Solution {
  std::vector<Time> starts;  // empty when no schedule is known
  Time makespan = 0;
  Status status = Status::Unknown;
  SearchStats stats;

  bool has_schedule() const { return !starts.empty(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// max over o of starts[o] + p_o.
Time makespan_of(const Instance& inst, const std::vector<Time>& starts);

struct SerializeOptions {
  // Wall-clock fields are written as 0 when false, which keeps output
  // byte-identical across runs.
  bool timing = true;
};

std::string write_solution_json(const Solution& sol, SerializeOptions opts = {});
Solution parse_solution_json(std::string_view text);
std::string write_trace_csv(const std::vector<TracePoint>& trace, SerializeOptions opts = {});

enum class ViolationKind { MissingStart, NegativeStart, Precedence, MachineOverlap, PartitionOverlap };

struct Violation {
  ViolationKind kind;
  OpId first = -1;
  OpId second = -1;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  Time makespan = 0;
  std::vector<Violation> violations;
};

/// Checks every edge of E and every machine/partition pair for overlap.
/// Intervals are half-open, so [0,3) and [3,5) do not overlap.
VerificationReport verify_solution(const Instance& inst, const Solution& sol);
VerificationReport verify_schedule(const Instance& inst, const std::vector<Time>& starts,
                                   std::span<const Precedence> extra_precedences = {});

}  // namespace pssp

#endif  // PSSP_SOLUTION_HPP
