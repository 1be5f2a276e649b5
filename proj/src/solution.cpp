#include "pssp/solution.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace pssp {

const char* to_string(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

Status parse_status(std::string_view name) {
  if (name == "optimal") return Status::Optimal;
  if (name == "feasible") return Status::Feasible;
  if (name == "infeasible") return Status::Infeasible;
  if (name == "unknown") return Status::Unknown;
  throw std::invalid_argument(fmt::format("unknown status '{}'", name));
}

Time makespan_of(const Instance& inst, const std::vector<Time>& starts) {
  Time cmax = 0;
  for (std::size_t o = 0; o < starts.size() && o < inst.size(); ++o)
    cmax = std::max(cmax, starts[o] + inst.duration(static_cast<OpId>(o)));
  return cmax;
}

std::string write_solution_json(const Solution& sol, SerializeOptions opts) {
  nlohmann::ordered_json doc;
  doc["status"] = to_string(sol.status);
  if (sol.has_schedule()) {
    doc["makespan"] = sol.makespan;
  } else {
    doc["makespan"] = nullptr;
  }
  doc["starts"] = sol.starts;
  nlohmann::ordered_json stats;
  stats["nodes"] = sol.stats.nodes;
  stats["fixpoint_calls"] = sol.stats.fixpoint_calls;
  stats["elapsed_ms"] = opts.timing ? sol.stats.elapsed_ms : 0;
  stats["lb"] = sol.stats.lower_bound;
  stats["ub"] = sol.stats.upper_bound;
  doc["stats"] = std::move(stats);
  auto trace = nlohmann::ordered_json::array();
  for (const auto& t : sol.stats.trace) {
    trace.push_back({{"elapsed_ms", opts.timing ? t.elapsed_ms : 0}, {"lb", t.lb}, {"ub", t.ub}});
  }
  doc["trace"] = std::move(trace);
  return doc.dump(2) + "\n";
}

Solution parse_solution_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Solution sol;
    sol.status = parse_status(doc.at("status").get<std::string>());
    sol.starts = doc.value("starts", std::vector<Time>{});
    if (doc.contains("makespan") && !doc.at("makespan").is_null()) sol.makespan = doc.at("makespan").get<Time>();
    if (doc.contains("stats")) {
      const auto& s = doc.at("stats");
      sol.stats.nodes = s.value("nodes", std::uint64_t{0});
      sol.stats.fixpoint_calls = s.value("fixpoint_calls", std::uint64_t{0});
      sol.stats.elapsed_ms = s.value("elapsed_ms", std::int64_t{0});
      sol.stats.lower_bound = s.value("lb", Time{0});
      sol.stats.upper_bound = s.value("ub", Time{0});
    }
    if (doc.contains("trace")) {
      for (const auto& t : doc.at("trace")) {
        sol.stats.trace.push_back({t.at("elapsed_ms").get<std::int64_t>(), t.at("lb").get<Time>(),
                                   t.at("ub").get<Time>()});
      }
    }
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(fmt::format("invalid solution document: {}", e.what()));
  }
}

std::string write_trace_csv(const std::vector<TracePoint>& trace, SerializeOptions opts) {
  std::string out = "elapsed_ms,lb,ub\n";
  for (const auto& t : trace) out += fmt::format("{},{},{}\n", opts.timing ? t.elapsed_ms : 0, t.lb, t.ub);
  return out;
}

namespace {

void check_group(const Instance& inst, const std::vector<Time>& starts, std::span<const OpId> group,
                 ViolationKind kind, const char* what, int index, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      const OpId a = group[i];
      const OpId b = group[j];
      const bool disjoint = starts[a] + inst.duration(a) <= starts[b] || starts[b] + inst.duration(b) <= starts[a];
      if (!disjoint) {
        out.push_back({kind, a, b,
                       fmt::format("operations {} [{},{}) and {} [{},{}) overlap on {} {}", a, starts[a],
                                   starts[a] + inst.duration(a), b, starts[b], starts[b] + inst.duration(b),
                                   what, index)});
      }
    }
  }
}

}  // namespace

VerificationReport verify_schedule(const Instance& inst, const std::vector<Time>& starts,
                                   std::span<const Precedence> extra_precedences) {
  VerificationReport report;
  if (starts.size() != inst.size()) {
    report.violations.push_back({ViolationKind::MissingStart, -1, -1,
                                 fmt::format("expected {} start times, got {}", inst.size(), starts.size())});
    return report;
  }
  for (OpId o = 0; o < static_cast<OpId>(inst.size()); ++o) {
    if (starts[o] < 0) {
      report.violations.push_back(
          {ViolationKind::NegativeStart, o, -1, fmt::format("operation {} starts at {}", o, starts[o])});
    }
  }
  auto check_edge = [&](const Precedence& e) {
    if (starts[e.before] + inst.duration(e.before) > starts[e.after]) {
      report.violations.push_back(
          {ViolationKind::Precedence, e.before, e.after,
           fmt::format("operation {} ends at {} after operation {} starts at {}", e.before,
                       starts[e.before] + inst.duration(e.before), e.after, starts[e.after])});
    }
  };
  for (const auto& e : inst.edges()) check_edge(e);
  for (const auto& e : extra_precedences) check_edge(e);
  for (int k = 0; k < inst.machines(); ++k)
    check_group(inst, starts, inst.machine_ops(k), ViolationKind::MachineOverlap, "machine", k, report.violations);
  for (int j = 0; j < inst.partitions(); ++j)
    check_group(inst, starts, inst.partition_ops(j), ViolationKind::PartitionOverlap, "partition", j,
                report.violations);
  report.makespan = makespan_of(inst, starts);
  report.valid = report.violations.empty();
  return report;
}

VerificationReport verify_solution(const Instance& inst, const Solution& sol) {
  return verify_schedule(inst, sol.starts);
}

}  // namespace pssp
