#include "pssp/lns.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

#include "pssp/hybrid.hpp"

namespace pssp {

const char* to_string(RestartOutcome outcome) {
  switch (outcome) {
    case RestartOutcome::Improved:
      return "improved";
    case RestartOutcome::NoImprovement:
      return "no-improvement";
    case RestartOutcome::TimedOut:
      return "timeout";
  }
  return "?";
}

PrecedenceSet incumbent_precedence_graph(const Instance& inst, const Solution& sol) {
  PrecedenceSet out(inst.size());
  auto add_chain = [&](std::span<const OpId> group) {
    std::vector<OpId> ops(group.begin(), group.end());
    std::sort(ops.begin(), ops.end(), [&](OpId a, OpId b) {
      return sol.starts[a] != sol.starts[b] ? sol.starts[a] < sol.starts[b] : a < b;
    });
    for (std::size_t i = 0; i + 1 < ops.size(); ++i)
      if (!inst.has_edge(ops[i], ops[i + 1])) out.insert({ops[i], ops[i + 1]});
  };
  for (int k = 0; k < inst.machines(); ++k) add_chain(inst.machine_ops(k));
  for (int j = 0; j < inst.partitions(); ++j) add_chain(inst.partition_ops(j));
  return out;
}

PrecedenceSet select_subset_precedences(const PrecedenceSet& relaxable, double fraction, std::mt19937_64& rng) {
  if (fraction < 0 || fraction > 1) throw std::invalid_argument("keep fraction must lie in [0, 1]");
  const auto pairs = relaxable.pairs();
  const auto count = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(pairs.size()) - 1e-9));
  std::vector<Precedence> kept;
  std::sample(pairs.begin(), pairs.end(), std::back_inserter(kept), count, rng);
  return PrecedenceSet(relaxable.universe(), kept);
}

PrecedenceSet select_subset_precedences(const PrecedenceSet& relaxable, double fraction, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return select_subset_precedences(relaxable, fraction, rng);
}

LnsResult lns_run(const Instance& inst, const Solution& initial, const LnsConfig& config,
                  const SearchConfig& search_config) {
  if (!(config.keep_floor > 0 && config.keep_floor <= config.keep_fraction && config.keep_fraction <= 1))
    throw std::invalid_argument("need 0 < keep floor <= keep fraction <= 1");
  if (!initial.has_schedule()) throw std::invalid_argument("LNS needs an initial schedule");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed_s = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  };

  LnsResult result;
  result.best = initial;
  auto& best = result.best;
  best.makespan = makespan_of(inst, best.starts);
  Time lb = std::min(initial.stats.lower_bound, best.makespan);
  best.stats.trace.clear();
  best.stats.trace.push_back({0, lb, best.makespan});

  std::mt19937_64 rng(config.seed);
  double keep = config.keep_fraction;
  int idle = 0;
  const DpState root = root_state(inst);

  for (std::uint64_t restart = 0;; ++restart) {
    if (config.max_restarts != 0 && restart >= config.max_restarts) break;
    if (config.time_limit_s > 0 && elapsed_s() >= config.time_limit_s) break;

    Csp root_csp = initialize_csp(inst, root, best.makespan - 1);
    const bool ok = fixpoint(root_csp);
    best.stats.fixpoint_calls += root_csp.fixpoint_calls;
    if (!ok) {
      result.is_optimal = true;
      break;
    }

    const auto kept = select_subset_precedences(incumbent_precedence_graph(inst, best), keep, rng);
    PrecedenceSet fixed(inst.size(), inst.edges());
    for (const auto& p : kept.pairs()) fixed.insert(p);

    SearchConfig sub_config = search_config;
    if (config.time_limit_s > 0) {
      sub_config.time_limit_s = std::max(config.time_limit_s - elapsed_s(), 1e-3);
      if (search_config.time_limit_s > 0) sub_config.time_limit_s = std::min(sub_config.time_limit_s, search_config.time_limit_s);
    }
    bool timed_out = false;
    auto sub = astar(inst, fixed, best.makespan - 1, sub_config, &timed_out);

    LnsTraceRow row{restart, keep, kept.size(), RestartOutcome::NoImprovement, best.makespan};
    if (sub) {
      result.improvements.push_back({restart, kept.pairs(), sub->starts});
      best.starts = std::move(sub->starts);
      best.makespan = sub->makespan;
      best.stats.nodes += sub->stats.nodes;
      best.stats.fixpoint_calls += sub->stats.fixpoint_calls;
      best.stats.trace.push_back({elapsed_ms(), lb, best.makespan});
      row.outcome = RestartOutcome::Improved;
      row.incumbent = best.makespan;
      idle = 0;
    } else {
      row.outcome = timed_out ? RestartOutcome::TimedOut : RestartOutcome::NoImprovement;
      if (++idle >= config.restart_limit) {
        idle = 0;
        keep -= config.keep_step;
        if (keep < config.keep_floor - 1e-12) keep = config.keep_fraction;
      }
    }
    result.restarts.push_back(row);
  }

  if (result.is_optimal) {
    lb = best.makespan;
    best.stats.trace.push_back({elapsed_ms(), lb, best.makespan});
    best.status = Status::Optimal;
  } else {
    best.status = initial.status == Status::Optimal ? Status::Optimal : Status::Feasible;
    if (best.status == Status::Optimal) lb = best.makespan;
  }
  best.stats.lower_bound = lb;
  best.stats.upper_bound = best.makespan;
  best.stats.elapsed_ms = initial.stats.elapsed_ms + elapsed_ms();
  return result;
}

std::string write_lns_trace_csv(const std::vector<LnsTraceRow>& rows) {
  std::string out = "restart,keep_fraction,kept,outcome,incumbent\n";
  for (const auto& r : rows)
    out += fmt::format("{},{:.2f},{},{},{}\n", r.restart, r.keep_fraction, r.kept, to_string(r.outcome), r.incumbent);
  return out;
}

}  // namespace pssp
