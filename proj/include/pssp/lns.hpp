#ifndef PSSP_LNS_HPP
#define PSSP_LNS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pssp/precedence_set.hpp"
#include "pssp/search.hpp"
#include "pssp/solution.hpp"

namespace pssp {

struct LnsConfig {
  double keep_fraction = 0.70;
  double keep_step = 0.05;
  double keep_floor = 0.20;
  int restart_limit = 100;  // non-improving restarts before keep_fraction drops
  std::uint64_t seed = 0;
  double time_limit_s = 0.0;  // <= 0: no limit
  std::uint64_t max_restarts = 0;  // 0: no limit
};

enum class RestartOutcome { Improved, NoImprovement, TimedOut };
const char* to_string(RestartOutcome outcome);

/// One row per A* restart.
struct LnsTraceRow {
  std::uint64_t restart = 0;
  double keep_fraction = 0;
  std::size_t kept = 0;
  RestartOutcome outcome = RestartOutcome::NoImprovement;
  Time incumbent = 0;
};

/// An adopted schedule and the kept pairs that were imposed to find it.
struct Improvement {
  std::uint64_t restart = 0;
  std::vector<Precedence> kept;
  std::vector<Time> starts;
};

struct LnsResult {
  Solution best;
  bool is_optimal = false;
  std::vector<LnsTraceRow> restarts;
  std::vector<Improvement> improvements;
};

/// Consecutive pairs of each machine's and each partition's operations
/// ordered by start time, minus pairs already in E.
PrecedenceSet incumbent_precedence_graph(const Instance& inst, const Solution& sol);

/// Uniform random subset of ceil(fraction * size) pairs.
PrecedenceSet select_subset_precedences(const PrecedenceSet& relaxable, double fraction, std::mt19937_64& rng);
PrecedenceSet select_subset_precedences(const PrecedenceSet& relaxable, double fraction, std::uint64_t seed);

/// Repeatedly fixes a random part of the incumbent's orientation and asks
/// A* for a strictly better schedule. Stops when the root CSP proves the
/// incumbent optimal, on the time limit, or after max_restarts.
LnsResult lns_run(const Instance& inst, const Solution& initial, const LnsConfig& config,
                  const SearchConfig& search_config);

std::string write_lns_trace_csv(const std::vector<LnsTraceRow>& rows);

}  // namespace pssp

#endif  // PSSP_LNS_HPP
