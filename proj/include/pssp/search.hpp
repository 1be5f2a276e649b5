#ifndef PSSP_SEARCH_HPP
#define PSSP_SEARCH_HPP

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pssp/dp.hpp"
#include "pssp/solution.hpp"

namespace pssp {

/// dp-jps: plain transitions, JPS bound. dp-cp-jps: CP transitions, JPS
/// bound. dp-cp: CP transitions, dichotomic CP bound.
enum class Model { DpJps, DpCpJps, DpCp };

const char* to_string(Model model);
Model parse_model(std::string_view name);

struct SearchConfig {
  Model model = Model::DpCp;
  int width = 5;
  double time_limit_s = 0.0;  // <= 0: no limit
  std::uint64_t seed = 0;
  // Return as soon as the first complete state is reached.
  bool stop_at_first_solution = false;
};

/// Non-dominated states seen so far, grouped by scheduled set. Entries stay
/// after their states are expanded.
class DominanceMap {
 public:
  explicit DominanceMap(const Instance& inst) : inst_(&inst) {}

  /// False if `s` is machine-dominated or some stored state dominates it.
  /// Otherwise stores it, drops stored states it dominates, and returns true.
  bool is_not_dominated(const DpState& s);

  std::size_t size() const;

 private:
  const Instance* inst_;
  std::unordered_map<OpSet, std::vector<DpState>, OpSetHash> entries_;
};

/// Anytime column search: per sweep, at most `width` states are expanded in
/// each layer. Status is optimal when the queues run dry.
Solution acs(const Instance& inst, const SearchConfig& config);

/**
 * Best-first search from a root whose delta is `fixed`, keeping only
 * completions with makespan <= ub. The first complete state popped is
 * optimal for that subproblem. Empty when there is none, or on timeout
 * (then `timed_out` is set when given).
 */
std::optional<Solution> astar(const Instance& inst, const PrecedenceSet& fixed, Time ub, const SearchConfig& config,
                              bool* timed_out = nullptr);

}  // namespace pssp

#endif  // PSSP_SEARCH_HPP
