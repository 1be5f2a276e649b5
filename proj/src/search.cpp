#include "pssp/search.hpp"

#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "pssp/hybrid.hpp"

namespace pssp {

const char* to_string(Model model) {
  switch (model) {
    case Model::DpJps:
      return "dp-jps";
    case Model::DpCpJps:
      return "dp-cp-jps";
    case Model::DpCp:
      return "dp-cp";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  if (name == "dp-jps") return Model::DpJps;
  if (name == "dp-cp-jps") return Model::DpCpJps;
  if (name == "dp-cp") return Model::DpCp;
  throw std::invalid_argument("unknown model: " + std::string(name));
}

bool DominanceMap::is_not_dominated(const DpState& s) {
  if (machine_dominated(*inst_, s)) return false;
  auto& bucket = entries_[dominance_key(s)];
  for (const auto& stored : bucket)
    if (dominates(*inst_, stored, s)) return false;
  std::erase_if(bucket, [&](const DpState& stored) { return dominates(*inst_, s, stored); });
  bucket.push_back(s);
  return true;
}

std::size_t DominanceMap::size() const {
  std::size_t n = 0;
  for (const auto& [key, bucket] : entries_) n += bucket.size();
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds) : start_(Clock::now()), limited_(seconds > 0) {
    if (limited_) end_ = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  }
  bool passed() const { return limited_ && Clock::now() >= end_; }
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  Clock::time_point end_;
  bool limited_;
};

struct Node {
  DpState state;
  Time bound;
  std::uint64_t seq;
};

// Smallest bound first, then deeper, then older.
struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.state.done_count != b.state.done_count) return a.state.done_count < b.state.done_count;
    return a.seq > b.seq;
  }
};

using NodeQueue = std::priority_queue<Node, std::vector<Node>, WorseNode>;

// Transition and bound as selected by the model. `ub` is inclusive.
struct Expander {
  const Instance& inst;
  Model model;
  std::uint64_t fixpoint_calls = 0;

  std::optional<DpState> step(const DpState& s, OpId o, Time ub) {
    if (model == Model::DpJps) return transition(inst, s, o);
    return transition_cp(inst, s, o, ub, &fixpoint_calls);
  }

  // Lower bound of s' completions; values above ub only mean "nothing <= ub".
  Time bound(const DpState& s, Time ub) {
    if (s.complete()) return s.cmax;
    if (model == Model::DpCp) return lower_bound_cp(inst, s, ub + 1, &fixpoint_calls);
    return jps_lower_bound(inst, s, ub);
  }
};

}  // namespace

Solution acs(const Instance& inst, const SearchConfig& config) {
  if (config.width < 1) throw std::invalid_argument("width must be positive");
  const Deadline deadline(config.time_limit_s);
  const std::size_t layers = inst.size();
  Expander expander{inst, config.model};
  DominanceMap seen(inst);

  Time ub = horizon(inst);
  std::vector<Time> best_starts = serial_schedule(inst);
  bool found_complete = false;
  Time lb = 0;

  Solution sol;
  auto& stats = sol.stats;
  auto record = [&] {
    if (stats.trace.empty() || stats.trace.back().lb != lb || stats.trace.back().ub != ub)
      stats.trace.push_back({deadline.elapsed_ms(), lb, ub});
  };

  std::vector<NodeQueue> queue(layers + 1);
  std::uint64_t seq = 0;
  DpState root = root_state(inst);
  if (root.complete()) {
    // Empty instance.
    sol.makespan = 0;
    sol.status = Status::Optimal;
    return sol;
  }
  {
    const Time b = expander.bound(root, ub - 1);
    queue[0].push({std::move(root), b, seq++});
    lb = std::min(b, ub);
  }
  stats.nodes = 1;
  record();

  auto frontier_bound = [&] {
    Time m = ub;
    for (const auto& q : queue)
      if (!q.empty()) m = std::min(m, q.top().bound);
    return m;
  };

  bool timed_out = false;
  bool stop = false;
  auto any_open = [&] {
    for (const auto& q : queue)
      if (!q.empty()) return true;
    return false;
  };

  while (!stop && any_open()) {
    for (std::size_t l = 0; l < layers && !stop; ++l) {
      std::vector<DpState> candidates;
      auto& q = queue[l];
      while (static_cast<int>(candidates.size()) < config.width && !q.empty()) {
        Node node = q.top();
        q.pop();
        if (node.bound >= ub) continue;
        if (!seen.is_not_dominated(node.state)) continue;
        candidates.push_back(std::move(node.state));
      }
      if (l > 0) stats.nodes += candidates.size();

      for (const auto& s : candidates) {
        if (deadline.passed()) {
          timed_out = stop = true;
          break;
        }
        for (OpId o : domain(inst, s)) {
          auto next = expander.step(s, o, ub);
          if (!next) continue;
          if (next->complete()) {
            if (next->cmax < ub) {
              ub = next->cmax;
              best_starts = next->psi;
              found_complete = true;
              lb = std::min(lb, ub);
              record();
              if (config.stop_at_first_solution) stop = true;
            }
            continue;
          }
          const Time b = expander.bound(*next, ub - 1);
          if (b >= ub) continue;
          queue[l + 1].push({std::move(*next), b, seq++});
        }
        if (stop) break;
      }
      if (!stop) {
        lb = std::max(lb, frontier_bound());
        record();
      }
    }
  }

  const bool exhausted = !timed_out && !any_open();
  if (exhausted) {
    lb = ub;
    record();
  }
  stats.fixpoint_calls = expander.fixpoint_calls;
  stats.elapsed_ms = deadline.elapsed_ms();
  stats.lower_bound = lb;
  stats.upper_bound = ub;

  if (exhausted || lb >= ub) {
    sol.status = Status::Optimal;
  } else if (found_complete) {
    sol.status = Status::Feasible;
  } else {
    sol.status = Status::Unknown;
    return sol;
  }
  sol.starts = std::move(best_starts);
  sol.makespan = ub;
  return sol;
}

std::optional<Solution> astar(const Instance& inst, const PrecedenceSet& fixed, Time ub, const SearchConfig& config,
                              bool* timed_out) {
  if (timed_out) *timed_out = false;
  const Deadline deadline(config.time_limit_s);
  Expander expander{inst, config.model};
  DominanceMap seen(inst);
  NodeQueue open;
  std::uint64_t seq = 0;
  std::uint64_t nodes = 0;

  auto finish = [&](const DpState& s) {
    Solution sol;
    sol.starts = s.psi;
    sol.makespan = s.cmax;
    sol.status = Status::Optimal;
    sol.stats.nodes = nodes;
    sol.stats.fixpoint_calls = expander.fixpoint_calls;
    sol.stats.elapsed_ms = deadline.elapsed_ms();
    sol.stats.lower_bound = s.cmax;
    sol.stats.upper_bound = s.cmax;
    return sol;
  };

  DpState root = root_state(inst, fixed);
  const Time root_bound = expander.bound(root, ub);
  if (root_bound > ub) return std::nullopt;
  open.push({std::move(root), root_bound, seq++});

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.state.complete()) return finish(node.state);
    if (!seen.is_not_dominated(node.state)) continue;
    ++nodes;
    if (deadline.passed()) {
      if (timed_out) *timed_out = true;
      return std::nullopt;
    }
    for (OpId o : domain(inst, node.state)) {
      auto next = expander.step(node.state, o, ub);
      if (!next) continue;
      const Time b = expander.bound(*next, ub);
      if (b > ub) continue;
      open.push({std::move(*next), b, seq++});
    }
  }
  return std::nullopt;
}

}  // namespace pssp
