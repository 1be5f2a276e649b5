#ifndef PSSP_CP_HPP
#define PSSP_CP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pssp/instance.hpp"
#include "pssp/precedence_set.hpp"

namespace pssp {

/// Start-time window [est, lst] of a fixed-length interval.
struct IntervalVar {
  Time est = 0;
  Time lst = 0;
  Time duration = 1;

  Time ect() const { return est + duration; }
  Time lct() const { return lst + duration; }
  bool failed() const { return est > lst; }

  friend bool operator==(const IntervalVar&, const IntervalVar&) = default;
};

enum class Propagation { Unchanged, Changed, Failure };

enum class Rule { Precedences, Overload, DetectablePrecedences, NotFirstNotLast, EdgeFinding };

/**
 * Propagation session over one interval per operation, end-before-start
 * precedences, and no-overlap sets (machine sets first, then partition
 * sets). Single owner; rules mutate the windows in place.
 */
class Csp {
 public:
  Csp() = default;
  Csp(std::vector<IntervalVar> intervals, std::span<const Precedence> precedences,
      std::vector<std::vector<OpId>> disjunctive_sets);

  std::size_t size() const { return intervals_.size(); }
  const std::vector<IntervalVar>& intervals() const { return intervals_; }
  IntervalVar& interval(OpId o) { return intervals_[o]; }
  const IntervalVar& interval(OpId o) const { return intervals_[o]; }

  const std::vector<Precedence>& precedences() const { return precedence_list_; }
  bool has_precedence(Precedence p) const { return precedence_set_.contains(p); }
  void add_precedence(Precedence p);

  const std::vector<std::vector<OpId>>& disjunctive_sets() const { return sets_; }

  std::uint64_t fixpoint_calls = 0;

 private:
  std::vector<IntervalVar> intervals_;
  std::vector<Precedence> precedence_list_;
  PrecedenceSet precedence_set_;
  std::vector<std::vector<OpId>> sets_;
};

/// est(b) >= ect(a) and lst(a) <= lst(b) - p(a) for every pair, to a local fixpoint.
Propagation propagate_precedences(Csp& csp);

/// Fails when some subset needs more time than lct(subset) - est(subset).
Propagation overload_check(Csp& csp, std::span<const OpId> set);

/// ect(a) > lst(b) forces b before a; adjusts est from the set of forced
/// predecessors and, mirrored, lct from forced successors.
Propagation detectable_precedences(Csp& csp, std::span<const OpId> set);

/// Not-last tightens lct, not-first (mirrored) tightens est.
Propagation not_first_not_last(Csp& csp, std::span<const OpId> set);

/// If t cannot precede or fit inside Omega then t follows all of Omega.
/// Both directions.
Propagation edge_finding(Csp& csp, std::span<const OpId> set);

Propagation apply_rule(Csp& csp, Rule rule);

inline constexpr Rule kDefaultRuleOrder[] = {Rule::Precedences, Rule::Overload, Rule::DetectablePrecedences,
                                             Rule::NotFirstNotLast, Rule::EdgeFinding};

/// Round-robin over `order` until no window changes. Returns false on failure.
bool fixpoint(Csp& csp, std::span<const Rule> order = kDefaultRuleOrder);

/// Pairs (b, a) sharing a no-overlap set with ect(a) > lst(b), minus pairs
/// already posted as precedences. Sorted, no duplicates.
std::vector<Precedence> detected_precedence_pairs(const Csp& csp);

}  // namespace pssp

#endif  // PSSP_CP_HPP
