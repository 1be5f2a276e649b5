#ifndef PSSP_PRECEDENCE_SET_HPP
#define PSSP_PRECEDENCE_SET_HPP

#include <span>
#include <vector>

#include "pssp/instance.hpp"
#include "pssp/op_set.hpp"

namespace pssp {

/// Set of precedence pairs stored as one predecessor bitset per operation.
class PrecedenceSet {
 public:
  PrecedenceSet() = default;
  explicit PrecedenceSet(std::size_t universe);
  PrecedenceSet(std::size_t universe, std::span<const Precedence> pairs);

  std::size_t universe() const { return preds_.size(); }
  std::size_t size() const { return count_; }

  /// Returns true when the pair was not present before.
  bool insert(Precedence p);
  bool contains(Precedence p) const { return preds_[p.after].contains(p.before); }
  const OpSet& preds_of(OpId o) const { return preds_[o]; }

  /// All pairs ordered by (before, after).
  std::vector<Precedence> pairs() const;
  bool is_acyclic() const;
  bool is_superset_of(const PrecedenceSet& other) const;

  friend bool operator==(const PrecedenceSet&, const PrecedenceSet&) = default;

 private:
  std::vector<OpSet> preds_;
  std::size_t count_ = 0;
};

}  // namespace pssp

#endif  // PSSP_PRECEDENCE_SET_HPP
