#include "pssp/precedence_set.hpp"

#include <algorithm>

namespace pssp {

PrecedenceSet::PrecedenceSet(std::size_t universe) : preds_(universe, OpSet(universe)) {}

PrecedenceSet::PrecedenceSet(std::size_t universe, std::span<const Precedence> pairs)
    : PrecedenceSet(universe) {
  for (const auto& p : pairs) insert(p);
}

bool PrecedenceSet::insert(Precedence p) {
  if (preds_[p.after].contains(p.before)) return false;
  preds_[p.after].insert(p.before);
  ++count_;
  return true;
}

std::vector<Precedence> PrecedenceSet::pairs() const {
  std::vector<Precedence> out;
  out.reserve(count_);
  for (OpId b = 0; b < static_cast<OpId>(preds_.size()); ++b)
    preds_[b].for_each([&](OpId a) { out.push_back({a, b}); });
  std::sort(out.begin(), out.end());
  return out;
}

bool PrecedenceSet::is_acyclic() const {
  const auto n = static_cast<OpId>(preds_.size());
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<OpId>> succs(n);
  for (OpId b = 0; b < n; ++b) {
    preds_[b].for_each([&](OpId a) { succs[a].push_back(b); });
    indegree[b] = static_cast<int>(preds_[b].size());
  }
  std::vector<OpId> stack;
  for (OpId o = 0; o < n; ++o)
    if (indegree[o] == 0) stack.push_back(o);
  std::size_t seen = 0;
  while (!stack.empty()) {
    OpId o = stack.back();
    stack.pop_back();
    ++seen;
    for (OpId s : succs[o])
      if (--indegree[s] == 0) stack.push_back(s);
  }
  return seen == preds_.size();
}

bool PrecedenceSet::is_superset_of(const PrecedenceSet& other) const {
  if (other.preds_.size() != preds_.size()) return false;
  for (std::size_t o = 0; o < preds_.size(); ++o)
    if (!other.preds_[o].is_subset_of(preds_[o])) return false;
  return true;
}

}  // namespace pssp
