#include "pssp/cp.hpp"

#include <algorithm>
#include <numeric>

#include "theta_tree.hpp"

namespace pssp {

Csp::Csp(std::vector<IntervalVar> intervals, std::span<const Precedence> precedences,
         std::vector<std::vector<OpId>> disjunctive_sets)
    : intervals_(std::move(intervals)),
      precedence_set_(intervals_.size()),
      sets_(std::move(disjunctive_sets)) {
  for (const auto& p : precedences) add_precedence(p);
}

void Csp::add_precedence(Precedence p) {
  if (precedence_set_.insert(p)) precedence_list_.push_back(p);
}

namespace {

using detail::ThetaLambdaTree;

// Local copy of a set's windows in completion-time form.
struct Task {
  Time est;
  Time lct;
  Time p;
  Time ect() const { return est + p; }
  Time lst() const { return lct - p; }
};

std::vector<Task> load(const Csp& csp, std::span<const OpId> set) {
  std::vector<Task> tasks;
  tasks.reserve(set.size());
  for (OpId o : set) {
    const auto& v = csp.interval(o);
    tasks.push_back({v.est, v.lct(), v.duration});
  }
  return tasks;
}

std::vector<Task> mirrored(const std::vector<Task>& tasks) {
  std::vector<Task> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back({-t.lct, -t.est, t.p});
  return out;
}

std::vector<std::size_t> order_by(std::size_t n, auto key) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return idx;
}

// Tree over the tasks ranked by est; rank_of[i] is task i's leaf.
struct RankedTree {
  ThetaLambdaTree tree;
  std::vector<std::size_t> rank_of;
};

RankedTree make_tree(const std::vector<Task>& tasks) {
  const auto by_est = order_by(tasks.size(), [&](std::size_t i) { return tasks[i].est; });
  std::vector<Time> est(tasks.size()), p(tasks.size());
  std::vector<std::size_t> rank_of(tasks.size());
  for (std::size_t r = 0; r < by_est.size(); ++r) {
    est[r] = tasks[by_est[r]].est;
    p[r] = tasks[by_est[r]].p;
    rank_of[by_est[r]] = r;
  }
  return {ThetaLambdaTree(std::move(est), std::move(p)), std::move(rank_of)};
}

// Raises entries of `est`; false means the set is infeasible.
using EstRule = bool (*)(const std::vector<Task>&, std::vector<Time>&);

bool overload_forward(const std::vector<Task>& tasks, std::vector<Time>&) {
  auto [tree, rank_of] = make_tree(tasks);
  for (std::size_t j : order_by(tasks.size(), [&](std::size_t i) { return tasks[i].lct; })) {
    tree.insert(rank_of[j]);
    if (tree.ect() > tasks[j].lct) return false;
  }
  return true;
}

bool detectable_forward(const std::vector<Task>& tasks, std::vector<Time>& est) {
  auto [tree, rank_of] = make_tree(tasks);
  const auto by_lst = order_by(tasks.size(), [&](std::size_t i) { return tasks[i].lst(); });
  std::vector<bool> inside(tasks.size(), false);
  std::size_t q = 0;
  for (std::size_t i : order_by(tasks.size(), [&](std::size_t k) { return tasks[k].ect(); })) {
    while (q < by_lst.size() && tasks[i].ect() > tasks[by_lst[q]].lst()) {
      tree.insert(rank_of[by_lst[q]]);
      inside[by_lst[q]] = true;
      ++q;
    }
    if (inside[i]) tree.remove(rank_of[i]);
    est[i] = std::max(est[i], tree.ect());
    if (inside[i]) tree.insert(rank_of[i]);
  }
  return true;
}

// Tightens lct of tasks that cannot end the set.
bool not_last_lct(const std::vector<Task>& tasks, std::vector<Time>& lct) {
  auto [tree, rank_of] = make_tree(tasks);
  const auto by_lst = order_by(tasks.size(), [&](std::size_t i) { return tasks[i].lst(); });
  std::vector<std::size_t> inserted;
  std::size_t q = 0;
  for (std::size_t i : order_by(tasks.size(), [&](std::size_t k) { return tasks[k].lct; })) {
    while (q < by_lst.size() && tasks[i].lct > tasks[by_lst[q]].lst()) {
      tree.insert(rank_of[by_lst[q]]);
      inserted.push_back(by_lst[q]);
      ++q;
    }
    const bool inside = std::find(inserted.begin(), inserted.end(), i) != inserted.end();
    if (inside) tree.remove(rank_of[i]);
    if (tree.ect() > tasks[i].lst()) {
      Time max_lst = detail::kMinusInfinity;
      for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
        if (*it == i) continue;
        max_lst = tasks[*it].lst();
        break;
      }
      lct[i] = std::min(lct[i], max_lst);
    }
    if (inside) tree.insert(rank_of[i]);
  }
  return true;
}

bool not_first_forward(const std::vector<Task>& tasks, std::vector<Time>& est) {
  const auto m = mirrored(tasks);
  std::vector<Time> lct(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) lct[i] = m[i].lct;
  not_last_lct(m, lct);
  for (std::size_t i = 0; i < m.size(); ++i) est[i] = std::max(est[i], -lct[i]);
  return true;
}

bool edge_finding_forward(const std::vector<Task>& tasks, std::vector<Time>& est) {
  if (tasks.empty()) return true;
  auto [tree, rank_of] = make_tree(tasks);
  std::vector<std::size_t> task_at_rank(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    tree.insert(rank_of[i]);
    task_at_rank[rank_of[i]] = i;
  }
  auto by_lct = order_by(tasks.size(), [&](std::size_t i) { return tasks[i].lct; });
  std::reverse(by_lct.begin(), by_lct.end());

  std::size_t q = 0;
  std::size_t j = by_lct[q];
  if (tree.ect() > tasks[j].lct) return false;
  while (q + 1 < by_lct.size()) {
    tree.make_gray(rank_of[j]);
    j = by_lct[++q];
    if (tree.ect() > tasks[j].lct) return false;
    while (tree.ect_bar() > tasks[j].lct) {
      const int resp = tree.responsible_ect_bar();
      if (resp < 0) break;
      const std::size_t i = task_at_rank[static_cast<std::size_t>(resp)];
      est[i] = std::max(est[i], tree.ect());
      tree.remove(static_cast<std::size_t>(resp));
    }
  }
  return true;
}

// Runs `forward` on the set and on its mirror, then writes tightened
// windows back.
Propagation run_both_ways(Csp& csp, std::span<const OpId> set, EstRule forward) {
  if (set.size() < 2) return Propagation::Unchanged;
  const auto tasks = load(csp, set);
  std::vector<Time> est(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) est[i] = tasks[i].est;
  if (!forward(tasks, est)) return Propagation::Failure;

  const auto m = mirrored(tasks);
  std::vector<Time> mest(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) mest[i] = m[i].est;
  if (!forward(m, mest)) return Propagation::Failure;

  auto result = Propagation::Unchanged;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto& v = csp.interval(set[i]);
    const Time lst = -mest[i] - v.duration;
    if (est[i] > v.est) {
      v.est = est[i];
      result = Propagation::Changed;
    }
    if (lst < v.lst) {
      v.lst = lst;
      result = Propagation::Changed;
    }
    if (v.failed()) return Propagation::Failure;
  }
  return result;
}

Propagation over_sets(Csp& csp, Propagation (*rule)(Csp&, std::span<const OpId>)) {
  auto result = Propagation::Unchanged;
  for (const auto& set : csp.disjunctive_sets()) {
    const auto r = rule(csp, set);
    if (r == Propagation::Failure) return r;
    if (r == Propagation::Changed) result = r;
  }
  return result;
}

}  // namespace

Propagation propagate_precedences(Csp& csp) {
  for (const auto& v : csp.intervals())
    if (v.failed()) return Propagation::Failure;
  auto result = Propagation::Unchanged;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : csp.precedences()) {
      auto& va = csp.interval(a);
      auto& vb = csp.interval(b);
      if (vb.est < va.ect()) {
        vb.est = va.ect();
        changed = true;
      }
      if (va.lst > vb.lst - va.duration) {
        va.lst = vb.lst - va.duration;
        changed = true;
      }
      if (va.failed() || vb.failed()) return Propagation::Failure;
    }
    if (changed) result = Propagation::Changed;
  }
  return result;
}

Propagation overload_check(Csp& csp, std::span<const OpId> set) {
  const auto tasks = load(csp, set);
  std::vector<Time> unused;
  return overload_forward(tasks, unused) ? Propagation::Unchanged : Propagation::Failure;
}

Propagation detectable_precedences(Csp& csp, std::span<const OpId> set) {
  return run_both_ways(csp, set, detectable_forward);
}

Propagation not_first_not_last(Csp& csp, std::span<const OpId> set) {
  return run_both_ways(csp, set, not_first_forward);
}

Propagation edge_finding(Csp& csp, std::span<const OpId> set) {
  return run_both_ways(csp, set, edge_finding_forward);
}

Propagation apply_rule(Csp& csp, Rule rule) {
  switch (rule) {
    case Rule::Precedences:
      return propagate_precedences(csp);
    case Rule::Overload:
      return over_sets(csp, overload_check);
    case Rule::DetectablePrecedences:
      return over_sets(csp, detectable_precedences);
    case Rule::NotFirstNotLast:
      return over_sets(csp, not_first_not_last);
    case Rule::EdgeFinding:
      return over_sets(csp, edge_finding);
  }
  return Propagation::Unchanged;
}

bool fixpoint(Csp& csp, std::span<const Rule> order) {
  ++csp.fixpoint_calls;
  for (const auto& v : csp.intervals())
    if (v.failed()) return false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Rule rule : order) {
      const auto r = apply_rule(csp, rule);
      if (r == Propagation::Failure) return false;
      if (r == Propagation::Changed) changed = true;
    }
  }
  return true;
}

std::vector<Precedence> detected_precedence_pairs(const Csp& csp) {
  std::vector<Precedence> out;
  for (const auto& set : csp.disjunctive_sets())
    for (OpId a : set)
      for (OpId b : set) {
        if (a == b) continue;
        if (csp.interval(a).ect() > csp.interval(b).lst) {
          const Precedence p{b, a};
          if (!csp.has_precedence(p)) out.push_back(p);
        }
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pssp
