#ifndef PSSP_THETA_TREE_HPP
#define PSSP_THETA_TREE_HPP

#include <algorithm>
#include <vector>

#include "pssp/instance.hpp"

namespace pssp::detail {

inline constexpr Time kMinusInfinity = -(Time{1} << 60);

/**
 * Theta-Lambda tree over tasks sorted by est. Leaves are either absent,
 * white (in Theta) or gray (in Lambda). Internal nodes keep
 *   sum_p / ect          over Theta,
 *   sum_p_bar / ect_bar  over Theta plus at most one gray task,
 * and which gray leaf realises the "bar" values.
 */
class ThetaLambdaTree {
 public:
  ThetaLambdaTree(std::vector<Time> est_by_rank, std::vector<Time> p_by_rank)
      : est_(std::move(est_by_rank)), p_(std::move(p_by_rank)) {
    leaves_ = 1;
    while (leaves_ < est_.size()) leaves_ *= 2;
    nodes_.assign(2 * leaves_, Node{});
  }

  void insert(std::size_t rank) { set_leaf(rank, white(rank)); }
  void make_gray(std::size_t rank) { set_leaf(rank, gray(rank)); }
  void remove(std::size_t rank) { set_leaf(rank, Node{}); }

  Time ect() const { return nodes_[1].ect; }
  Time ect_bar() const { return nodes_[1].ect_bar; }
  int responsible_ect_bar() const { return nodes_[1].resp_ect; }

 private:
  struct Node {
    Time sum_p = 0;
    Time ect = kMinusInfinity;
    Time sum_p_bar = 0;
    Time ect_bar = kMinusInfinity;
    int resp_p = -1;
    int resp_ect = -1;
  };

  Node white(std::size_t rank) const {
    const Time p = p_[rank];
    const Time e = est_[rank] + p;
    return {p, e, p, e, -1, -1};
  }
  Node gray(std::size_t rank) const {
    const Time p = p_[rank];
    return {0, kMinusInfinity, p, est_[rank] + p, static_cast<int>(rank), static_cast<int>(rank)};
  }

  static Node combine(const Node& l, const Node& r) {
    Node n;
    n.sum_p = l.sum_p + r.sum_p;
    n.ect = std::max(r.ect, l.ect + r.sum_p);

    const Time via_left = l.sum_p_bar + r.sum_p;
    const Time via_right = l.sum_p + r.sum_p_bar;
    if (via_left >= via_right) {
      n.sum_p_bar = via_left;
      n.resp_p = l.resp_p;
    } else {
      n.sum_p_bar = via_right;
      n.resp_p = r.resp_p;
    }

    n.ect_bar = r.ect_bar;
    n.resp_ect = r.resp_ect;
    if (l.ect + r.sum_p_bar > n.ect_bar) {
      n.ect_bar = l.ect + r.sum_p_bar;
      n.resp_ect = r.resp_p;
    }
    if (l.ect_bar + r.sum_p > n.ect_bar) {
      n.ect_bar = l.ect_bar + r.sum_p;
      n.resp_ect = l.resp_ect;
    }
    return n;
  }

  void set_leaf(std::size_t rank, Node leaf) {
    std::size_t i = leaves_ + rank;
    nodes_[i] = leaf;
    for (i /= 2; i >= 1; i /= 2) nodes_[i] = combine(nodes_[2 * i], nodes_[2 * i + 1]);
  }

  std::vector<Time> est_;
  std::vector<Time> p_;
  std::size_t leaves_ = 1;
  std::vector<Node> nodes_;
};

}  // namespace pssp::detail

#endif  // PSSP_THETA_TREE_HPP
