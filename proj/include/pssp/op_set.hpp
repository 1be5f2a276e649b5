#ifndef PSSP_OP_SET_HPP
#define PSSP_OP_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "pssp/instance.hpp"

namespace pssp {

/// Fixed-universe set of operation ids backed by 64-bit words.
class OpSet {
 public:
  OpSet() = default;
  explicit OpSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(OpId o) { words_[o >> 6] |= std::uint64_t{1} << (o & 63); }
  void erase(OpId o) { words_[o >> 6] &= ~(std::uint64_t{1} << (o & 63)); }
  bool contains(OpId o) const { return (words_[o >> 6] >> (o & 63)) & 1U; }

  std::size_t size() const {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const OpSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<OpId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<OpId> to_vector() const {
    std::vector<OpId> out;
    for_each([&](OpId o) { out.push_back(o); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const OpSet&, const OpSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct OpSetHash {
  std::size_t operator()(const OpSet& s) const { return s.hash(); }
};

}  // namespace pssp

#endif  // PSSP_OP_SET_HPP
