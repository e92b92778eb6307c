#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace template_chroma {

/// Set partition of {0..n-1} stored as a restricted growth string: element i
/// carries the index of its block, blocks numbered by first occurrence.
class SetPartition {
 public:
  SetPartition() = default;

  /// Groups indices with equal values; any totally ordered value type works.
  template <typename T>
  static SetPartition from_values(std::span<const T> values) {
    SetPartition p;
    std::map<T, int> seen;
    p.labels_.reserve(values.size());
    for (const auto& v : values) {
      auto [it, inserted] = seen.try_emplace(v, static_cast<int>(seen.size()));
      p.labels_.push_back(it->second);
    }
    p.block_count_ = seen.size();
    return p;
  }
  template <typename T>
  static SetPartition from_values(const std::vector<T>& values) {
    return from_values(std::span<const T>(values));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  int block_of(std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Blocks in order of their smallest element, members ascending.
  std::vector<std::vector<std::size_t>> blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
    return out;
  }

  bool is_discrete() const noexcept { return block_count_ == labels_.size(); }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const {
    if (coarser.size() != size()) return false;
    std::vector<int> image(block_count_, -1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto& slot = image[labels_[i]];
      if (slot == -1) slot = coarser.labels_[i];
      else if (slot != coarser.labels_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.labels_ <=> b.labels_; }

 private:
  std::vector<int> labels_;
  std::size_t block_count_ = 0;
};

namespace detail {

template <typename Visit>
void for_each_rgs(std::size_t n, std::vector<int>& cur, int max_label, Visit& visit) {
  if (cur.size() == n) {
    visit(cur);
    return;
  }
  for (int v = 0; v <= max_label + 1; ++v) {
    cur.push_back(v);
    for_each_rgs(n, cur, std::max(max_label, v), visit);
    cur.pop_back();
  }
}

}  // namespace detail

/// All set partitions of {0..n-1} in lexicographic order of their growth strings.
inline std::vector<SetPartition> set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<int> cur;
  auto visit = [&](const std::vector<int>& rgs) {
    out.push_back(SetPartition::from_values(rgs));
  };
  detail::for_each_rgs(n, cur, -1, visit);
  return out;
}

/// Every partition that `p` refines (p itself included).
inline std::vector<SetPartition> coarsenings(const SetPartition& p) {
  std::vector<SetPartition> out;
  for (const auto& merge : set_partitions(p.block_count())) {
    std::vector<int> labels(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) labels[i] = merge.block_of(p.block_of(i));
    out.push_back(SetPartition::from_values(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Common refinement of a family of partitions of the same set.
inline SetPartition meet(std::span<const SetPartition> parts, std::size_t n) {
  std::vector<std::vector<int>> keys(n);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < n; ++i) keys[i].push_back(p.block_of(i));
  }
  return SetPartition::from_values(keys);
}

}  // namespace template_chroma
