#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "template_chroma/error.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma {

/// Minimum distinguisher of a template: `e` coordinates whose joint values
/// separate all points. `witness` is the lexicographically least one.
struct DistinguisherResult {
  std::size_t e = 0;
  CoordinateSet witness;
  std::optional<std::vector<CoordinateSet>> all_minimum;
};

inline bool is_distinguisher(const Template& p, const CoordinateSet& coords) {
  for (auto c : coords) {
    if (c >= p.dim()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "coordinate " + std::to_string(c) + " out of range for dimension " + std::to_string(p.dim()), c);
    }
  }
  const auto& pts = p.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      bool separated = false;
      for (auto c : coords) separated = separated || pts[a][c] != pts[b][c];
      if (!separated) return false;
    }
  }
  return true;
}

namespace detail {

using Mask = std::uint64_t;

/// Difference sets {i : x_i != y_i} of all point pairs, inclusion-minimal.
inline std::vector<Mask> difference_sets(const Template& p) {
  if (p.dim() > 64) throw Error(ErrorKind::BudgetExceeded, "distinguisher search supports at most 64 coordinates");
  std::vector<Mask> sets;
  const auto& pts = p.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Mask m = 0;
      for (std::size_t c = 0; c < p.dim(); ++c)
        if (pts[a][c] != pts[b][c]) m |= Mask{1} << c;
      sets.push_back(m);
    }
  }
  std::vector<Mask> minimal;
  for (auto s : sets) {
    bool dominated = false;
    for (auto t : sets) {
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    }
    if (!dominated && std::find(minimal.begin(), minimal.end(), s) == minimal.end()) minimal.push_back(s);
  }
  return minimal;
}

/// Branch and bound for the minimum hitting set size. Branches on the
/// smallest unhit set; bounds with a greedy packing of pairwise disjoint
/// unhit sets, each of which needs its own element.
class HittingSetSolver {
 public:
  explicit HittingSetSolver(std::vector<Mask> sets, std::size_t universe)
      : sets_(std::move(sets)), best_(universe) {}

  std::size_t solve() {
    branch(0, 0);
    return best_;
  }

 private:
  std::size_t packing_bound(Mask chosen, Mask forbidden) const {
    std::size_t count = 0;
    Mask used = 0;
    for (auto s : sets_) {
      if (s & chosen) continue;
      auto avail = s & ~forbidden;
      if ((avail & used) == 0) {
        used |= avail;
        ++count;
      }
    }
    return count;
  }

  void branch(Mask chosen, Mask forbidden) {
    const auto size = static_cast<std::size_t>(std::popcount(chosen));
    if (size >= best_) return;
    Mask pick = 0;
    int pick_size = 65;
    for (auto s : sets_) {
      if (s & chosen) continue;
      auto avail = s & ~forbidden;
      if (avail == 0) return;  // cannot be hit any more
      if (std::popcount(avail) < pick_size) {
        pick = avail;
        pick_size = std::popcount(avail);
      }
    }
    if (pick == 0) {
      best_ = size;
      return;
    }
    if (size + packing_bound(chosen, forbidden) >= best_) return;
    // Include each element in turn, forbidding the ones already tried.
    Mask tried = 0;
    for (Mask rest = pick; rest; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      branch(chosen | bit, forbidden | tried);
      tried |= bit;
    }
  }

  std::vector<Mask> sets_;
  std::size_t best_;
};

inline bool hits_all(Mask m, const std::vector<Mask>& sets) {
  for (auto s : sets)
    if ((s & m) == 0) return false;
  return true;
}

/// Calls visit(mask) for every e-subset of {0..d-1} in lexicographic order of
/// the sorted index lists; stops early when visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t d, std::size_t e, Visit&& visit) {
  std::vector<std::size_t> idx(e);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    if (visit(m)) return true;
    std::size_t pos = e;
    while (pos > 0 && idx[pos - 1] == d - e + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < e; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline CoordinateSet to_coords(Mask m) {
  CoordinateSet out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

}  // namespace detail

/// Exact e(P). Set `list_all` to also collect every minimum distinguisher.
inline DistinguisherResult min_distinguisher(const Template& p, bool list_all = false) {
  auto sets = detail::difference_sets(p);
  DistinguisherResult out;
  out.e = detail::HittingSetSolver(sets, p.dim()).solve();
  std::vector<CoordinateSet> all;
  detail::for_each_combination(p.dim(), out.e, [&](detail::Mask m) {
    if (!detail::hits_all(m, sets)) return false;
    if (out.witness.empty()) out.witness = detail::to_coords(m);
    if (list_all) all.push_back(detail::to_coords(m));
    return !list_all;
  });
  if (list_all) out.all_minimum = std::move(all);
  return out;
}

inline std::size_t distinguishing_number(const Template& p) { return min_distinguisher(p).e; }

}  // namespace template_chroma
