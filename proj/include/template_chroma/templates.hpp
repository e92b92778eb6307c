#pragma once

// Templates: k distinct d-tuples considered up to coordinate-wise relabelling.
//
// Isomorphism never permutes coordinate positions. Two templates are
// isomorphic when a bijection of their points preserves, for every fixed
// coordinate i, both equality and inequality of the i-th entries. Only the
// equality pattern matters, so a Template always stores the canonical
// representative of its class: entries are small labels 0,1,2,... and the
// point list is the lexicographically least one obtainable by reordering
// points and relabelling each coordinate by first occurrence.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "template_chroma/budget.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/partitions.hpp"

namespace template_chroma {

using Point = std::vector<int>;
using RawPoint = std::vector<std::int64_t>;
using CoordinateSet = std::vector<std::size_t>;

class Template;
namespace detail {
struct TemplateAccess;
}

/// A d-dimensional k-template in canonical form. Construct through
/// validate_template(); every other producer goes through the same path.
class Template {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const Template&, const Template&) = default;
  friend auto operator<=>(const Template& a, const Template& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.points_ <=> b.points_;
  }

 private:
  friend struct detail::TemplateAccess;
  Template(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {}

  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

/// The d coordinate-equality partitions of a template's point indices.
struct PartitionTuple {
  std::vector<SetPartition> parts;

  SetPartition meet() const {
    return template_chroma::meet(parts, parts.empty() ? 0 : parts.front().size());
  }
  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

namespace detail {

struct TemplateAccess {
  static Template make(std::size_t dim, std::vector<Point> pts) { return Template(dim, std::move(pts)); }
};

/// Backtracking search for the least flattened row list over all row
/// orderings, each coordinate relabelled by first occurrence. Rows may repeat.
template <typename Value>
class CanonicalLabeller {
 public:
  explicit CanonicalLabeller(const std::vector<std::vector<Value>>& rows)
      : rows_(rows), k_(rows.size()), d_(rows.empty() ? 0 : rows.front().size()) {}

  std::vector<Point> run() {
    used_.assign(k_, false);
    seen_.assign(d_, {});
    cur_.clear();
    best_.clear();
    descend(0);
    std::vector<Point> out(k_, Point(d_));
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < d_; ++c) out[r][c] = best_[r * d_ + c];
    return out;
  }

 private:
  int label_for(std::size_t c, const Value& v, bool& fresh) {
    auto& s = seen_[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == v) {
        fresh = false;
        return static_cast<int>(i);
      }
    }
    fresh = true;
    s.push_back(v);
    return static_cast<int>(s.size() - 1);
  }

  void descend(std::size_t depth) {
    if (depth == k_) {
      if (best_.empty() || cur_ < best_) best_ = cur_;
      return;
    }
    for (std::size_t r = 0; r < k_; ++r) {
      if (used_[r]) continue;
      std::vector<bool> fresh(d_);
      for (std::size_t c = 0; c < d_; ++c) {
        bool f = false;
        cur_.push_back(label_for(c, rows_[r][c], f));
        fresh[c] = f;
      }
      bool prune = false;
      if (!best_.empty()) {
        auto n = cur_.size();
        prune = std::lexicographical_compare(best_.begin(), best_.begin() + n, cur_.begin(), cur_.end());
      }
      if (!prune) {
        used_[r] = true;
        descend(depth + 1);
        used_[r] = false;
      }
      for (std::size_t c = d_; c-- > 0;) {
        cur_.pop_back();
        if (fresh[c]) seen_[c].pop_back();
      }
    }
  }

  const std::vector<std::vector<Value>>& rows_;
  std::size_t k_, d_;
  std::vector<bool> used_;
  std::vector<std::vector<Value>> seen_;
  std::vector<int> cur_, best_;
};

template <typename Value>
std::vector<Point> canonical_rows(const std::vector<std::vector<Value>>& rows) {
  return CanonicalLabeller<Value>(rows).run();
}

inline std::vector<int> flatten(const std::vector<Point>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

inline std::vector<Point> unflatten(const std::vector<int>& flat, std::size_t k, std::size_t d) {
  std::vector<Point> out(k, Point(d));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < d; ++c) out[r][c] = flat[r * d + c];
  return out;
}

inline bool rows_distinct(const std::vector<Point>& rows) {
  std::set<Point> s(rows.begin(), rows.end());
  return s.size() == rows.size();
}

/// Template from rows already known to be distinct and rectangular.
template <typename Value>
Template make_canonical(const std::vector<std::vector<Value>>& rows) {
  return TemplateAccess::make(rows.front().size(), canonical_rows(rows));
}

}  // namespace detail

/// Checks shape and distinctness, then canonicalizes.
inline Template validate_template(const std::vector<RawPoint>& raw, const Budget& budget = {}) {
  if (raw.size() < 2) {
    throw Error(ErrorKind::TooFewPoints,
                "a template needs at least 2 points, got " + std::to_string(raw.size()), raw.size());
  }
  const auto dim = raw.front().size();
  if (dim == 0) throw Error(ErrorKind::RaggedTuple, "point 0 has no coordinates", 0);
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].size() != dim) {
      throw Error(ErrorKind::RaggedTuple,
                  "point " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                      " coordinates, expected " + std::to_string(dim),
                  i);
    }
  }
  for (std::size_t i = 1; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (raw[i] == raw[j]) {
        throw Error(ErrorKind::DuplicatePoint,
                    "point " + std::to_string(i) + " repeats point " + std::to_string(j), i);
      }
    }
  }
  if (raw.size() > budget.max_template_points) {
    throw Error(ErrorKind::BudgetExceeded, "template has " + std::to_string(raw.size()) +
                                               " points; canonical labelling is capped at " +
                                               std::to_string(budget.max_template_points));
  }
  return detail::make_canonical(raw);
}

inline Template validate_template(const std::vector<Point>& raw, const Budget& budget = {}) {
  std::vector<RawPoint> wide;
  wide.reserve(raw.size());
  for (const auto& p : raw) wide.emplace_back(p.begin(), p.end());
  return validate_template(wide, budget);
}

inline PartitionTuple coordinate_partitions(const Template& p) {
  PartitionTuple out;
  for (std::size_t c = 0; c < p.dim(); ++c) {
    std::vector<int> column;
    for (const auto& x : p.points()) column.push_back(x[c]);
    out.parts.push_back(SetPartition::from_values(column));
  }
  return out;
}

/// Recomputes the canonical labelling; equal to `p` by the class invariant.
inline Template canonical_form(const Template& p) { return detail::make_canonical(p.points()); }

inline bool is_isomorphic(const Template& p, const Template& q) {
  if (p.dim() != q.dim() || p.size() != q.size()) return false;
  return canonical_form(p) == canonical_form(q);
}

/// For every coordinate m some two points differ exactly at m.
inline bool is_simple(const Template& p) {
  const auto& pts = p.points();
  for (std::size_t m = 0; m < p.dim(); ++m) {
    bool witnessed = false;
    for (std::size_t a = 0; a < pts.size() && !witnessed; ++a) {
      for (std::size_t b = a + 1; b < pts.size() && !witnessed; ++b) {
        bool ok = pts[a][m] != pts[b][m];
        for (std::size_t i = 0; i < p.dim() && ok; ++i) {
          if (i != m && pts[a][i] != pts[b][i]) ok = false;
        }
        witnessed = ok;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

/// Components of the "share some coordinate value" graph on point indices,
/// ordered by smallest member.
template <typename Value>
std::vector<std::vector<std::size_t>> connected_components(const std::vector<std::vector<Value>>& pts) {
  const auto k = pts.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = 0; c < pts[a].size(); ++c) {
        if (pts[a][c] == pts[b][c]) {
          auto ra = find(a), rb = find(b);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
          break;
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

inline std::vector<std::vector<std::size_t>> connected_components(const Template& p) {
  return connected_components(p.points());
}

inline bool is_connected(const Template& p) { return connected_components(p).size() == 1; }

/// Bijection f (as target indices) with x_i = y_i implying f(x)_i = f(y)_i,
/// found by depth-first search in source order; rows need not be canonical.
template <typename A, typename B>
std::optional<std::vector<std::size_t>> find_homomorphism(const std::vector<std::vector<A>>& from,
                                                          const std::vector<std::vector<B>>& to) {
  const auto k = from.size();
  if (to.size() != k) return std::nullopt;
  if (k == 0) return std::vector<std::size_t>{};
  const auto d = from.front().size();
  // An image never has more distinct values in a coordinate than its source.
  for (std::size_t c = 0; c < d; ++c) {
    std::set<A> sa;
    std::set<B> sb;
    for (const auto& x : from) sa.insert(x[c]);
    for (const auto& y : to) sb.insert(y[c]);
    if (sb.size() > sa.size()) return std::nullopt;
  }
  std::vector<std::size_t> f(k);
  std::vector<bool> used(k, false);
  auto fits = [&](std::size_t j, std::size_t t) {
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        if (from[i][c] == from[j][c] && !(to[f[i]][c] == to[t][c])) return false;
      }
    }
    return true;
  };
  auto search = [&](auto& self, std::size_t j) -> bool {
    if (j == k) return true;
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || !fits(j, t)) continue;
      used[t] = true;
      f[j] = t;
      if (self(self, j + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (search(search, 0)) return f;
  return std::nullopt;
}

/// Witness that `q` is a homomorphic image of `p`, indexing both templates'
/// stored (canonical) point order.
inline std::optional<std::vector<std::size_t>> is_homomorphic_image(const Template& p, const Template& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "templates have dimensions " + std::to_string(p.dim()) +
                                                  " and " + std::to_string(q.dim()));
  }
  return find_homomorphism(p.points(), q.points());
}

/// All isomorphism classes of d-dimensional k-templates, in canonical order.
/// Built coordinate by coordinate: the classes of j-column label matrices are
/// extended by every set partition and deduplicated before the next column.
inline std::vector<Template> enumerate_templates(std::size_t d, std::size_t k, bool simple_only = false,
                                                 const Budget& budget = {}) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 1");
  if (k < 2) throw Error(ErrorKind::TooFewPoints, "templates need at least 2 points", k);
  if (d > budget.max_dim || k > budget.max_points) {
    throw Error(ErrorKind::BudgetExceeded, "enumeration of d=" + std::to_string(d) + ", k=" +
                                               std::to_string(k) + " exceeds budget d<=" +
                                               std::to_string(budget.max_dim) +
                                               ", k<=" + std::to_string(budget.max_points));
  }
  const auto partitions = set_partitions(k);
  std::set<std::vector<int>> layer{std::vector<int>{}};
  for (std::size_t j = 0; j < d; ++j) {
    std::set<std::vector<int>> next;
    for (const auto& flat : layer) {
      auto rows = detail::unflatten(flat, k, j);
      for (const auto& part : partitions) {
        auto extended = rows;
        for (std::size_t i = 0; i < k; ++i) extended[i].push_back(part.block_of(i));
        if (j + 1 == d && !detail::rows_distinct(extended)) continue;
        next.insert(detail::flatten(detail::canonical_rows(extended)));
      }
    }
    layer = std::move(next);
  }
  std::vector<Template> out;
  for (const auto& flat : layer) {
    auto t = detail::TemplateAccess::make(d, detail::unflatten(flat, k, d));
    if (!simple_only || is_simple(t)) out.push_back(std::move(t));
  }
  return out;
}

/// Canonical forms of all k-templates that are homomorphic images of `p`:
/// per-coordinate coarsenings whose meet stays discrete. Includes `p`.
inline std::vector<Template> homomorphic_images(const Template& p, const Budget& budget = {}) {
  const auto k = p.size();
  const auto parts = coordinate_partitions(p).parts;
  std::vector<std::vector<SetPartition>> options;
  std::uint64_t combos = 1;
  for (const auto& part : parts) {
    options.push_back(coarsenings(part));
    combos *= options.back().size();
    if (combos > budget.max_nodes) {
      throw Error(ErrorKind::BudgetExceeded, "too many coarsening combinations for homomorphic images");
    }
  }
  std::set<std::vector<int>> found;
  std::vector<std::size_t> choice(parts.size(), 0);
  while (true) {
    std::vector<Point> rows(k, Point(p.dim()));
    for (std::size_t c = 0; c < p.dim(); ++c)
      for (std::size_t i = 0; i < k; ++i) rows[i][c] = options[c][choice[c]].block_of(i);
    if (detail::rows_distinct(rows)) found.insert(detail::flatten(detail::canonical_rows(rows)));
    std::size_t c = 0;
    while (c < choice.size() && ++choice[c] == options[c].size()) choice[c++] = 0;
    if (c == choice.size()) break;
  }
  std::vector<Template> out;
  for (const auto& flat : found) out.push_back(detail::TemplateAccess::make(p.dim(), detail::unflatten(flat, k, p.dim())));
  return out;
}

/// Restriction of every point to `coords` (ascending, re-indexed from 0).
/// Fails with CollapseError when `coords` is not a distinguisher.
inline Template project(const Template& p, CoordinateSet coords) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "projection needs at least one coordinate");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (auto c : coords) {
    if (c >= p.dim()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "coordinate " + std::to_string(c) + " out of range for dimension " + std::to_string(p.dim()), c);
    }
  }
  std::vector<Point> rows;
  for (const auto& x : p.points()) {
    Point y;
    for (auto c : coords) y.push_back(x[c]);
    rows.push_back(std::move(y));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[i] == rows[j]) {
        throw Error(ErrorKind::CollapseError, "points " + std::to_string(j) + " and " + std::to_string(i) +
                                                  " coincide on the chosen coordinates", i);
      }
    }
  }
  return detail::make_canonical(rows);
}

/// Appends constant coordinates up to `target_dim`.
inline Template pad_with_constant(const Template& p, std::size_t target_dim, int fill = 0) {
  if (target_dim < p.dim()) {
    throw Error(ErrorKind::InvalidArgument, "cannot pad dimension " + std::to_string(p.dim()) + " down to " +
                                                std::to_string(target_dim));
  }
  auto rows = p.points();
  for (auto& r : rows) r.resize(target_dim, fill);
  return detail::make_canonical(rows);
}

/// The simple d-dimensional (d+1)-template {e_0, ..., e_{d-1}, 0}, extended
/// by k-d-1 further points (j+2, 0, ..., 0) when k > d+1.
inline Template basis_template(std::size_t d, std::size_t k = 0) {
  if (k == 0) k = d + 1;
  if (d < 1 || k < d + 1) {
    throw Error(ErrorKind::InvalidArgument, "a simple " + std::to_string(d) + "-dimensional template needs at least " +
                                                std::to_string(d + 1) + " points");
  }
  std::vector<Point> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Point x(d, 0);
    x[i] = 1;
    rows.push_back(std::move(x));
  }
  rows.emplace_back(d, 0);
  for (std::size_t j = 0; rows.size() < k; ++j) {
    Point x(d, 0);
    x[0] = static_cast<int>(j) + 2;
    rows.push_back(std::move(x));
  }
  return detail::make_canonical(rows);
}

}  // namespace template_chroma
