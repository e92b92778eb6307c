#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "template_chroma/budget.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/rational.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma {

using VertexLabel = std::vector<Rational>;
using Edge = std::vector<std::size_t>;

/// k-uniform hypergraph on vertices 0..n-1. Edges are sorted index lists,
/// deduplicated and kept in lexicographic order.
class FiniteHypergraph {
 public:
  FiniteHypergraph(std::size_t k, std::vector<VertexLabel> labels, std::vector<Edge> edges)
      : k_(k), labels_(std::move(labels)), edges_(std::move(edges)) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto& edge = edges_[e];
      std::sort(edge.begin(), edge.end());
      if (edge.size() != k_ || std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
        throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " does not have " +
                                                    std::to_string(k_) + " distinct vertices", e);
      }
      if (edge.back() >= labels_.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(e) + " names a missing vertex", e);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  /// Vertices labelled by their index.
  static FiniteHypergraph unlabelled(std::size_t k, std::size_t n, std::vector<Edge> edges) {
    std::vector<VertexLabel> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back({Rational(static_cast<std::int64_t>(i))});
    return FiniteHypergraph(k, std::move(labels), std::move(edges));
  }

  /// Complete graph K_n.
  static FiniteHypergraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) edges.push_back({a, b});
    return unlabelled(2, n, std::move(edges));
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const FiniteHypergraph&, const FiniteHypergraph&) = default;

 private:
  std::size_t k_;
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
};

/// Product grid X_0 x ... x X_{d-1} with X_i = {0..sizes[i]-1}.
class GridSpec {
 public:
  explicit GridSpec(std::vector<std::size_t> sizes, const Budget& budget = {}) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw Error(ErrorKind::InvalidArgument, "grid needs at least one coordinate");
    std::size_t total = 1;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] == 0) throw Error(ErrorKind::InvalidArgument, "grid coordinate " + std::to_string(i) + " is empty", i);
      if (total > budget.max_vertices / sizes_[i]) {
        throw Error(ErrorKind::BudgetExceeded, "grid exceeds " + std::to_string(budget.max_vertices) + " vertices");
      }
      total *= sizes_[i];
    }
    total_ = total;
  }

  std::size_t dim() const noexcept { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t vertex_count() const noexcept { return total_; }

  /// Grid points in row-major (lexicographic) order.
  std::vector<Point> points() const {
    std::vector<Point> out;
    Point cur(sizes_.size(), 0);
    for (std::size_t n = 0; n < total_; ++n) {
      out.push_back(cur);
      for (std::size_t c = sizes_.size(); c-- > 0;) {
        if (static_cast<std::size_t>(++cur[c]) < sizes_[c]) break;
        cur[c] = 0;
      }
    }
    return out;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 0;
};

namespace detail {

inline VertexLabel to_label(const Point& p) {
  VertexLabel out;
  for (auto v : p) out.emplace_back(v);
  return out;
}

}  // namespace detail

/// L(grid, P): k-subsets of the grid that are homomorphic images of P. The
/// subset walk prunes as soon as some coordinate shows more distinct values
/// than P has blocks there.
inline FiniteHypergraph build_L(const GridSpec& grid, const Template& p, const Budget& budget = {}) {
  if (grid.dim() != p.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "grid has dimension " + std::to_string(grid.dim()) +
                                                  ", template has " + std::to_string(p.dim()));
  }
  const auto pts = grid.points();
  const auto k = p.size();
  const auto d = p.dim();
  const auto parts = coordinate_partitions(p).parts;
  std::vector<std::size_t> limit(d);
  for (std::size_t c = 0; c < d; ++c) limit[c] = parts[c].block_count();

  std::vector<Edge> edges;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<int>> values(d);  // distinct values seen per coordinate, as a stack
  std::uint64_t nodes = 0;

  auto walk = [&](auto& self, std::size_t start) -> void {
    if (++nodes > budget.max_nodes) {
      throw Error(ErrorKind::BudgetExceeded, "build_L exceeded " + std::to_string(budget.max_nodes) + " search nodes");
    }
    if (chosen.size() == k) {
      std::vector<Point> q;
      for (auto v : chosen) q.push_back(pts[v]);
      if (find_homomorphism(p.points(), q)) edges.push_back(chosen);
      return;
    }
    for (std::size_t v = start; v + (k - chosen.size()) <= pts.size(); ++v) {
      std::vector<bool> added(d, false);
      bool ok = true;
      for (std::size_t c = 0; c < d; ++c) {
        if (std::find(values[c].begin(), values[c].end(), pts[v][c]) == values[c].end()) {
          values[c].push_back(pts[v][c]);
          added[c] = true;
          if (values[c].size() > limit[c]) ok = false;
        }
      }
      if (ok) {
        chosen.push_back(v);
        self(self, v + 1);
        chosen.pop_back();
      }
      for (std::size_t c = 0; c < d; ++c)
        if (added[c]) values[c].pop_back();
    }
  };
  walk(walk, 0);

  std::vector<VertexLabel> labels;
  for (const auto& x : pts) labels.push_back(detail::to_label(x));
  return FiniteHypergraph(k, std::move(labels), std::move(edges));
}

/// Shift graph on {0..n-1}: vertices (a,b) with a < b, edges {(a,b),(b,c)}.
/// Finite part of the zero graph of x_1 - y_0 on ordered pairs.
inline FiniteHypergraph build_shift_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "shift graph needs n >= 2");
  std::vector<VertexLabel> labels;
  std::vector<std::vector<std::size_t>> id(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      id[a][b] = labels.size();
      labels.push_back({Rational(static_cast<std::int64_t>(a)), Rational(static_cast<std::int64_t>(b))});
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) edges.push_back({id[a][b], id[b][c]});
  return FiniteHypergraph(2, std::move(labels), std::move(edges));
}

}  // namespace template_chroma
