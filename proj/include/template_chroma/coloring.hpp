#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "template_chroma/budget.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/hypergraph.hpp"

namespace template_chroma {

using Coloring = std::vector<std::size_t>;

struct ColoringResult {
  std::size_t colors = 0;  // number of colors used; the chromatic number for chromatic_exact
  Coloring coloring;       // witness, indexed by vertex
  std::uint64_t nodes = 0;
};

/// No edge is monochromatic. The coloring must cover every vertex.
inline bool is_proper_coloring(const FiniteHypergraph& h, const Coloring& coloring) {
  if (coloring.size() != h.vertex_count()) {
    throw Error(ErrorKind::InvalidArgument, "coloring covers " + std::to_string(coloring.size()) + " of " +
                                                std::to_string(h.vertex_count()) + " vertices");
  }
  for (const auto& e : h.edges()) {
    bool constant = true;
    for (auto v : e) constant = constant && coloring[v] == coloring[e.front()];
    if (constant) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> incidence(const FiniteHypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(h.vertex_count());
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    for (auto v : h.edges()[i]) inc[v].push_back(i);
  return inc;
}

/// Highest degree first, then repeatedly the vertex sharing the most edges
/// with those already placed; ties go to higher degree, then lower index.
inline std::vector<std::size_t> solve_order(const FiniteHypergraph& h,
                                            const std::vector<std::vector<std::size_t>>& inc) {
  const auto n = h.vertex_count();
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links[v] > links[best] ||
          (links[v] == links[best] && inc[v].size() > inc[best].size())) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (auto e : inc[best])
      for (auto u : h.edges()[e])
        if (!placed[u]) ++links[u];
  }
  return order;
}

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

/// True when giving v color c would make some edge through v monochromatic.
inline bool completes_edge(const FiniteHypergraph& h, const std::vector<std::vector<std::size_t>>& inc,
                           const Coloring& col, std::size_t v, std::size_t c) {
  for (auto e : inc[v]) {
    bool mono = true;
    for (auto u : h.edges()[e]) {
      if (u != v && col[u] != c) {
        mono = false;
        break;
      }
    }
    if (mono) return true;
  }
  return false;
}

class ExactColorer {
 public:
  ExactColorer(const FiniteHypergraph& h, const Budget& budget)
      : h_(h), inc_(incidence(h)), order_(solve_order(h, inc_)), budget_(budget) {}

  bool try_colors(std::size_t c, Coloring& out) {
    colors_ = c;
    col_.assign(h_.vertex_count(), kUncolored);
    if (place(0, 0)) {
      out = col_;
      return true;
    }
    return false;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool place(std::size_t pos, std::size_t used) {
    if (pos == order_.size()) return true;
    if (++nodes_ > budget_.max_nodes) {
      throw Error(ErrorKind::BudgetExceeded,
                  "chromatic_exact exceeded " + std::to_string(budget_.max_nodes) + " backtracking nodes");
    }
    const auto v = order_[pos];
    // Colors beyond used are interchangeable: only the first fresh one is tried.
    const auto top = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      if (completes_edge(h_, inc_, col_, v, c)) continue;
      col_[v] = c;
      if (neighbours_viable(v) && place(pos + 1, std::max(used, c + 1))) return true;
      col_[v] = kUncolored;
    }
    return false;
  }

  // Every uncolored vertex sharing an edge with v keeps at least one color.
  bool neighbours_viable(std::size_t v) const {
    for (auto e : inc_[v]) {
      for (auto u : h_.edges()[e]) {
        if (col_[u] != kUncolored) continue;
        bool any = false;
        for (std::size_t c = 0; c < colors_ && !any; ++c) any = !completes_edge(h_, inc_, col_, u, c);
        if (!any) return false;
      }
    }
    return true;
  }

  const FiniteHypergraph& h_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<std::size_t> order_;
  const Budget& budget_;
  std::size_t colors_ = 0;
  Coloring col_;
  std::uint64_t nodes_ = 0;
};

/// Greedy clique for graphs; any edge forces two colors otherwise.
inline std::size_t clique_lower_bound(const FiniteHypergraph& h) {
  if (h.vertex_count() == 0) return 0;
  if (h.edges().empty()) return 1;
  if (h.k() != 2) return 2;
  const auto n = h.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : h.edges()) {
    adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
    ++deg[e[0]];
    ++deg[e[1]];
  }
  std::vector<std::size_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), std::size_t{0});
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
  std::size_t best = 2;
  for (auto seed : by_degree) {
    std::vector<std::size_t> clique{seed};
    for (auto v : by_degree) {
      if (v == seed) continue;
      bool all = true;
      for (auto u : clique) all = all && adj[u][v];
      if (all) clique.push_back(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

}  // namespace detail

/// Greedy upper bound: vertices in degree order, each takes the least color
/// that leaves no edge monochromatic.
inline ColoringResult greedy_bound(const FiniteHypergraph& h) {
  const auto n = h.vertex_count();
  const auto inc = detail::incidence(h);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return inc[a].size() > inc[b].size(); });
  ColoringResult r;
  r.coloring.assign(n, detail::kUncolored);
  for (auto v : order) {
    std::size_t c = 0;
    while (detail::completes_edge(h, inc, r.coloring, v, c)) ++c;
    r.coloring[v] = c;
    r.colors = std::max(r.colors, c + 1);
  }
  return r;
}

/// Least number of colors admitting a proper coloring, with a witness.
/// Iterative deepening from the clique lower bound; the first success is
/// minimal. 0 for the empty hypergraph, 1 when there are no edges.
inline ColoringResult chromatic_exact(const FiniteHypergraph& h, const Budget& budget = {}) {
  auto greedy = greedy_bound(h);
  const auto lower = detail::clique_lower_bound(h);
  if (greedy.colors <= lower) return greedy;
  detail::ExactColorer solver(h, budget);
  for (auto c = lower; c < greedy.colors; ++c) {
    Coloring col;
    if (solver.try_colors(c, col)) return {c, std::move(col), solver.nodes()};
  }
  greedy.nodes = solver.nodes();
  return greedy;
}

}  // namespace template_chroma
