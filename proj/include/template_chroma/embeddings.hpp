#pragma once

// Constructive embeddings between template hypergraphs.
//
// projection_data: projecting P onto a minimum distinguisher gives an
// e-dimensional Q, and padding points of X^e with a constant embeds
// L(X^e, Q) into L(X^d, P).
//
// star_lift / lift_to_dim: a (d+1)-dimensional Q with the same e that
// projects back onto P, built recursively. Connected P gets a constant new
// coordinate; a disconnected P is split into its first component and the
// rest, both lifted, and the rest's new coordinate shifted past the first
// part's labels. g_map(d) then embeds L(N^{d+1}, Q) into L(N^d, P).

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "template_chroma/distinguishers.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma {

/// An injective map between integer grids of fixed arity.
struct VertexMap {
  std::string name;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::function<RawPoint(const RawPoint&)> apply;
};

/// Places a point of X^e on the coordinates `placement` of X^d and fills
/// the other coordinates with `fill`.
struct PaddingMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  CoordinateSet placement;
  std::int64_t fill = 0;

  RawPoint operator()(const RawPoint& x) const {
    RawPoint y(target_dim, fill);
    for (std::size_t i = 0; i < placement.size(); ++i) y[placement[i]] = x[i];
    return y;
  }

  VertexMap as_vertex_map() const { return {"pad", source_dim, target_dim, *this}; }
};

struct ProjectionData {
  Template q;
  PaddingMap map;
  /// Q is not guaranteed simple for every P; reported, not asserted.
  bool q_is_simple = false;
};

inline ProjectionData projection_data(const Template& p, std::int64_t fill = 0) {
  auto dist = min_distinguisher(p);
  auto q = project(p, dist.witness);
  const bool simple = is_simple(q);
  return {std::move(q), PaddingMap{dist.e, p.dim(), dist.witness, fill}, simple};
}

struct LiftStep {
  std::size_t level;  // dimension being lifted from
  std::size_t depth;  // recursion depth within that level
  std::size_t points;
  std::string branch;  // "connected", "disconnected" or "singleton"
};

struct LiftResult {
  Template q;
  /// Lifted points aligned with the source template's stored order: the
  /// first dim(P) coordinates of lifted[i] are exactly P[i].
  std::vector<Point> lifted;
  std::vector<LiftStep> trace;
};

namespace detail {

inline std::vector<Point> lift_rows(const std::vector<Point>& rows, std::size_t depth, std::vector<LiftStep>& trace) {
  std::vector<Point> out = rows;
  const auto level = rows.front().size();
  if (rows.size() == 1) {
    trace.push_back({level, depth, 1, "singleton"});
    out[0].push_back(0);
    return out;
  }
  const auto comps = connected_components(rows);
  if (comps.size() == 1) {
    trace.push_back({level, depth, rows.size(), "connected"});
    for (auto& r : out) r.push_back(0);
    return out;
  }
  trace.push_back({level, depth, rows.size(), "disconnected"});
  std::vector<std::size_t> first = comps.front(), rest;
  for (std::size_t i = 1; i < comps.size(); ++i) rest.insert(rest.end(), comps[i].begin(), comps[i].end());
  std::sort(rest.begin(), rest.end());
  auto pick = [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(rows[i]);
    return sub;
  };
  auto q0 = lift_rows(pick(first), depth + 1, trace);
  auto q1 = lift_rows(pick(rest), depth + 1, trace);
  int offset = 0;
  for (const auto& r : q0) offset = std::max(offset, r.back() + 1);
  for (auto& r : q1) r.back() += offset;
  for (std::size_t i = 0; i < first.size(); ++i) out[first[i]] = q0[i];
  for (std::size_t i = 0; i < rest.size(); ++i) out[rest[i]] = q1[i];
  return out;
}

}  // namespace detail

/// One lifting step: a (d+1)-dimensional template projecting onto P.
inline LiftResult star_lift(const Template& p) {
  LiftResult r{p, {}, {}};
  r.lifted = detail::lift_rows(p.points(), 0, r.trace);
  r.q = detail::make_canonical(r.lifted);
  return r;
}

/// Repeated star_lift up to dimension m; m = dim(P) returns P itself.
inline LiftResult lift_to_dim(const Template& p, std::size_t m) {
  if (m < p.dim()) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot lift dimension " + std::to_string(p.dim()) + " down to " + std::to_string(m));
  }
  LiftResult r{p, p.points(), {}};
  for (std::size_t level = p.dim(); level < m; ++level) r.lifted = detail::lift_rows(r.lifted, 0, r.trace);
  r.q = detail::make_canonical(r.lifted);
  return r;
}

/// Cantor pairing (a + n)(a + n + 1)/2 + n, a bijection N^2 -> N.
inline std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t n) {
  const auto s = static_cast<unsigned __int128>(a) + n;
  // s(s+1)/2 alone exceeds 64 bits once s >= 2^33.
  const auto v = s >> 33 ? ~static_cast<unsigned __int128>(0) : s * (s + 1) / 2 + n;
  if (v > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Overflow, "Cantor pairing overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

/// N^{d+1} -> N^d, (a_0..a_d) -> (pair(a_d, a_0), ..., pair(a_d, a_{d-1})):
/// the last coordinate selects the block X_a = {pair(a, n)} and the others
/// are sent into it bijectively.
inline VertexMap g_map(std::size_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "g_map needs d >= 1");
  return {"g", d + 1, d, [d](const RawPoint& x) {
            if (x.size() != d + 1) throw Error(ErrorKind::DimensionMismatch, "g_map expects " + std::to_string(d + 1) + " coordinates");
            for (auto v : x)
              if (v < 0) throw Error(ErrorKind::InvalidArgument, "g_map is defined on naturals");
            RawPoint y(d);
            for (std::size_t i = 0; i < d; ++i) {
              auto v = cantor_pair(static_cast<std::uint64_t>(x[d]), static_cast<std::uint64_t>(x[i]));
              if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
                throw Error(ErrorKind::Overflow, "g_map value exceeds int64");
              }
              y[i] = static_cast<std::int64_t>(v);
            }
            return y;
          }};
}

struct SamplerSpec {
  std::size_t samples = 1000;
  std::int64_t bound = 50;  // coordinates drawn from [0, bound)
  std::uint64_t seed = 1;
};

struct EmbeddingReport {
  SamplerSpec sampler;
  std::size_t samples_checked = 0;
  std::size_t edge_agreements = 0;
  std::size_t domain_edges = 0;  // sampled subsets that are edges on the domain side
  std::vector<std::vector<RawPoint>> failures;
};

namespace detail {

class SubsetSampler {
 public:
  SubsetSampler(const Template& domain_template, const SamplerSpec& spec)
      : q_(domain_template), spec_(spec), rng_(spec.seed) {}

  /// k distinct points; cycles through uniform draws, draws from small value
  /// pools per coordinate, and random (not necessarily injective) relabellings
  /// of the domain template, which are always its homomorphic images.
  std::vector<RawPoint> draw(std::size_t i) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<RawPoint> t;
      switch (i % 3) {
        case 0: t = uniform(); break;
        case 1: t = pooled(); break;
        default: t = relabelled(); break;
      }
      std::set<RawPoint> s(t.begin(), t.end());
      if (s.size() == t.size()) return {s.begin(), s.end()};
    }
    throw Error(ErrorKind::SamplerExhausted, "could not draw " + std::to_string(q_.size()) + " distinct points");
  }

 private:
  std::int64_t value() { return static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(spec_.bound)); }

  std::vector<RawPoint> uniform() {
    std::vector<RawPoint> t(q_.size(), RawPoint(q_.dim()));
    for (auto& x : t)
      for (auto& v : x) v = value();
    return t;
  }

  std::vector<RawPoint> pooled() {
    std::vector<std::vector<std::int64_t>> pools(q_.dim());
    for (auto& pool : pools) {
      auto n = 1 + rng_() % q_.size();
      for (std::size_t j = 0; j < n; ++j) pool.push_back(value());
    }
    std::vector<RawPoint> t(q_.size(), RawPoint(q_.dim()));
    for (auto& x : t)
      for (std::size_t c = 0; c < q_.dim(); ++c) x[c] = pools[c][rng_() % pools[c].size()];
    return t;
  }

  std::vector<RawPoint> relabelled() {
    std::vector<RawPoint> t(q_.size(), RawPoint(q_.dim()));
    for (std::size_t c = 0; c < q_.dim(); ++c) {
      std::vector<std::int64_t> image(q_.size());
      for (auto& v : image) v = value();
      for (std::size_t r = 0; r < q_.size(); ++r) t[r][c] = image[q_[r][c]];
    }
    return t;
  }

  const Template& q_;
  SamplerSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Samples k-subsets T of the domain grid [0, bound)^{dim Q} and checks
/// "T is an edge of L(., Q) iff map[T] is an edge of L(., P)". Non-injective
/// images count as failures.
inline EmbeddingReport verify_embedding(const Template& p, const Template& q, const VertexMap& map,
                                        const SamplerSpec& spec = {}) {
  if (map.domain_dim != q.dim() || map.codomain_dim != p.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "map " + map.name + " goes from dimension " +
                                                  std::to_string(map.domain_dim) + " to " +
                                                  std::to_string(map.codomain_dim) + ", templates have " +
                                                  std::to_string(q.dim()) + " and " + std::to_string(p.dim()));
  }
  if (p.size() != q.size()) throw Error(ErrorKind::InvalidArgument, "templates differ in size");
  if (spec.bound < 1) throw Error(ErrorKind::SamplerExhausted, "sampler bound must be positive");
  {
    // The grid must hold k distinct points.
    unsigned __int128 cells = 1;
    for (std::size_t c = 0; c < q.dim() && cells < q.size(); ++c) cells *= static_cast<std::uint64_t>(spec.bound);
    if (cells < q.size()) {
      throw Error(ErrorKind::SamplerExhausted, "grid [0," + std::to_string(spec.bound) + ")^" +
                                                   std::to_string(q.dim()) + " has fewer than " +
                                                   std::to_string(q.size()) + " points");
    }
  }
  EmbeddingReport report;
  report.sampler = spec;
  detail::SubsetSampler sampler(q, spec);
  for (std::size_t i = 0; i < spec.samples; ++i) {
    auto t = sampler.draw(i);
    std::vector<RawPoint> image;
    for (const auto& x : t) image.push_back(map.apply(x));
    const bool injective = std::set<RawPoint>(image.begin(), image.end()).size() == image.size();
    const bool domain_edge = find_homomorphism(q.points(), t).has_value();
    const bool image_edge = injective && find_homomorphism(p.points(), image).has_value();
    ++report.samples_checked;
    if (domain_edge) ++report.domain_edges;
    if (injective && domain_edge == image_edge) ++report.edge_agreements;
    else report.failures.push_back(std::move(t));
  }
  return report;
}

/// For every distinguisher I of Q and every j < dim(P),
/// (I without the new coordinates) plus {j} distinguishes P.
inline bool lift_extends_distinguishers(const Template& p, const Template& q) {
  if (q.dim() > 20) throw Error(ErrorKind::BudgetExceeded, "distinguisher extension check enumerates all coordinate subsets");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q.dim()); ++mask) {
    CoordinateSet in_q;
    for (std::size_t c = 0; c < q.dim(); ++c)
      if (mask >> c & 1) in_q.push_back(c);
    if (!is_distinguisher(q, in_q)) continue;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      CoordinateSet s;
      for (auto c : in_q)
        if (c < p.dim()) s.push_back(c);
      if (std::find(s.begin(), s.end(), j) == s.end()) s.push_back(j);
      if (!is_distinguisher(p, s)) return false;
    }
  }
  return true;
}

}  // namespace template_chroma
