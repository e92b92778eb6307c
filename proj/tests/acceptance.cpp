// Acceptance run: one PASS/FAIL line per criterion, each checked against its
// wall-clock limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace template_chroma;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::vector<Template> classes_up_to(std::size_t max_d, std::size_t max_k) { return support::all_classes(max_d, max_k); }

std::string show(const Template& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t c = 0; c < p.dim(); ++c) s += (c ? "," : "") + std::to_string(p[i][c]);
    s += "]";
  }
  return s + "]";
}

Outcome structural_bounds() {
  Outcome out;
  std::size_t n = 0;
  for (const auto& p : classes_up_to(3, 4)) {
    ++n;
    const auto e = distinguishing_number(p), d = p.dim(), k = p.size();
    out.require(e >= 1 && e <= k - 1 && e <= d, "bounds violated at " + show(p));
    if (is_simple(p)) out.require(e == d && k >= d + 1, "simple template with e != d at " + show(p));
  }
  if (out.pass) out.detail = std::to_string(n) + " classes";
  return out;
}

Outcome monotonicity() {
  Outcome out;
  std::size_t pairs = 0;
  for (const auto& p : classes_up_to(3, 4)) {
    const auto e = distinguishing_number(p);
    for (const auto& q : homomorphic_images(p)) {
      ++pairs;
      out.require(distinguishing_number(q) >= e, "image " + show(q) + " of " + show(p) + " has smaller e");
    }
  }
  if (out.pass) out.detail = std::to_string(pairs) + " (P, image) pairs";
  return out;
}

Outcome chi_coherence() {
  Outcome out;
  std::size_t checks = 0;
  for (const auto& p : classes_up_to(3, 4)) {
    for (std::uint64_t c = 1; c <= 5; ++c) {
      ContinuumSetting s(c);
      auto v = chi_template(p, s);
      ++checks;
      out.require(v.chi == chi_simple_dim(distinguishing_number(p), s), "chi mismatch at " + show(p));
      out.require(successor_n(v.chi, p.dim() - 1) >= s.continuum(), "successor bound fails at " + show(p));
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " (P, c) checks";
  return out;
}

Outcome polynomial_oracle() {
  Outcome out;
  std::size_t checks = 0;
  std::vector<std::vector<std::size_t>> grids;
  for (std::size_t a = 1; a <= 3; ++a) {
    grids.push_back({a});
    for (std::size_t b = 1; b <= 3; ++b) grids.push_back({a, b});
  }
  for (std::size_t d = 1; d <= 2; ++d) {
    for (std::size_t k = 2; k <= 3; ++k) {
      for (const auto& p : enumerate_templates(d, k)) {
        for (const auto& g : grids) {
          if (g.size() != d) continue;
          GridSpec grid(g);
          auto expected = build_L(grid, p);
          auto pts = grid_points(grid);
          for (bool sym : {false, true}) {
            ++checks;
            out.require(zero_hypergraph_on_grid(template_to_polynomial(p, sym), pts) == expected,
                        "zero hypergraph differs for " + show(p));
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " (P, grid, symmetrize) cases";
  return out;
}

Outcome exact_anchors() {
  Outcome out;
  auto pair = validate_template(std::vector<Point>{{0}, {1}});
  for (std::size_t n = 1; n <= 8; ++n) {
    out.require(chromatic_exact(build_L(GridSpec({n}), pair)).colors == n, "K_" + std::to_string(n));
  }
  auto corner = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  out.require(chromatic_exact(build_L(GridSpec({2, 2}), corner)).colors == 2, "L(2x2, corner) != 2");
  out.require(chromatic_exact(build_shift_graph(4)).colors == 2, "shift graph N=4 != 2");
  std::size_t first_three = 0;
  for (std::size_t n = 2; n <= 16 && !first_three; ++n) {
    if (chromatic_exact(build_shift_graph(n)).colors >= 3) first_three = n;
  }
  out.require(first_three != 0, "shift graph never reaches 3 colors for N <= 16");

  std::mt19937_64 rng(20240611);
  auto small = classes_up_to(2, 3);
  std::size_t steps = 0;
  for (int chain = 0; chain < 20; ++chain) {
    const auto& p = small[rng() % small.size()];
    std::vector<std::size_t> sizes(p.dim(), 1);
    std::size_t prev = 0;
    while (true) {
      auto chi = chromatic_exact(build_L(GridSpec(sizes), p)).colors;
      ++steps;
      out.require(chi >= prev, "chi decreased along a grid chain for " + show(p));
      prev = chi;
      std::vector<std::size_t> growable;
      for (std::size_t c = 0; c < sizes.size(); ++c)
        if (sizes[c] < 4) growable.push_back(c);
      if (growable.empty()) break;
      ++sizes[growable[rng() % growable.size()]];
    }
  }
  if (out.pass) {
    out.detail = "first N with shift chi >= 3: " + std::to_string(first_three) + "; " + std::to_string(steps) +
                 " grid-chain steps";
  }
  return out;
}

// A lift built with the other branch of the recipe: a fresh value per point
// for connected P, one shared value for disconnected P. Never isomorphic to
// the correct lift.
Template flipped_lift(const Template& p) {
  std::vector<Point> rows = p.points();
  const bool connected = is_connected(p);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(connected ? static_cast<int>(i) : 0);
  return validate_template(rows);
}

Outcome embeddings() {
  Outcome out;
  std::size_t controls_failed = 0, templates = 0, samples = 0;
  for (const auto& p : classes_up_to(2, 3)) {
    ++templates;
    auto lift = star_lift(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out.require(Point(lift.lifted[i].begin(), lift.lifted[i].begin() + static_cast<long>(p.dim())) == p[i],
                  "projection identity fails for " + show(p));
    }
    out.require(distinguishing_number(lift.q) == distinguishing_number(p), "lift changes e for " + show(p));
    SamplerSpec spec{1000, 50, 1};
    auto report = verify_embedding(p, lift.q, g_map(p.dim()), spec);
    samples += report.samples_checked;
    out.require(report.failures.empty(), std::to_string(report.failures.size()) + " g-map failures for " + show(p));
    auto control = flipped_lift(p);
    out.require(!is_isomorphic(control, lift.q), "negative control coincides with the lift for " + show(p));
    auto bad = verify_embedding(p, control, g_map(p.dim()), spec);
    if (!bad.failures.empty()) ++controls_failed;
    out.require(!bad.failures.empty(), "negative control passed for " + show(p));
  }
  if (out.pass) {
    out.detail = std::to_string(templates) + " templates, " + std::to_string(samples) + " samples, " +
                 std::to_string(controls_failed) + " controls rejected";
  }
  return out;
}

Outcome forbidden() {
  Outcome out;
  auto dims = [](const ForbiddenFamily& f) {
    std::set<std::size_t> s;
    for (const auto& m : f.members) s.insert(m.e);
    return s;
  };
  out.require(dims(forbidden_family(3, Cardinal::aleph(0), ContinuumSetting(1))) == std::set<std::size_t>{1},
              "k=3, aleph_0, c=1");
  out.require(dims(forbidden_family(3, Cardinal::aleph(0), ContinuumSetting(2))) == std::set<std::size_t>{1, 2},
              "k=3, aleph_0, c=2");
  out.require(forbidden_family(3, Cardinal::aleph(2), ContinuumSetting(2)).members.empty(), "k=3, aleph_2, c=2");
  return out;
}

Outcome registry() {
  Outcome out;
  auto fox1 = registry_lookup("fox", 1);
  out.require(registry_avoidable(fox1, Cardinal::aleph(0), ContinuumSetting(1)), "fox(1) aleph_0 at c=1");
  out.require(!registry_avoidable(fox1, Cardinal::aleph(0), ContinuumSetting(2)), "fox(1) aleph_0 at c=2");
  out.require(registry_avoidable(fox1, Cardinal::aleph(1), ContinuumSetting(2)), "fox(1) aleph_1 at c=2");
  for (std::uint64_t k = 1; k <= 5; ++k)
    for (std::uint64_t c = 1; c <= 5; ++c)
      out.require(registry_avoidable(registry_lookup("fox", k), Cardinal::aleph(0), ContinuumSetting(c)) == (c <= k),
                  "fox(" + std::to_string(k) + ") at c=" + std::to_string(c));
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t c = 1; c <= 5; ++c)
      for (std::uint64_t a = 0; a <= c + 1; ++a) {
        auto kappa = Cardinal::aleph(a);
        out.require(registry_avoidable(registry_lookup("simplex", n), kappa, ContinuumSetting(c)) ==
                        (successor_n(kappa, n - 1) >= Cardinal::aleph(c)),
                    "simplex(" + std::to_string(n) + ") at c=" + std::to_string(c));
      }
  for (std::uint64_t m = 0; m <= 1000; ++m)
    out.require(distance_chromatic_upper(Cardinal::finite(m)) == Cardinal::aleph(0), "distance bound");
  return out;
}

Outcome shift_coloring() {
  Outcome out;
  std::mt19937_64 rng(77);
  auto draw = [&] {
    return Rational(static_cast<std::int64_t>(rng() % 2001) - 1000, 1 + static_cast<std::int64_t>(rng() % 60));
  };
  std::size_t edges = 0;
  while (edges < 10000) {
    auto a = draw(), b = draw(), c = draw();
    if (a == b && b == c) continue;
    ++edges;
    out.require(!(shift_color(a, b) == shift_color(b, c)),
                "edge (" + a.str() + "," + b.str() + ")-(" + b.str() + "," + c.str() + ") is monochromatic");
    out.require(shift_color(a, a).tag == ShiftColor::Tag::Zero, "phi(a, a) is not the zero token");
  }
  if (out.pass) out.detail = std::to_string(edges) + " random edges";
  return out;
}

Outcome round_trips() {
  Outcome out;
  std::mt19937_64 rng(99);
  auto all = classes_up_to(3, 4);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& p = all[rng() % all.size()];
    auto q = validate_template(support::relabel(p, rng));
    out.require(canonical_form(q) == q, "canonical form not idempotent");
    out.require(q == p, "relabelling changed the canonical form of " + show(p));
  }
  for (const auto& p : all) {
    out.require(polynomial_to_template(template_to_polynomial(p)) == canonical_form(p),
                "polynomial round trip fails for " + show(p));
  }
  if (out.pass) out.detail = "10000 relabellings, " + std::to_string(all.size()) + " polynomial round trips";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "structural bounds on e(P)", 10, structural_bounds},
      {2, "e monotone under homomorphic images", 60, monotonicity},
      {3, "symbolic chi coherence", 5, chi_coherence},
      {4, "polynomial zero graphs equal template hypergraphs", 120, polynomial_oracle},
      {5, "exact chromatic anchors", 120, exact_anchors},
      {6, "embedding verification", 120, embeddings},
      {7, "forbidden families", 5, forbidden},
      {8, "registry avoidability", 1, registry},
      {9, "shift coloring properness", 10, shift_coloring},
      {10, "round trips and relabelling fuzz", 60, round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) o = {false, "over time limit"};
    if (!o.pass) ++failed;
    std::printf("%s %2d %-50s %8.3fs / %gs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
