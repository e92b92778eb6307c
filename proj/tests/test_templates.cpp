#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace template_chroma;

namespace {

Template make(std::vector<Point> pts) { return validate_template(pts); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Validate, RejectsMalformedInput) {
  try {
    validate_template(std::vector<RawPoint>{{1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewPoints);
  }
  try {
    validate_template(std::vector<RawPoint>{{1, 2}, {3}, {4, 5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RaggedTuple);
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    validate_template(std::vector<RawPoint>{{1, 2}, {3, 4}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoint);
    EXPECT_EQ(e.index(), 2u);
  }
  Budget small;
  small.max_template_points = 3;
  EXPECT_EQ(kind_of([&] { validate_template(std::vector<RawPoint>{{0}, {1}, {2}, {3}}, small); }),
            ErrorKind::BudgetExceeded);
}

TEST(Validate, CanonicalFormOfCorner) {
  auto p = validate_template(std::vector<RawPoint>{{5, 7}, {5, 9}, {6, 9}});
  EXPECT_EQ(p.points(), (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.size(), 3u);
}

TEST(Validate, LargeValuesOnlyMatterThroughEquality) {
  auto p = validate_template(std::vector<RawPoint>{{INT64_MAX, -5}, {INT64_MIN, -5}});
  auto q = make({{3, 1}, {4, 1}});
  EXPECT_EQ(p, q);
}

TEST(Enumerate, ClassCountsMatchOrbitOracle) {
  // Frozen from oracle::count_classes; recomputed below as a cross-check.
  struct Row {
    std::size_t d, k, all, simple;
  };
  const std::vector<Row> table = {{1, 2, 1, 1}, {1, 3, 1, 1}, {1, 4, 1, 1}, {2, 2, 3, 0},  {2, 3, 6, 1},
                                  {2, 4, 16, 7}, {3, 2, 7, 0}, {3, 3, 29, 0}, {3, 4, 209, 4}};
  for (const auto& r : table) {
    SCOPED_TRACE("d=" + std::to_string(r.d) + " k=" + std::to_string(r.k));
    EXPECT_EQ(enumerate_templates(r.d, r.k).size(), r.all);
    EXPECT_EQ(enumerate_templates(r.d, r.k, true).size(), r.simple);
    auto counts = oracle::count_classes(r.d, r.k);
    EXPECT_EQ(counts.all, r.all);
    EXPECT_EQ(counts.simple, r.simple);
  }
}

TEST(Enumerate, LargerCountsAgreeWithOracle) {
  for (auto [d, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {1, 6}, {4, 3}}) {
    auto counts = oracle::count_classes(d, k);
    EXPECT_EQ(enumerate_templates(d, k).size(), counts.all) << d << "," << k;
    EXPECT_EQ(enumerate_templates(d, k, true).size(), counts.simple) << d << "," << k;
  }
}

TEST(Enumerate, ClassesArePairwiseNonIsomorphicAndCanonical) {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto all = enumerate_templates(2, k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(canonical_form(all[i]), all[i]);
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        EXPECT_FALSE(oracle::isomorphic(support::rows(all[i]), support::rows(all[j])));
      }
    }
  }
}

TEST(Enumerate, RespectsBudget) {
  Budget b;
  b.max_points = 3;
  EXPECT_EQ(kind_of([&] { enumerate_templates(2, 4, false, b); }), ErrorKind::BudgetExceeded);
  b.max_dim = 1;
  EXPECT_EQ(kind_of([&] { enumerate_templates(2, 3, false, b); }), ErrorKind::BudgetExceeded);
}

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t k = 2 + rng() % (d == 1 ? 2 : 4);
    auto p = validate_template(support::random_points(d, k, 3, rng));
    auto q = validate_template(support::random_points(d, k, 3, rng));
    EXPECT_EQ(is_isomorphic(p, q), oracle::isomorphic(support::rows(p), support::rows(q)));
  }
}

TEST(Isomorphism, CoordinatesAreNotPermuted) {
  // Swapping coordinates of an asymmetric template gives another class.
  auto p = make({{0, 0}, {0, 1}, {0, 2}});
  auto q = make({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_FALSE(is_isomorphic(p, q));
}

TEST(CanonicalForm, RelabellingFuzz) {
  std::mt19937_64 rng(2024);
  auto classes = support::all_classes(3, 4);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& p = classes[rng() % classes.size()];
    auto q = validate_template(support::relabel(p, rng));
    ASSERT_EQ(q, p);
    ASSERT_EQ(canonical_form(q), q);
  }
}

TEST(Simple, AgreesWithOracle) {
  for (const auto& p : support::all_classes(3, 4)) EXPECT_EQ(is_simple(p), oracle::simple(support::rows(p)));
}

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected(make({{0, 0}, {0, 1}, {1, 1}})));
  EXPECT_FALSE(is_connected(make({{0, 0}, {1, 1}})));
  auto comps = connected_components(make({{0, 0}, {0, 1}, {2, 2}}));
  EXPECT_EQ(comps.size(), 2u);
}

TEST(HomomorphicImages, SoundAndComplete) {
  for (std::size_t d = 1; d <= 2; ++d) {
    for (std::size_t k = 2; k <= 4; ++k) {
      auto all = enumerate_templates(d, k);
      for (const auto& p : all) {
        auto images = homomorphic_images(p);
        std::set<Template> got(images.begin(), images.end());
        EXPECT_EQ(got.size(), images.size());
        for (const auto& q : all) {
          bool expected = oracle::homomorphic_image(support::rows(p), support::rows(q));
          EXPECT_EQ(got.count(q) == 1, expected);
          EXPECT_EQ(is_homomorphic_image(p, q).has_value(), expected);
        }
      }
    }
  }
}

TEST(HomomorphicImages, IncludesSelfAndRejectsDimensionMismatch) {
  auto p = make({{0, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(is_homomorphic_image(p, p).has_value());
  EXPECT_EQ(kind_of([&] { is_homomorphic_image(p, make({{0}, {1}, {2}})); }), ErrorKind::DimensionMismatch);
}

TEST(Project, KeepsOrDropsCoordinates) {
  auto p = make({{0, 0, 5}, {0, 1, 5}, {1, 1, 5}});
  EXPECT_EQ(project(p, {1, 0}), make({{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(kind_of([&] { project(p, {0}); }), ErrorKind::CollapseError);
  EXPECT_EQ(kind_of([&] { project(p, {0, 3}); }), ErrorKind::IndexOutOfRange);
}

TEST(Pad, AppendsConstantCoordinates) {
  auto p = make({{0}, {1}});
  auto q = pad_with_constant(p, 3);
  EXPECT_EQ(q.dim(), 3u);
  EXPECT_EQ(project(q, {0}), p);
  EXPECT_FALSE(is_simple(q));
}

TEST(Basis, IsSimpleWithExpectedShape) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t k = d + 1; k <= d + 3; ++k) {
      auto b = basis_template(d, k);
      EXPECT_EQ(b.dim(), d);
      EXPECT_EQ(b.size(), k);
      EXPECT_TRUE(is_simple(b));
    }
  }
  EXPECT_EQ(kind_of([] { basis_template(3, 3); }), ErrorKind::InvalidArgument);
}

TEST(Partitions, BellNumbersAndMeets) {
  const std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n < bell.size(); ++n) EXPECT_EQ(set_partitions(n).size(), bell[n]);
  for (const auto& p : set_partitions(4)) {
    for (const auto& q : coarsenings(p)) EXPECT_TRUE(p.refines(q));
  }
}
