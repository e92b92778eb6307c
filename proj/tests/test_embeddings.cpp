#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace template_chroma;

TEST(Cantor, MatchesDiagonalCount) {
  for (std::uint64_t a = 0; a < 30; ++a)
    for (std::uint64_t n = 0; n < 30; ++n) EXPECT_EQ(cantor_pair(a, n), oracle::cantor_pair(a, n));
  EXPECT_EQ(g_map(1).apply({2, 3}), (RawPoint{17}));
  EXPECT_THROW(cantor_pair(UINT64_MAX, 1), Error);
}

TEST(Cantor, GMapIsInjectiveOnABox) {
  std::set<RawPoint> seen;
  auto g = g_map(2);
  for (std::int64_t a = 0; a < 12; ++a)
    for (std::int64_t b = 0; b < 12; ++b)
      for (std::int64_t c = 0; c < 12; ++c) EXPECT_TRUE(seen.insert(g.apply({a, b, c})).second);
}

TEST(StarLift, InvariantsOnAllSmallClasses) {
  for (const auto& p : support::all_classes(3, 4)) {
    auto r = star_lift(p);
    ASSERT_EQ(r.lifted.size(), p.size());
    EXPECT_EQ(r.q.dim(), p.dim() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_EQ(Point(r.lifted[i].begin(), r.lifted[i].begin() + static_cast<long>(p.dim())), p[i]);
    }
    EXPECT_EQ(validate_template(r.lifted), r.q);
    CoordinateSet first(p.dim());
    std::iota(first.begin(), first.end(), std::size_t{0});
    EXPECT_EQ(project(r.q, first), p);
    EXPECT_EQ(distinguishing_number(r.q), distinguishing_number(p));
    EXPECT_FALSE(r.trace.empty());
  }
}

TEST(StarLift, ConnectedTemplatesGetAConstantCoordinate) {
  auto corner = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto r = star_lift(corner);
  for (const auto& x : r.lifted) EXPECT_EQ(x.back(), 0);
  EXPECT_EQ(r.trace.front().branch, "connected");
}

TEST(LiftToDim, RepeatsTheLift) {
  auto p = validate_template(std::vector<Point>{{0}, {1}, {2}});
  auto r = lift_to_dim(p, 4);
  EXPECT_EQ(r.q.dim(), 4u);
  EXPECT_EQ(distinguishing_number(r.q), 1u);
  EXPECT_EQ(lift_to_dim(p, 1).q, p);
  EXPECT_THROW(lift_to_dim(validate_template(std::vector<Point>{{0, 0}, {1, 1}}), 1), Error);
}

TEST(Verify, GMapAgreesOnLiftedTemplates) {
  for (const auto& p : support::all_classes(2, 3)) {
    auto q = star_lift(p).q;
    auto report = verify_embedding(p, q, g_map(p.dim()), SamplerSpec{400, 50, 3});
    EXPECT_EQ(report.samples_checked, 400u);
    EXPECT_TRUE(report.failures.empty()) << report.failures.size();
    EXPECT_GT(report.domain_edges, 0u);
  }
}

TEST(Verify, PaddingMapAgreesOnProjection) {
  for (const auto& p : support::all_classes(3, 4)) {
    auto data = projection_data(p);
    EXPECT_EQ(data.q.dim(), distinguishing_number(p));
    auto report = verify_embedding(p, data.q, data.map.as_vertex_map(), SamplerSpec{150, 20, 5});
    EXPECT_TRUE(report.failures.empty());
  }
}

TEST(Verify, DetectsAWrongDomainTemplate) {
  // The line template's lift is not the corner's; g must fail somewhere.
  auto corner = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto wrong = star_lift(validate_template(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}})).q;
  auto report = verify_embedding(corner, wrong, g_map(2), SamplerSpec{300, 20, 1});
  EXPECT_FALSE(report.failures.empty());
}

TEST(Verify, IsDeterministicPerSeed) {
  auto p = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto q = star_lift(p).q;
  auto a = verify_embedding(p, q, g_map(2), SamplerSpec{100, 30, 42});
  auto b = verify_embedding(p, q, g_map(2), SamplerSpec{100, 30, 42});
  EXPECT_EQ(a.domain_edges, b.domain_edges);
  EXPECT_EQ(a.edge_agreements, b.edge_agreements);
}

TEST(Verify, RejectsBadArguments) {
  auto p = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto q = star_lift(p).q;
  EXPECT_THROW(verify_embedding(p, q, g_map(1)), Error);
  EXPECT_THROW(verify_embedding(p, q, g_map(2), SamplerSpec{10, 0, 1}), Error);
  auto pair = validate_template(std::vector<Point>{{0}, {1}});
  auto pair_q = star_lift(pair).q;
  EXPECT_THROW(verify_embedding(pair, pair_q, g_map(1), SamplerSpec{10, 1, 1}), Error);
}

TEST(StarLift, DistinguishersOfTheLiftExtendToP) {
  for (const auto& p : support::all_classes(3, 5)) EXPECT_TRUE(lift_extends_distinguishers(p, star_lift(p).q));
  // Fails for a lift that forgets P's structure.
  auto corner = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto flat = validate_template(std::vector<Point>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  EXPECT_FALSE(lift_extends_distinguishers(corner, flat));
}
