#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace template_chroma;

TEST(Cardinal, OrderingAcrossKinds) {
  EXPECT_LT(Cardinal::finite(1000000), Cardinal::aleph(0));
  EXPECT_LT(Cardinal::aleph(3), Cardinal::aleph(4));
  EXPECT_LT(Cardinal::aleph(1000), Cardinal::aleph_omega());
  EXPECT_EQ(compare(Cardinal::finite(2), Cardinal::finite(2)), std::strong_ordering::equal);
}

TEST(Cardinal, TextRoundTrip) {
  for (auto c : {Cardinal::finite(0), Cardinal::finite(17), Cardinal::aleph(0), Cardinal::aleph(12),
                 Cardinal::aleph_omega()}) {
    EXPECT_EQ(Cardinal::parse(c.str()), c);
  }
  EXPECT_EQ(Cardinal::aleph(2).str(), "aleph_2");
  for (const char* bad : {"", "aleph_", "aleph_01", "07", "aleph-1", "omega", "-3"}) {
    EXPECT_THROW(Cardinal::parse(bad), Error) << bad;
  }
}

TEST(Successor, AlephIndexArithmetic) {
  EXPECT_EQ(successor_n(Cardinal::aleph(2), 3), Cardinal::aleph(5));
  EXPECT_EQ(successor_n(Cardinal::aleph(2), 0), Cardinal::aleph(2));
  EXPECT_EQ(successor_omega(Cardinal::aleph(0)), Cardinal::aleph_omega());
  try {
    successor_n(Cardinal::finite(3), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedIndex);
  }
  EXPECT_THROW(successor_n(Cardinal::aleph_omega(), 1), Error);
  EXPECT_THROW(successor_n(Cardinal::aleph(UINT64_MAX), 1), Error);
}

TEST(Sum, MaxOfInfiniteSummands) {
  EXPECT_EQ(card_sum(Cardinal::finite(3), Cardinal::finite(4)), Cardinal::finite(7));
  EXPECT_EQ(card_sum(Cardinal::finite(3), Cardinal::aleph(0)), Cardinal::aleph(0));
  EXPECT_EQ(card_sum(Cardinal::aleph(2), Cardinal::aleph(1)), Cardinal::aleph(2));
}

TEST(Continuum, RejectsCountableContinuum) {
  EXPECT_THROW(ContinuumSetting(0), Error);
  EXPECT_EQ(ContinuumSetting(3).continuum(), Cardinal::aleph(3));
}

TEST(LeastAleph, MatchesScan) {
  for (std::uint64_t c = 1; c <= 10; ++c) {
    for (std::uint64_t s = 0; s <= 10; ++s) {
      auto got = least_aleph_reaching(ContinuumSetting(c), s);
      EXPECT_EQ(got, Cardinal::aleph(oracle::least_aleph_reaching(c, s))) << c << "," << s;
      // Least: its s-fold successor reaches the continuum, a smaller aleph's does not.
      EXPECT_GE(successor_n(got, s), Cardinal::aleph(c));
      if (got.value() > 0) {
        EXPECT_LT(successor_n(Cardinal::aleph(got.value() - 1), s), Cardinal::aleph(c));
      }
    }
  }
}
