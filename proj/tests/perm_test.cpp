#include "hat/perm.hpp"

#include <gtest/gtest.h>

#include "hat/error.hpp"

namespace hat {
namespace {

TEST(PermTest, ComposesLeftToRight) {
  const Perm g({1, 2, 0});  // (0 1 2)
  const Perm h({1, 0, 2});  // (0 1)
  const Perm gh = g * h;
  // 0 -g-> 1 -h-> 0
  EXPECT_EQ(gh(0), 0u);
  EXPECT_EQ(gh(1), 2u);
  EXPECT_EQ(gh(2), 1u);
  EXPECT_NE(g * h, h * g);
}

TEST(PermTest, RejectsNonBijection) {
  try {
    Perm({0, 0, 1});
    FAIL() << "expected BadParameter";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadParameter);
  }
  EXPECT_THROW(Perm({0, 3, 1}), Error);
}

TEST(PermTest, DegreeMismatchThrows) {
  try {
    (void)(Perm::identity(3) * Perm::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DomainMismatch);
  }
}

TEST(PermTest, InversePowOrder) {
  const Perm p({1, 2, 3, 0, 5, 4});  // (0 1 2 3)(4 5)
  EXPECT_EQ(p.order(), 4u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE(p.pow(4).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(5), p);
  EXPECT_EQ(p.fixed_point_count(), 0u);
  EXPECT_EQ(Perm::identity(5).fixed_point_count(), 5u);
}

TEST(PermTest, ConjugationIsInverseSandwich) {
  const Perm s({1, 2, 0, 3});
  const Perm g({3, 0, 1, 2});
  EXPECT_EQ(s.conjugate_by(g), g.inverse() * s * g);
}

TEST(PermTest, CycleString) {
  EXPECT_EQ(to_cycle_string(Perm({1, 2, 0, 3})), "(0 1 2)");
  EXPECT_EQ(to_cycle_string(Perm::identity(3)), "()");
}

}  // namespace
}  // namespace hat
