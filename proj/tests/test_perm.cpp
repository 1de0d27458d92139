#include <gtest/gtest.h>

#include "endotriv/errors.hpp"
#include "endotriv/perm.hpp"

using namespace endotriv;

TEST(Perm, ComposesRightToLeft) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // (a*b)(x) = a(b(x))
  EXPECT_EQ((a * b)(0), 1u);
  EXPECT_EQ((a * b)(1), 2u);
  EXPECT_EQ((a * b)(2), 0u);
  EXPECT_EQ((a * b).order(), 3u);
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST(Perm, InverseAndPower) {
  Perm c = Perm::from_cycles(6, {{0, 1, 2, 3}, {4, 5}});
  EXPECT_EQ(c.order(), 4u);
  EXPECT_TRUE((c * c.inverse()).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(c.pow(5), c);
  EXPECT_TRUE(c.pow(4).is_identity());
}

TEST(Perm, CycleString) {
  Perm c = Perm::from_cycles(5, {{0, 2}, {1, 3, 4}});
  EXPECT_EQ(to_cycle_string(c), "(1,3)(2,4,5)");
  EXPECT_EQ(to_cycle_string(Perm(4)), "()");
}

TEST(Perm, DegreeMismatchThrows) {
  EXPECT_THROW(Perm(3) * Perm(4), DimensionError);
}
