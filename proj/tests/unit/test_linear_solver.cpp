#include <gtest/gtest.h>

#include "linf/linear_solver.hpp"
#include "support/random.hpp"

using linf::LinearSystem;
using linf::Scalar;

TEST(LinearSystem, UniqueSolution) {
  LinearSystem s(2);
  EXPECT_TRUE(s.add_equation({Scalar(1), Scalar(1)}, Scalar(3)));
  EXPECT_TRUE(s.add_equation({Scalar(1), Scalar(-1)}, Scalar(1)));
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(s.determined(0));
  EXPECT_EQ(*s.value(0), 2);
  EXPECT_EQ(*s.value(1), 1);
}

TEST(LinearSystem, FreeUnknownKeepsSuppliedValue) {
  LinearSystem s(3);
  s.add_equation({Scalar(1), Scalar(2), Scalar(0)}, Scalar(4));
  EXPECT_FALSE(s.determined(0));
  EXPECT_FALSE(s.determined(1));
  EXPECT_FALSE(s.determined(2));
  const auto x = s.solve({Scalar(0), Scalar(5), Scalar(7)});
  EXPECT_EQ(x[0] + 2 * x[1], 4);
  EXPECT_EQ(x[1], 5);
  EXPECT_EQ(x[2], 7);
}

TEST(LinearSystem, RedundantEquationsAreAbsorbed) {
  LinearSystem s(2);
  s.add_equation({Scalar(2), Scalar(4)}, Scalar(6));
  EXPECT_TRUE(s.add_equation({Scalar(1), Scalar(2)}, Scalar(3)));
  EXPECT_TRUE(s.add_equation({Scalar(0), Scalar(0)}, Scalar(0)));
  EXPECT_EQ(s.rank(), 1);
}

TEST(LinearSystem, InconsistentSystemIsDetected) {
  LinearSystem s(2);
  s.add_equation({Scalar(1), Scalar(1)}, Scalar(1));
  EXPECT_FALSE(s.add_equation({Scalar(2), Scalar(2)}, Scalar(3)));
  EXPECT_FALSE(s.consistent());
  LinearSystem t(1);
  EXPECT_FALSE(t.add_equation({Scalar(0)}, Scalar(1)));
}

TEST(LinearSystem, RejectsWrongWidth) {
  LinearSystem s(2);
  EXPECT_THROW(s.add_equation({Scalar(1)}, Scalar(0)), std::invalid_argument);
}

TEST(LinearSystemProperty, RecoversPlantedSolutions) {
  testing_support::Gen gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.uniform(1, 6);
    std::vector<Scalar> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = gen.rational();
    LinearSystem s(n);
    const int equations = gen.uniform(1, n + 2);
    for (int e = 0; e < equations; ++e) {
      std::vector<Scalar> row(static_cast<std::size_t>(n));
      Scalar rhs = 0;
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = gen.rational();
        rhs += row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      }
      ASSERT_TRUE(s.add_equation(row, rhs));
    }
    // Free unknowns set to the planted values reproduce the plant.
    EXPECT_EQ(s.solve(x), x);
    for (int j = 0; j < n; ++j) {
      if (s.determined(j)) EXPECT_EQ(*s.value(j), x[static_cast<std::size_t>(j)]);
    }
  }
}
