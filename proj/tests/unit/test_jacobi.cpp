#include <gtest/gtest.h>

#include "linf/jacobi.hpp"
#include "linf/sweep.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace linf;

namespace {

const std::vector<int> kGradings = {-4, -3, -2, -1, 0, 1, 2};

SkewOperatorSet first_example(int max_arity) {
  return SkewOperatorSet(GradedSpaceSpec::standard(0),
                         StructureConstants(max_arity, {Scalar(0), Scalar(1), Scalar(-1)},
                                            {Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}));
}

std::vector<GeneratorIndex> repeat(std::initializer_list<std::pair<GeneratorIndex, int>> parts) {
  std::vector<GeneratorIndex> out;
  for (auto [g, count] : parts) out.insert(out.end(), static_cast<std::size_t>(count), g);
  return out;
}

}  // namespace

TEST(RelevantWords, MatchMultisetFilterOracle) {
  for (int m : kGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    for (int n = 1; n <= 8; ++n) {
      std::vector<std::vector<int>> got;
      for (const auto& w : relevant_words(space, n)) got.push_back(w.generators());
      EXPECT_EQ(got, oracle::relevant_words_by_filter(m, n)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(RelevantWords, ShapesForTheMainGradings) {
  const auto a = GradedSpaceSpec::standard(0);
  const auto b = GradedSpaceSpec::standard(-1);
  const auto c = GradedSpaceSpec::standard(1);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(relevant_words(a, n), std::vector{BasisWord::from_generators(a, repeat({{0, 1}, {1, n - 1}}))});
    const std::vector<BasisWord> expected_b = {BasisWord::from_generators(b, repeat({{0, 2}, {2, n - 2}})),
                                               BasisWord::from_generators(b, repeat({{0, 1}, {1, 1}, {2, n - 2}})),
                                               BasisWord::from_generators(b, repeat({{0, 1}, {2, n - 1}}))};
    EXPECT_EQ(relevant_words(b, n), expected_b);
    EXPECT_EQ(relevant_words(c, n), std::vector{BasisWord::from_generators(c, repeat({{0, n}}))});
  }
  EXPECT_EQ(relevant_words(c, 3).size(), 1u);
  EXPECT_EQ(relevant_words(c, 3).front().to_string(c), "w⊗w⊗w");
}

TEST(Jacobi, FirstExampleIsL3) {
  const auto ops = first_example(3);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& w : relevant_words(ops, n)) EXPECT_TRUE(jacobi_bruteforce(ops, n, w).is_zero());
  }
  EXPECT_TRUE(all_passed(certify_Ln(ops, 3)));
  EXPECT_FALSE(first_failure(ops, 3).has_value());
}

// J_4(v w w w) = a_4 - 3 c_4 + 3 for the first example extended by a_4, c_4
// (b_4 drops out because b_1 = b_2 = 1 meet only a_1 = 0 and c_1 = 0).
TEST(Jacobi, FirstExampleAtArityFour) {
  const auto space = GradedSpaceSpec::standard(0);
  const auto w = BasisWord::parse(space, "v w w w");
  auto value_at = [&](int a4, int b4, int c4) {
    StructureConstants k = first_example(4).constants();
    k.set(Family::kA, 4, Scalar(a4));
    k.set(Family::kB, 4, Scalar(b4));
    k.set(Family::kC, 4, Scalar(c4));
    return jacobi_bruteforce(SkewOperatorSet(space, k), 4, w);
  };
  EXPECT_EQ(value_at(0, 0, 0), VectorValue::basis(2, Scalar(3)));
  for (int c4 : {-2, 0, 1, 5}) {
    for (int b4 : {0, 7}) {
      EXPECT_EQ(value_at(0, b4, c4), VectorValue::basis(2, Scalar(3 - 3 * c4)));
      EXPECT_TRUE(value_at(3 * c4 - 3, b4, c4).is_zero());
      EXPECT_FALSE(value_at(3 * c4 - 1, b4, c4).is_zero());
    }
  }
  EXPECT_EQ(first_failure(first_example(4), 4), 4);
}

TEST(Jacobi, SecondExampleIsL10) {
  std::vector<Scalar> ones(10, Scalar(1));
  const SkewOperatorSet ops(GradedSpaceSpec::standard(0), StructureConstants(10, {}, ones, {}));
  EXPECT_TRUE(all_passed(certify_Ln(ops, 10)));
}

TEST(Jacobi, SecondArityOnUW) {
  // J_2(u w) = -b_1 c_2 + b_2 c_1.
  const auto space = GradedSpaceSpec::standard(-1);
  const SkewOperatorSet ops(space, StructureConstants(2, {}, {Scalar(2), Scalar(3)}, {Scalar(5), Scalar(7)}));
  EXPECT_EQ(jacobi_bruteforce(ops, 2, ops.word("u w")), VectorValue::basis(2, Scalar(-2 * 7 + 3 * 5)));
  EXPECT_EQ(closed_form::uw(ops.constants(), 2), Scalar(1));
}

TEST(Jacobi, ContractErrors) {
  const auto ops = first_example(3);
  EXPECT_THROW(jacobi_bruteforce(ops, 4, ops.word("v w w w")), TruncationError);
  EXPECT_THROW(jacobi_bruteforce(ops, 3, ops.word("v w")), std::invalid_argument);
  EXPECT_THROW(jacobi_closed_form(ops, 2, ops.word("w w")), std::invalid_argument);
  EXPECT_THROW(certify_Ln(ops, 4), TruncationError);
}

TEST(ClosedFormProperty, AgreesWithBruteForceExhaustivelyOnSmallConstants) {
  for (int m : {0, -1}) {
    const auto space = GradedSpaceSpec::standard(m);
    const auto positions = slot_positions(SlotLayout(space), 4);
    for (int n = 1; n <= 4; ++n) {
      std::vector<SweepPosition> used;
      for (const auto& p : positions) {
        if (p.arity <= n) used.push_back(p);
      }
      sweep_assignments(n, used, {-1, 0, 1}, [&](const IntegerConstants& k) {
        const SkewOperatorSet ops(space, k.to_rational());
        for (const auto& w : relevant_words(space, n)) {
          EXPECT_EQ(jacobi_closed_form(ops, n, w), jacobi_bruteforce(ops, n, w));
        }
        return !::testing::Test::HasFailure();
      });
    }
  }
}

TEST(ClosedFormProperty, AgreesWithBruteForceOnRandomRationals) {
  testing_support::Gen gen(31);
  for (int m : {0, -1}) {
    const auto space = GradedSpaceSpec::standard(m);
    for (int n = 5; n <= 8; ++n) {
      for (int i = 0; i < 20; ++i) {
        const SkewOperatorSet ops(space, gen.constants(space, n));
        for (const auto& w : relevant_words(space, n)) {
          ASSERT_EQ(jacobi_closed_form(ops, n, w), jacobi_bruteforce(ops, n, w)) << w.to_string(space);
        }
      }
    }
  }
}

TEST(ClosedFormProperty, SplitAndRecombinedSumsAgree) {
  testing_support::Gen gen(32);
  const auto space = GradedSpaceSpec::standard(0);
  for (int n = 1; n <= 10; ++n) {
    for (int i = 0; i < 50; ++i) {
      const auto k = gen.constants(space, n);
      ASSERT_EQ(closed_form::vw_split(k, n), closed_form::vw_recombined(k, n));
    }
  }
}

TEST(ClosedFormProperty, IntegerAndRationalEvaluationsAgree) {
  testing_support::Gen gen(33);
  for (int i = 0; i < 200; ++i) {
    const int n = gen.uniform(1, 8);
    IntegerConstants k(n);
    for (Family f : kFamilies) {
      for (int j = 1; j <= n; ++j) k.set(f, j, gen.uniform(-5, 5));
    }
    const auto q = k.to_rational();
    EXPECT_EQ(Scalar(static_cast<long>(closed_form::vw_recombined(k, n))), closed_form::vw_recombined(q, n));
    EXPECT_EQ(Scalar(static_cast<long>(closed_form::uvw(k, n))), closed_form::uvw(q, n));
    EXPECT_EQ(Scalar(static_cast<long>(closed_form::uuw(k, n))), closed_form::uuw(q, n));
    EXPECT_EQ(Scalar(static_cast<long>(closed_form::uw(k, n))), closed_form::uw(q, n));
  }
}

TEST(JacobiProperty, SkewSymmetricWithDegreeThreeMinusN) {
  testing_support::Gen gen(34);
  for (int i = 0; i < 200; ++i) {
    const auto space = GradedSpaceSpec::standard(kGradings[static_cast<std::size_t>(gen.uniform(0, 6))]);
    const SkewOperatorSet ops(space, gen.constants(space, 6));
    const int n = gen.uniform(1, 6);
    const auto w = gen.word(space, n);
    const Permutation sigma(gen.permutation(n));
    const auto value = jacobi_bruteforce(ops, n, w);
    VectorValue expected = value;
    expected *= Scalar(koszul_sign(sigma, w));
    ASSERT_EQ(jacobi_bruteforce(ops, n, permute(sigma, w)), expected);
    for (int g = 0; g < kGeneratorCount; ++g) {
      if (!is_zero(value.coeff[static_cast<std::size_t>(g)])) {
        ASSERT_EQ(space.degree(g).value, w.total_degree() + 3 - n);
      }
    }
  }
}

TEST(JacobiProperty, VanishesOutsideRelevantWords) {
  testing_support::Gen gen(35);
  for (int m : kGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, gen.constants(space, 6));
    for (int n = 1; n <= 6; ++n) {
      const auto relevant = relevant_words(space, n);
      for (int i = n; i >= 0; --i) {
        for (int j = n - i; j >= 0; --j) {
          const auto w = BasisWord::from_generators(space, repeat({{0, i}, {1, j}, {2, n - i - j}}));
          if (std::find(relevant.begin(), relevant.end(), w) != relevant.end()) continue;
          ASSERT_TRUE(jacobi_bruteforce(ops, n, w).is_zero()) << w.to_string(space);
        }
      }
    }
  }
}
