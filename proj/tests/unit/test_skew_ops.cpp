#include <gtest/gtest.h>

#include "linf/skew_ops.hpp"
#include "support/random.hpp"

using namespace linf;

namespace {

std::vector<BasisWord> all_words(const GradedSpaceSpec& space, int n) {
  std::vector<BasisWord> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    std::vector<GeneratorIndex> gens;
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) gens.push_back(static_cast<int>(c % 3));
    out.push_back(BasisWord::from_generators(space, gens));
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

const std::vector<int> kGradings = {-4, -3, -2, -1, 0, 1, 2};

}  // namespace

TEST(StructureConstants, PadsAndBoundsChecks) {
  const StructureConstants k(4, {Scalar(1)}, {Scalar(2), Scalar(3)}, {});
  EXPECT_EQ(k.a(1), 1);
  EXPECT_EQ(k.a(4), 0);
  EXPECT_EQ(k.b(2), 3);
  EXPECT_EQ(k.sequence(Family::kC).size(), 4u);
  EXPECT_THROW(k.a(5), TruncationError);
  EXPECT_THROW(k.a(0), std::invalid_argument);
  EXPECT_THROW(StructureConstants(1, {Scalar(1), Scalar(2)}, {}, {}), std::invalid_argument);
  EXPECT_THROW(StructureConstants(0), std::invalid_argument);
}

TEST(IntegerConstants, ConvertsToRationals) {
  IntegerConstants k(3);
  k.set(Family::kB, 2, -1);
  EXPECT_EQ(k.to_rational().b(2), -1);
  EXPECT_THROW(k.get(Family::kA, 4), TruncationError);
}

TEST(SlotLayout, TabulatedFamiliesForTheThreeMainGradings) {
  const SlotLayout a(GradedSpaceSpec::standard(0));
  const auto s3 = a.slots(3);
  ASSERT_EQ(s3.size(), 3u);
  // v w w -> a w, w w w -> b x, v w x -> c x
  EXPECT_EQ(a.find({1, 2, 0})->family, Family::kA);
  EXPECT_EQ(a.find({1, 2, 0})->output, 1);
  EXPECT_EQ(a.find({0, 3, 0})->family, Family::kB);
  EXPECT_EQ(a.find({1, 1, 1})->family, Family::kC);
  EXPECT_FALSE(a.has_slot(Family::kC, 1));

  const SlotLayout b(GradedSpaceSpec::standard(-1));
  // u v w -> a u, u w w -> b v, v w w -> c w
  EXPECT_EQ(b.find({1, 1, 1})->output, 0);
  EXPECT_EQ(b.find({1, 0, 2})->family, Family::kB);
  EXPECT_EQ(b.find({0, 1, 2})->family, Family::kC);
  EXPECT_FALSE(b.has_slot(Family::kA, 1));
  EXPECT_TRUE(b.has_slot(Family::kC, 1));

  const SlotLayout c(GradedSpaceSpec::standard(1));
  // w w w -> a x, w w x -> b y
  EXPECT_EQ(c.find({3, 0, 0})->output, 1);
  EXPECT_EQ(c.find({2, 1, 0})->family, Family::kB);
  EXPECT_FALSE(c.has_slot(Family::kC, 2));
}

TEST(SlotLayout, DegenerateGradingsTakeAdmissibleWordsInOrder) {
  const SlotLayout d(GradedSpaceSpec::standard(-2));
  EXPECT_EQ(d.slots(2).size(), admissible_counts(-2, 2).size());
  EXPECT_TRUE(d.slots(3).empty());
  EXPECT_TRUE(SlotLayout(GradedSpaceSpec::standard(2)).slots(2).empty());
}

TEST(SkewOperatorSet, RejectsConstantsWithoutSlots) {
  EXPECT_THROW(SkewOperatorSet(GradedSpaceSpec::standard(0), StructureConstants(2, {}, {}, {Scalar(1)})),
               std::invalid_argument);
  EXPECT_THROW(SkewOperatorSet(GradedSpaceSpec::standard(-1), StructureConstants(2, {Scalar(1)}, {}, {})),
               std::invalid_argument);
  EXPECT_THROW(SkewOperatorSet(GradedSpaceSpec::standard(1), StructureConstants(2, {}, {}, {Scalar(0), Scalar(1)})),
               std::invalid_argument);
}

TEST(Evaluate, SkewSignOnSwappedArguments) {
  // l_2(u v) = a_2 u, and exchanging the odd u with the even v costs a sign.
  const SkewOperatorSet ops(GradedSpaceSpec::standard(-1), StructureConstants(2, {Scalar(0), Scalar(5)}, {}, {}));
  EXPECT_EQ(evaluate(ops, 2, ops.word("u v")), VectorValue::basis(0, Scalar(5)));
  EXPECT_EQ(evaluate(ops, 2, ops.word("v u")), VectorValue::basis(0, Scalar(-5)));
}

TEST(Evaluate, RepeatedEvenLetterGivesZero) {
  const SkewOperatorSet ops(GradedSpaceSpec::standard(0), StructureConstants(2, {Scalar(1), Scalar(1)}, {}, {}));
  EXPECT_TRUE(evaluate(ops, 2, ops.word("v v")).is_zero());
}

TEST(Evaluate, ContractErrors) {
  const SkewOperatorSet ops(GradedSpaceSpec::standard(0), StructureConstants(2));
  EXPECT_THROW(evaluate(ops, 3, ops.word("v w w")), TruncationError);
  EXPECT_THROW(evaluate(ops, 2, ops.word("v w w")), std::invalid_argument);
  const auto foreign = BasisWord::from_generators(GradedSpaceSpec::standard(1), {0, 0});
  EXPECT_THROW(evaluate(ops, 2, foreign), std::invalid_argument);
}

TEST(ExtendApply, FirstArityOnTwoLetters) {
  // l_1 extended to v w: l_1(v) w vanishes with a_1 = 0, and moving the odd w
  // in front of the even v costs a sign, so the result is -x v.
  const SkewOperatorSet ops(GradedSpaceSpec::standard(0), StructureConstants(2, {}, {Scalar(1)}, {}));
  TensorValue expected;
  expected.add({2, 0}, Scalar(-1));
  EXPECT_EQ(extend_apply(ops, 1, ops.word("v w")), expected);
  EXPECT_EQ(extend_apply(ops, 1, ops.word("v w")).to_string(ops.space()), "-(x⊗v)");
}

TEST(ComposeJacobiTerm, FirstOrderSquare) {
  const SkewOperatorSet ops(GradedSpaceSpec::standard(0),
                            StructureConstants(1, {Scalar(3)}, {Scalar(-2, 5)}, {}));
  EXPECT_EQ(compose_jacobi_term(ops, 1, ops.word("v")), VectorValue::basis(2, Scalar(-6, 5)));
}

TEST(VectorValue, Formatting) {
  const auto s = GradedSpaceSpec::standard(0);
  EXPECT_EQ(VectorValue::basis(2, Scalar(2)).to_string(s), "2x");
  EXPECT_EQ(VectorValue::basis(0, Scalar(-1)).to_string(s), "-v");
  VectorValue v = VectorValue::basis(1, Scalar(1, 2));
  v += VectorValue::basis(2, Scalar(1));
  EXPECT_EQ(v.to_string(s), "(1/2)w + x");
  EXPECT_EQ(VectorValue{}.to_string(s), "0");
}

TEST(EvaluateProperty, OutputDegreeIsTwoMinusArity) {
  testing_support::Gen gen(21);
  for (int m : kGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, gen.constants(space, 8));
    for (int n = 1; n <= 8; ++n) {
      for (const auto& w : all_words(space, n)) {
        const auto v = evaluate(ops, n, w);
        for (int g = 0; g < kGeneratorCount; ++g) {
          if (!is_zero(v.coeff[static_cast<std::size_t>(g)])) {
            ASSERT_EQ(space.degree(g).value, w.total_degree() + 2 - n) << w.to_string(space);
          }
        }
      }
    }
  }
}

TEST(EvaluateProperty, SkewSymmetricExhaustive) {
  testing_support::Gen gen(22);
  for (int m : kGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, gen.constants(space, 5));
    for (int n = 1; n <= 5; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& w : all_words(space, n)) {
        const auto base = evaluate(ops, n, w);
        for (const auto& line : perms) {
          const Permutation sigma(line);
          VectorValue expected = base;
          expected *= Scalar(koszul_sign(sigma, w));
          ASSERT_EQ(evaluate(ops, n, permute(sigma, w)), expected) << w.to_string(space);
        }
      }
    }
  }
}

TEST(EvaluateProperty, NonzeroOnlyOnTabulatedSlots) {
  testing_support::Gen gen(23);
  for (int m : kGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, gen.constants(space, 6));
    for (int n = 1; n <= 6; ++n) {
      for (const auto& w : all_words(space, n)) {
        if (!evaluate(ops, n, w).is_zero()) ASSERT_TRUE(ops.layout().find(w.counts()).has_value());
      }
    }
  }
}

TEST(ComposeProperty, SkewSymmetricOnRandomWords) {
  testing_support::Gen gen(24);
  for (int i = 0; i < 300; ++i) {
    const auto space = GradedSpaceSpec::standard(kGradings[static_cast<std::size_t>(gen.uniform(0, 6))]);
    const SkewOperatorSet ops(space, gen.constants(space, 6));
    const int n = gen.uniform(1, 6);
    const auto w = gen.word(space, n);
    const Permutation sigma(gen.permutation(n));
    for (int p = 1; p <= n; ++p) {
      VectorValue expected = compose_jacobi_term(ops, p, w);
      expected *= Scalar(koszul_sign(sigma, w));
      ASSERT_EQ(compose_jacobi_term(ops, p, permute(sigma, w)), expected);
    }
  }
}
