#pragma once

// Precompiled unshuffle expansion of J_n on a fixed word.
//
// The brute-force sum over unshuffles depends on the structure constants only
// through products (inner constant) * (outer constant). Enumerating the
// unshuffles once against the slot layout and merging equal products gives a
// short term list that evaluates J_n for any constants. Used by the exhaustive
// sweeps; jacobi_bruteforce stays the reference it is tested against.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "linf/skew_ops.hpp"

namespace linf {

struct ExpansionTerm {
  std::int64_t weight = 0;
  Family inner_family = Family::kA;
  int inner_arity = 0;
  Family outer_family = Family::kA;
  int outer_arity = 0;
  GeneratorIndex output = 0;
};

class JacobiExpansion {
 public:
  JacobiExpansion(const SlotLayout& layout, int n, BasisWord word);

  int n() const { return n_; }
  const BasisWord& word() const { return word_; }
  const std::vector<ExpansionTerm>& terms() const { return terms_; }

  /// J_n(word). Throws TruncationError if n exceeds the constants' max_arity.
  VectorValue evaluate(const StructureConstants& constants) const;
  bool vanishes(const StructureConstants& constants) const;
  std::array<std::int64_t, kGeneratorCount> evaluate(const IntegerConstants& constants) const;
  bool vanishes(const IntegerConstants& constants) const;

 private:
  int n_;
  BasisWord word_;
  std::vector<ExpansionTerm> terms_;
};

/// Expansions of every relevant word for n = 1..n_max.
class JacobiTable {
 public:
  JacobiTable(const GradedSpaceSpec& space, int n_max);

  int n_max() const { return n_max_; }
  const std::vector<JacobiExpansion>& at(int n) const { return by_arity_.at(static_cast<std::size_t>(n - 1)); }

  bool vanishes(const StructureConstants& constants, int n) const;
  /// Smallest failing n <= n_max, if any.
  std::optional<int> first_failure(const StructureConstants& constants, int n_max) const;
  bool vanishes(const IntegerConstants& constants, int n) const;
  std::optional<int> first_failure(const IntegerConstants& constants, int n_max) const;

 private:
  int n_max_;
  std::vector<std::vector<JacobiExpansion>> by_arity_;
};

}  // namespace linf
