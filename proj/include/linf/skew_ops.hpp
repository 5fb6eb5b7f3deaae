#pragma once

// Skew operator families l_n on V_m + V_{m+1} + V_{m+2}, parametrized by
// three rational sequences a_n, b_n, c_n.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linf/graded_core.hpp"
#include "linf/scalar.hpp"

namespace linf {

/// Raised when an arity beyond the stored constants is queried.
class TruncationError : public std::out_of_range {
 public:
  TruncationError(int arity, int max_arity);
  int arity() const { return arity_; }

 private:
  int arity_;
};

enum class CaseTag {
  kCaseA,       // m = 0:  v, w, x
  kCaseB,       // m = -1: u, v, w
  kCaseC,       // m = 1:  w, x, y
  kDegenerate,  // every other m
};

CaseTag case_for_bottom_degree(int m);
std::string to_string(CaseTag tag);

enum class Family { kA = 0, kB = 1, kC = 2 };
inline constexpr std::array<Family, 3> kFamilies = {Family::kA, Family::kB, Family::kC};
char family_letter(Family f);

class StructureConstants {
 public:
  explicit StructureConstants(int max_arity);
  /// Sequences are 1-indexed in meaning: a[0] is a_1. Shorter sequences are
  /// padded with zeros; longer ones throw std::invalid_argument.
  StructureConstants(int max_arity, std::vector<Scalar> a, std::vector<Scalar> b, std::vector<Scalar> c);

  int max_arity() const { return max_arity_; }

  /// Throws TruncationError for n > max_arity, std::invalid_argument for n < 1.
  const Scalar& get(Family f, int n) const;
  void set(Family f, int n, Scalar value);

  const Scalar& a(int n) const { return get(Family::kA, n); }
  const Scalar& b(int n) const { return get(Family::kB, n); }
  const Scalar& c(int n) const { return get(Family::kC, n); }

  const std::vector<Scalar>& sequence(Family f) const { return seq_[static_cast<std::size_t>(f)]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  void check_index(int n) const;

  int max_arity_;
  std::array<std::vector<Scalar>, 3> seq_;
};

/// Small integer constants for the exhaustive {-1, 0, 1} sweeps. The sweep
/// kernels multiply pairs of these by binomial weights, which is exact far
/// below the int64 range.
class IntegerConstants {
 public:
  explicit IntegerConstants(int max_arity);
  int max_arity() const { return max_arity_; }
  std::int64_t get(Family f, int n) const {
    check_index(n);
    return seq_[static_cast<std::size_t>(f)][static_cast<std::size_t>(n - 1)];
  }
  void set(Family f, int n, std::int64_t value) {
    check_index(n);
    seq_[static_cast<std::size_t>(f)][static_cast<std::size_t>(n - 1)] = value;
  }
  std::int64_t a(int n) const { return get(Family::kA, n); }
  std::int64_t b(int n) const { return get(Family::kB, n); }
  std::int64_t c(int n) const { return get(Family::kC, n); }
  StructureConstants to_rational() const;

 private:
  void check_index(int n) const {
    if (n < 1 || n > max_arity_) throw TruncationError(n, max_arity_);
  }
  int max_arity_;
  std::array<std::vector<std::int64_t>, 3> seq_;
};

/// An operator slot: l_n on the canonical word with the given generator
/// counts is the constant (family)_n times the output generator.
struct Slot {
  Family family = Family::kA;
  int arity = 0;
  std::array<int, kGeneratorCount> counts{};
  GeneratorIndex output = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Degree-admissible canonical words of length n for V_m + V_{m+1} + V_{m+2}:
/// no even-degree generator repeats and the output degree D + 2 - n is one
/// of m, m+1, m+2. Returned as generator counts in lexicographic word order.
std::vector<std::array<int, kGeneratorCount>> admissible_counts(int m, int n);

/// The constants-free part of an operator family: which canonical words carry
/// which constant. Tabulated for m in {-1, 0, 1}; for other m the admissible
/// words of each arity take a, b, c in order.
class SlotLayout {
 public:
  explicit SlotLayout(GradedSpaceSpec space);

  const GradedSpaceSpec& space() const { return space_; }
  CaseTag case_tag() const { return tag_; }

  std::vector<Slot> slots(int arity) const;
  std::optional<Slot> find(const std::array<int, kGeneratorCount>& counts) const;
  bool has_slot(Family f, int arity) const;

 private:
  GradedSpaceSpec space_;
  CaseTag tag_;
};

/// An element of V in the basis (one coefficient per generator).
struct VectorValue {
  std::array<Scalar, kGeneratorCount> coeff;

  bool is_zero() const;
  VectorValue& operator+=(const VectorValue& rhs);
  VectorValue& operator*=(const Scalar& s);
  friend bool operator==(const VectorValue&, const VectorValue&) = default;

  static VectorValue basis(GeneratorIndex g, Scalar s);
  /// E.g. "2x", "-u", "(1/2)w + x", "0".
  std::string to_string(const GradedSpaceSpec& space) const;
};

/// A linear combination of basis words of a common length, keyed by the
/// generator sequence.
class TensorValue {
 public:
  void add(const std::vector<GeneratorIndex>& word, const Scalar& coeff);
  const std::map<std::vector<GeneratorIndex>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int word_length() const;
  std::string to_string(const GradedSpaceSpec& space) const;
  friend bool operator==(const TensorValue&, const TensorValue&) = default;

 private:
  std::map<std::vector<GeneratorIndex>, Scalar> terms_;
};

class SkewOperatorSet {
 public:
  /// Validates that every nonzero constant has a slot in the layout (e.g.
  /// c_1 = 0 for m = 0, a_1 = 0 for m = -1, no c at all for m = 1).
  /// Throws std::invalid_argument otherwise.
  SkewOperatorSet(GradedSpaceSpec space, StructureConstants constants);

  const GradedSpaceSpec& space() const { return layout_.space(); }
  const SlotLayout& layout() const { return layout_; }
  const StructureConstants& constants() const { return constants_; }
  CaseTag case_tag() const { return layout_.case_tag(); }
  int max_arity() const { return constants_.max_arity(); }

  BasisWord word(std::initializer_list<GeneratorIndex> gens) const {
    return BasisWord::from_generators(space(), gens);
  }
  BasisWord word(std::string_view text) const { return BasisWord::parse(space(), text); }

 private:
  SlotLayout layout_;
  StructureConstants constants_;
};

/// l_n(word). Sorts the word by degree accumulating the Koszul sign and
/// looks the canonical word up in the slot layout.
VectorValue evaluate(const SkewOperatorSet& ops, int n, const BasisWord& word);

/// The extension of l_p to words of length n >= p: the sum over (p, n-p)
/// unshuffles of chi(sigma) l_p(first p letters) (x) remaining letters.
TensorValue extend_apply(const SkewOperatorSet& ops, int p, const BasisWord& word);

/// l_{n-p+1} o l_p (word), without the (-1)^{p(n-p)} prefactor.
VectorValue compose_jacobi_term(const SkewOperatorSet& ops, int p, const BasisWord& word);

}  // namespace linf
