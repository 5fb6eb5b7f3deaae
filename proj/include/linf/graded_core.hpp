#pragma once

// Degrees, permutations, Koszul signs and unshuffles for a graded space
// V_m + V_{m+1} + V_{m+2} with one generator per degree.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linf {

struct Degree {
  int value = 0;

  constexpr bool is_even() const { return value % 2 == 0; }
  constexpr bool is_odd() const { return !is_even(); }
  friend constexpr auto operator<=>(Degree, Degree) = default;
};

/// Index of a generator inside its space: 0 for V_m, 1 for V_{m+1}, 2 for V_{m+2}.
/// Ascending index is ascending degree.
using GeneratorIndex = int;
inline constexpr int kGeneratorCount = 3;

class GradedSpaceSpec {
 public:
  GradedSpaceSpec(int bottom_degree, std::array<std::string, kGeneratorCount> names);

  /// Conventional names: u,v,w for m = -1; v,w,x for m = 0; w,x,y for m = 1;
  /// e0,e1,e2 otherwise.
  static GradedSpaceSpec standard(int bottom_degree);

  int bottom_degree() const { return bottom_degree_; }
  Degree degree(GeneratorIndex g) const;
  const std::string& name(GeneratorIndex g) const;
  /// Throws std::invalid_argument for an unknown name.
  GeneratorIndex index_of(std::string_view name) const;

  friend bool operator==(const GradedSpaceSpec&, const GradedSpaceSpec&) = default;

 private:
  int bottom_degree_;
  std::array<std::string, kGeneratorCount> names_;
};

/// A permutation in one-line notation. The public interface is 1-indexed:
/// `at(i)` is sigma(i) for i in 1..n.
class Permutation {
 public:
  /// `one_line` must be a bijection of {1..n}; throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int at(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }
  std::vector<int> one_line() const;
  int inversions() const;

  /// Zero-based images, for internal loops.
  std::span<const int> zero_based() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> images_;
};

struct Letter {
  GeneratorIndex generator = 0;
  Degree degree;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// An ordered tensor word x_1 (x) ... (x) x_n of basis generators.
class BasisWord {
 public:
  BasisWord() = default;
  explicit BasisWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static BasisWord from_generators(const GradedSpaceSpec& space, std::span<const GeneratorIndex> gens);
  static BasisWord from_generators(const GradedSpaceSpec& space, std::initializer_list<GeneratorIndex> gens);
  /// Parses names separated by spaces, commas or the tensor sign, e.g. "v w w".
  static BasisWord parse(const GradedSpaceSpec& space, std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<GeneratorIndex> generators() const;
  int total_degree() const;
  /// Number of occurrences of each generator.
  std::array<int, kGeneratorCount> counts() const;
  /// True when every letter's degree matches its generator in `space`.
  bool belongs_to(const GradedSpaceSpec& space) const;

  std::string to_string(const GradedSpaceSpec& space) const;

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend auto operator<=>(const BasisWord& lhs, const BasisWord& rhs) {
    return lhs.generators() <=> rhs.generators();
  }

 private:
  std::vector<Letter> letters_;
};

/// The word x_{sigma(1)} (x) ... (x) x_{sigma(n)}.
BasisWord permute(const Permutation& sigma, const BasisWord& word);

/// chi(sigma) = (-1)^sigma * epsilon(sigma) for sigma acting on `word`:
/// every inverted pair of letters contributes -(-1)^{|x||y|}.
/// Throws std::invalid_argument on a length mismatch.
int koszul_sign(const Permutation& sigma, const BasisWord& word);

/// Koszul sign of the stable sort that puts `word` in ascending degree order.
/// Equal generators keep their relative order.
int sorting_sign(const BasisWord& word);

/// All (p, q) unshuffles of S_{p+q}, ordered lexicographically by first block.
/// Requires p, q >= 0 and p + q >= 1.
std::vector<Permutation> unshuffles(int p, int q);

/// Binomial coefficient; 0 when k < 0 or k > n. Throws std::overflow_error
/// if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace linf
