#pragma once

// Classification of L_n structures on the three-generator spaces: the forced
// a_m recursion for m = 0, the b-dichotomy for m = -1, exact linear solving
// for m = 1, differential graded Lie checks and slot tables.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linf/jacobi.hpp"
#include "linf/linear_solver.hpp"

namespace linf {

enum class Branch { kAllBZero, kFirstNonzeroB };

struct ForcedValue {
  Family family = Family::kA;
  int index = 0;
  Scalar value;
  friend bool operator==(const ForcedValue&, const ForcedValue&) = default;
};

/// One index of the printed m = 1 recursion, evaluated at the solver's values.
struct PrintedFormulaCheck {
  enum class Status { kAgree, kDisagree, kUndefined };
  int index = 0;
  Scalar solver_value;
  std::optional<Scalar> printed_value;  // empty when the printed denominator vanishes
  Status status = Status::kUndefined;
};

struct ClassificationResult {
  Branch branch = Branch::kAllBZero;
  int first_nonzero_b = 0;  // k when branch is kFirstNonzeroB
  std::vector<ForcedValue> forced;
  std::vector<std::string> free_parameters;
  /// Brute-force certification bound reached by `solved`.
  int verified_up_to = 0;
  /// Whether the input constants already satisfy every forced value.
  bool input_consistent = true;
  /// Smallest n whose Jacobi constraints admit no solution.
  std::optional<int> inconsistent_at;
  /// The input with forced values substituted.
  StructureConstants solved{1};
  std::vector<PrintedFormulaCheck> printed_formula;

  std::vector<ForcedValue> forced_of(Family f) const;
};

/// m = 0. b and c are 1-indexed in meaning (b[0] = b_1); c_1 must be 0.
/// If b_p = 0 for every p <= n_max all a, c are free. Otherwise, with k the
/// first index of a nonzero b, a_1 .. a_{n_max-k+1} are forced by the
/// recursion and the result is certified by brute force.
ClassificationResult solve_forced_a_caseA(const std::vector<Scalar>& b, const std::vector<Scalar>& c, int n_max);

/// The forced value of a_m given k (first nonzero b) and a_2 .. a_{m-1}.
Scalar caseA_forced_a(const StructureConstants& constants, int k, int m);

/// m = 0: given constants that define an L_n structure, whether adding the
/// arity n+1 constants keeps it L_{n+1}.
bool check_extension(const StructureConstants& base, int n, const Scalar& a_next, const Scalar& b_next,
                     const Scalar& c_next);
bool check_L4_extension(const StructureConstants& base, const Scalar& a4, const Scalar& b4, const Scalar& c4);

/// m = -1. L_m iff b_p = 0 for p <= m, or the first nonzero b_k forces
/// a_q = c_q = 0 for q <= m - k + 1.
ClassificationResult classify_caseB(const StructureConstants& constants, int m);
bool caseB_predicate(const StructureConstants& constants, int m);
bool caseB_predicate(const IntegerConstants& constants, int m);

/// m = 1. Solves J_n = 0 for n <= n_max in the unknown a (b fixed) exactly
/// and compares the solution with the printed recursion.
ClassificationResult classify_caseC(const StructureConstants& constants, int n_max);

/// Generic affine solve: treats the listed families as unknowns, builds the
/// constraints J_n = 0 (n <= n_max) from brute-force evaluations at unit
/// vectors and solves them in order of increasing n. Free unknowns keep
/// their input values in `solved`.
ClassificationResult solve_jacobi_constraints(const GradedSpaceSpec& space, const StructureConstants& constants,
                                              const std::vector<Family>& unknowns, int n_max);

struct DgLieResult {
  bool is_dg_lie = true;
  std::vector<std::pair<BasisWord, VectorValue>> values;
  std::optional<std::pair<BasisWord, VectorValue>> witness;
};

/// Sum over (2,1) unshuffles of chi * l_2(l_2(..) (x) ..) on each relevant
/// 3-letter word.
DgLieResult dg_lie_check(const SkewOperatorSet& ops);

struct DgLieTheoremCheck {
  bool theorem_verdict = true;
  bool computed = true;
  bool consistent() const { return theorem_verdict == computed; }
};

/// For m = -1 and m = 1 every L_3 structure is a d.g. Lie algebra. Throws
/// std::invalid_argument for other gradings or when the constants are not L_3.
DgLieTheoremCheck dg_lie_theorems(CaseTag tag, const StructureConstants& constants);

struct SlotTable {
  int bottom_degree = 0;
  std::map<int, std::vector<BasisWord>> per_arity;

  /// Largest arity with an admissible slot (0 if none).
  int max_nonzero_arity() const;
};

SlotTable slot_table(int m, int n_max);

}  // namespace linf
