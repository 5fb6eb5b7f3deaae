#include "linf/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace linf {

namespace {

constexpr int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

Scalar binom(int n, int k) { return Scalar(static_cast<unsigned long>(binomial(n, k))); }

std::string name(Family f, int index) { return std::string(1, family_letter(f)) + "_" + std::to_string(index); }

std::string range(Family f, int from, int to) {
  if (from > to) return {};
  if (from == to) return name(f, from);
  return name(f, from) + ".." + name(f, to);
}

std::optional<int> first_nonzero_b(const StructureConstants& k, int upto) {
  for (int p = 1; p <= upto; ++p) {
    if (!is_zero(k.b(p))) return p;
  }
  return std::nullopt;
}

StructureConstants padded(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const std::vector<Scalar>& c,
                          int n_max) {
  return StructureConstants(n_max, a, b, c);
}

int certified_bound(const GradedSpaceSpec& space, const StructureConstants& k, int n_max) {
  const auto fail = first_failure(SkewOperatorSet(space, k), n_max);
  return fail ? *fail - 1 : n_max;
}

}  // namespace

std::vector<ForcedValue> ClassificationResult::forced_of(Family f) const {
  std::vector<ForcedValue> out;
  std::copy_if(forced.begin(), forced.end(), std::back_inserter(out),
               [f](const ForcedValue& v) { return v.family == f; });
  return out;
}

// ---------------------------------------------------------------------------
// m = 0

Scalar caseA_forced_a(const StructureConstants& k, int first_b, int m) {
  const int s = m + first_b;
  Scalar numerator = 0;
  for (int p = 2; p <= m - 1; ++p) {
    Scalar bracket = binom(s - 2, p - 1) * k.a(p) - binom(s - 2, p - 2) * k.c(p);
    numerator += parity_sign(static_cast<long long>(p) * s) * k.b(s - p) * bracket;
  }
  const Scalar denominator = parity_sign(static_cast<long long>(m) * s + 1) * binom(s - 2, m - 1) * k.b(first_b);
  if (is_zero(denominator)) throw std::domain_error("forced-a recursion: vanishing denominator");
  return Scalar(m - 1) / first_b * k.c(m) + numerator / denominator;
}

ClassificationResult solve_forced_a_caseA(const std::vector<Scalar>& b, const std::vector<Scalar>& c, int n_max) {
  if (!c.empty() && !is_zero(c.front())) throw std::invalid_argument("c_1 must be 0 when m = 0");
  const auto space = GradedSpaceSpec::standard(0);
  StructureConstants k = padded({}, b, c, n_max);

  ClassificationResult result;
  const auto first = first_nonzero_b(k, n_max);
  if (!first) {
    result.branch = Branch::kAllBZero;
    result.free_parameters = {range(Family::kA, 1, n_max) + " arbitrary", range(Family::kC, 2, n_max) + " arbitrary"};
  } else {
    result.branch = Branch::kFirstNonzeroB;
    result.first_nonzero_b = *first;
    const int last = n_max - *first + 1;
    for (int m = 1; m <= last; ++m) {
      Scalar a = caseA_forced_a(k, *first, m);
      k.set(Family::kA, m, a);
      result.forced.push_back({Family::kA, m, std::move(a)});
    }
    if (*first < n_max) result.free_parameters.push_back(range(Family::kB, *first + 1, n_max) + " arbitrary");
    if (n_max >= 2) result.free_parameters.push_back(range(Family::kC, 2, n_max) + " arbitrary");
    if (last < n_max) {
      result.free_parameters.push_back(range(Family::kA, last + 1, n_max) + " unconstrained up to arity " +
                                       std::to_string(n_max));
    }
  }
  result.verified_up_to = certified_bound(space, k, n_max);
  result.solved = std::move(k);
  return result;
}

bool check_extension(const StructureConstants& base, int n, const Scalar& a_next, const Scalar& b_next,
                     const Scalar& c_next) {
  if (n < 1 || base.max_arity() < n) throw std::invalid_argument("check_extension: base must cover arity n");
  StructureConstants k(n + 1);
  for (Family f : kFamilies) {
    for (int i = 1; i <= n; ++i) k.set(f, i, base.get(f, i));
  }
  k.set(Family::kA, n + 1, a_next);
  k.set(Family::kB, n + 1, b_next);
  k.set(Family::kC, n + 1, c_next);
  const auto first = first_nonzero_b(k, n + 1);
  if (!first) return true;
  const int m = n - *first + 2;
  return k.a(m) == caseA_forced_a(k, *first, m);
}

bool check_L4_extension(const StructureConstants& base, const Scalar& a4, const Scalar& b4, const Scalar& c4) {
  return check_extension(base, 3, a4, b4, c4);
}

// ---------------------------------------------------------------------------
// m = -1

namespace {

template <class K>
bool caseB_predicate_impl(const K& k, int m) {
  int first = 0;
  for (int p = 1; p <= m && first == 0; ++p) {
    if (k.b(p) != 0) first = p;
  }
  if (first == 0) return true;
  for (int q = 1; q <= m - first + 1; ++q) {
    if (k.a(q) != 0 || k.c(q) != 0) return false;
  }
  return true;
}

}  // namespace

bool caseB_predicate(const StructureConstants& k, int m) { return caseB_predicate_impl(k, m); }

bool caseB_predicate(const IntegerConstants& k, int m) { return caseB_predicate_impl(k, m); }

ClassificationResult classify_caseB(const StructureConstants& constants, int m) {
  if (m < 1 || m > constants.max_arity()) throw TruncationError(m, constants.max_arity());
  const auto space = GradedSpaceSpec::standard(-1);
  ClassificationResult result;
  StructureConstants k = constants;
  const auto first = first_nonzero_b(k, m);
  if (!first) {
    result.branch = Branch::kAllBZero;
    if (m >= 2) result.free_parameters.push_back(range(Family::kA, 2, m) + " arbitrary");
    result.free_parameters.push_back(range(Family::kC, 1, m) + " arbitrary");
  } else {
    result.branch = Branch::kFirstNonzeroB;
    result.first_nonzero_b = *first;
    const int last = m - *first + 1;
    for (int q = 1; q <= last; ++q) {
      for (Family f : {Family::kA, Family::kC}) {
        if (f == Family::kA && q == 1) continue;
        if (!is_zero(k.get(f, q))) result.input_consistent = false;
        k.set(f, q, Scalar(0));
        result.forced.push_back({f, q, Scalar(0)});
      }
    }
    if (*first < m) result.free_parameters.push_back(range(Family::kB, *first + 1, m) + " arbitrary");
    if (last < m) {
      result.free_parameters.push_back(range(Family::kA, std::max(2, last + 1), m) + ", " +
                                       range(Family::kC, last + 1, m) + " unconstrained up to arity " +
                                       std::to_string(m));
    }
  }
  result.verified_up_to = certified_bound(space, k, m);
  result.solved = std::move(k);
  return result;
}

// ---------------------------------------------------------------------------
// Generic affine solve

ClassificationResult solve_jacobi_constraints(const GradedSpaceSpec& space, const StructureConstants& constants,
                                              const std::vector<Family>& unknowns, int n_max) {
  if (n_max < 1 || n_max > constants.max_arity()) throw TruncationError(n_max, constants.max_arity());
  const SlotLayout layout(space);
  struct Var {
    Family family;
    int index;
  };
  std::vector<Var> vars;
  for (Family f : unknowns) {
    for (int i = 1; i <= n_max; ++i) {
      if (layout.has_slot(f, i)) vars.push_back({f, i});
    }
  }

  StructureConstants base = constants;
  std::vector<Scalar> input_values;
  for (const auto& v : vars) {
    input_values.push_back(base.get(v.family, v.index));
    base.set(v.family, v.index, Scalar(0));
  }

  ClassificationResult result;
  const auto first = first_nonzero_b(constants, n_max);
  result.branch = first ? Branch::kFirstNonzeroB : Branch::kAllBZero;
  result.first_nonzero_b = first.value_or(0);

  LinearSystem system(static_cast<int>(vars.size()));
  const SkewOperatorSet base_ops(space, base);
  for (int n = 1; n <= n_max && !result.inconsistent_at; ++n) {
    for (const auto& word : relevant_words(space, n)) {
      const VectorValue offset = jacobi_bruteforce(base_ops, n, word);
      std::array<std::vector<Scalar>, kGeneratorCount> rows;
      for (auto& r : rows) r.assign(vars.size(), Scalar(0));
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (vars[j].index > n) continue;
        StructureConstants unit = base;
        unit.set(vars[j].family, vars[j].index, Scalar(1));
        const VectorValue value = jacobi_bruteforce(SkewOperatorSet(space, unit), n, word);
        for (int g = 0; g < kGeneratorCount; ++g) rows[g][j] = value.coeff[g] - offset.coeff[g];
      }
      for (int g = 0; g < kGeneratorCount; ++g) {
        if (!system.add_equation(rows[g], -offset.coeff[g])) {
          result.inconsistent_at = n;
          break;
        }
      }
      if (result.inconsistent_at) break;
    }
  }

  if (result.inconsistent_at) {
    result.input_consistent = false;
    result.verified_up_to = *result.inconsistent_at - 1;
    result.solved = constants;
    return result;
  }

  const auto solution = system.solve(input_values);
  StructureConstants solved = base;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    solved.set(vars[j].family, vars[j].index, solution[j]);
    if (system.determined(static_cast<int>(j))) {
      result.forced.push_back({vars[j].family, vars[j].index, solution[j]});
      if (solution[j] != input_values[j]) result.input_consistent = false;
    } else {
      result.free_parameters.push_back(name(vars[j].family, vars[j].index) + " free");
    }
  }
  if (result.input_consistent) result.input_consistent = solved == constants;
  result.verified_up_to = certified_bound(space, solved, n_max);
  result.solved = std::move(solved);
  return result;
}

// ---------------------------------------------------------------------------
// m = 1

ClassificationResult classify_caseC(const StructureConstants& constants, int n_max) {
  const auto space = GradedSpaceSpec::standard(1);
  ClassificationResult result = solve_jacobi_constraints(space, constants, {Family::kA}, n_max);
  if (result.branch == Branch::kAllBZero || result.inconsistent_at) return result;

  // The printed recursion, taken literally: a_m appears on both sides, so it
  // is evaluated at the solver's a_m and compared with it.
  const int k = result.first_nonzero_b;
  const auto& sol = result.solved;
  for (int m = 2; m <= n_max - k + 1; ++m) {
    PrintedFormulaCheck check;
    check.index = m;
    check.solver_value = sol.a(m);
    Scalar numerator = 0;
    for (int q = k + 1; q <= m + k - 2; ++q) {
      numerator -= parity_sign(static_cast<long long>(m + k - 1) * (q - k)) * binom(m + k - 1, q - 1) * sol.a(m) *
                   sol.b(q);
    }
    const Scalar denominator = binom(m - k + 1, k - 1) * sol.b(k);
    if (is_zero(denominator)) {
      check.status = PrintedFormulaCheck::Status::kUndefined;
    } else {
      check.printed_value = numerator / denominator;
      check.status = *check.printed_value == check.solver_value ? PrintedFormulaCheck::Status::kAgree
                                                                : PrintedFormulaCheck::Status::kDisagree;
    }
    result.printed_formula.push_back(std::move(check));
  }
  return result;
}

// ---------------------------------------------------------------------------
// d.g. Lie

DgLieResult dg_lie_check(const SkewOperatorSet& ops) {
  DgLieResult result;
  for (auto& word : relevant_words(ops, 3)) {
    VectorValue value = compose_jacobi_term(ops, 2, word);
    if (!value.is_zero() && !result.witness) result.witness.emplace(word, value);
    result.values.emplace_back(std::move(word), std::move(value));
  }
  result.is_dg_lie = !result.witness.has_value();
  return result;
}

DgLieTheoremCheck dg_lie_theorems(CaseTag tag, const StructureConstants& constants) {
  int m = 0;
  switch (tag) {
    case CaseTag::kCaseB: m = -1; break;
    case CaseTag::kCaseC: m = 1; break;
    default: throw std::invalid_argument("dg_lie_theorems applies to caseB and caseC only");
  }
  const SkewOperatorSet ops(GradedSpaceSpec::standard(m), constants);
  if (first_failure(ops, 3)) throw std::invalid_argument("dg_lie_theorems requires an L_3 structure");
  DgLieTheoremCheck check;
  check.theorem_verdict = true;
  check.computed = dg_lie_check(ops).is_dg_lie;
  return check;
}

// ---------------------------------------------------------------------------
// Slots

int SlotTable::max_nonzero_arity() const {
  int best = 0;
  for (const auto& [n, words] : per_arity) {
    if (!words.empty()) best = std::max(best, n);
  }
  return best;
}

SlotTable slot_table(int m, int n_max) {
  if (n_max < 1) throw std::invalid_argument("slot_table: n_max must be positive");
  const auto space = GradedSpaceSpec::standard(m);
  SlotTable table;
  table.bottom_degree = m;
  for (int n = 1; n <= n_max; ++n) {
    auto& words = table.per_arity[n];
    for (const auto& c : admissible_counts(m, n)) {
      std::vector<GeneratorIndex> gens;
      for (int g = 0; g < kGeneratorCount; ++g) gens.insert(gens.end(), static_cast<std::size_t>(c[g]), g);
      words.push_back(BasisWord::from_generators(space, gens));
    }
  }
  return table;
}

}  // namespace linf
