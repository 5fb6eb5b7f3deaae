#include "linf/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

namespace linf {

namespace {

constexpr int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

VectorValue jacobi_bruteforce(const SkewOperatorSet& ops, int n, const BasisWord& word) {
  if (word.size() != n || n < 1) throw std::invalid_argument("jacobi_bruteforce: word length must equal n");
  if (n > ops.max_arity()) throw TruncationError(n, ops.max_arity());
  VectorValue total;
  for (int p = 1; p <= n; ++p) {
    VectorValue term = compose_jacobi_term(ops, p, word);
    if (parity_sign(static_cast<long long>(p) * (n - p)) < 0) term *= Scalar(-1);
    total += term;
  }
  return total;
}

std::vector<BasisWord> relevant_words(const GradedSpaceSpec& space, int n) {
  std::vector<BasisWord> out;
  if (n < 1) throw std::invalid_argument("relevant_words: n must be positive");
  const int m = space.bottom_degree();
  // admissible_counts filters on D + 2 - n; J_n has degree 3 - n.
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) {
      const std::array<int, kGeneratorCount> c = {i, j, n - i - j};
      bool repeated_even = false;
      int total = 0;
      for (int g = 0; g < kGeneratorCount; ++g) {
        const Degree d = space.degree(g);
        if (d.is_even() && c[g] > 1) repeated_even = true;
        total += c[g] * d.value;
      }
      const int out_degree = total + 3 - n;
      if (repeated_even || out_degree < m || out_degree > m + 2) continue;
      std::vector<GeneratorIndex> gens;
      for (int g = 0; g < kGeneratorCount; ++g) gens.insert(gens.end(), static_cast<std::size_t>(c[g]), g);
      out.push_back(BasisWord::from_generators(space, gens));
    }
  }
  return out;
}

VectorValue jacobi_closed_form(const SkewOperatorSet& ops, int n, const BasisWord& word) {
  const auto relevant = relevant_words(ops, n);
  if (std::find(relevant.begin(), relevant.end(), word) == relevant.end()) {
    throw std::invalid_argument("jacobi_closed_form: " + word.to_string(ops.space()) + " is not a relevant word");
  }
  if (n > ops.max_arity()) throw TruncationError(n, ops.max_arity());
  const auto& k = ops.constants();
  const auto counts = word.counts();
  switch (ops.case_tag()) {
    case CaseTag::kCaseA:
      return VectorValue::basis(2, closed_form::vw_recombined(k, n));
    case CaseTag::kCaseB:
      if (counts[0] == 2) return VectorValue::basis(0, closed_form::uuw(k, n));
      if (counts[1] == 1) return VectorValue::basis(1, closed_form::uvw(k, n));
      return VectorValue::basis(2, closed_form::uw(k, n));
    case CaseTag::kCaseC:
    case CaseTag::kDegenerate:
      break;
  }
  return jacobi_bruteforce(ops, n, word);
}

JacobiReport jacobi_report(const SkewOperatorSet& ops, int n) {
  JacobiReport report;
  report.n = n;
  for (auto& word : relevant_words(ops, n)) {
    VectorValue value = jacobi_bruteforce(ops, n, word);
    if (!value.is_zero()) report.passed = false;
    report.per_word.emplace_back(std::move(word), std::move(value));
  }
  return report;
}

std::vector<JacobiReport> certify_Ln(const SkewOperatorSet& ops, int n_max) {
  if (n_max > ops.max_arity()) throw TruncationError(n_max, ops.max_arity());
  std::vector<JacobiReport> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(jacobi_report(ops, n));
  return out;
}

bool all_passed(const std::vector<JacobiReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const JacobiReport& r) { return r.passed; });
}

std::optional<int> first_failure(const SkewOperatorSet& ops, int n_max) {
  if (n_max > ops.max_arity()) throw TruncationError(n_max, ops.max_arity());
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& word : relevant_words(ops, n)) {
      if (!jacobi_bruteforce(ops, n, word).is_zero()) return n;
    }
  }
  return std::nullopt;
}

}  // namespace linf
