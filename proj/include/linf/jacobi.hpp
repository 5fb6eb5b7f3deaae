#pragma once

// The generalized Jacobi expression
//   J_n = sum_{p=1}^{n} (-1)^{p(n-p)} l_{n-p+1} o l_p
// evaluated by full unshuffle expansion, plus the closed forms known for
// m = 0 and m = -1.

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "linf/skew_ops.hpp"

namespace linf {

/// J_n(word) by enumerating every (p, n-p) unshuffle. Ground truth.
VectorValue jacobi_bruteforce(const SkewOperatorSet& ops, int n, const BasisWord& word);

/// Canonical words of length n on which J_n can be nonzero: no repeated
/// even generator and output degree D + 3 - n inside the space. Sorted
/// lexicographically by generator sequence.
std::vector<BasisWord> relevant_words(const GradedSpaceSpec& space, int n);
inline std::vector<BasisWord> relevant_words(const SkewOperatorSet& ops, int n) {
  return relevant_words(ops.space(), n);
}

/// J_n(word) from the closed-form sums. For m = 1 and degenerate gradings no
/// closed form is used and this routes to jacobi_bruteforce. Throws
/// std::invalid_argument if `word` is not one of relevant_words(ops, n).
VectorValue jacobi_closed_form(const SkewOperatorSet& ops, int n, const BasisWord& word);

namespace closed_form {

// Templated over the constants type so that the exhaustive sweeps can run on
// IntegerConstants; StructureConstants gives exact rationals.
template <class K>
using value_t = std::remove_cvref_t<decltype(std::declval<const K&>().a(1))>;

namespace detail {
constexpr int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }
template <class T>
T binom(int n, int k) {
  return T(static_cast<long>(binomial(n, k)));
}
}  // namespace detail

// m = 0: coefficient of x in J_n(v w^{n-1}).
template <class K>
value_t<K> vw_recombined(const K& k, int n) {
  using T = value_t<K>;
  T sum = 0;
  for (int p = 1; p <= n; ++p) {
    if (k.b(p) == 0) continue;
    T bracket = -detail::binom<T>(n - 1, n - p) * k.a(n - p + 1) + detail::binom<T>(n - 1, p) * k.c(n - p + 1);
    sum += detail::parity_sign(static_cast<long long>(p) * (n - p) + n) * k.b(p) * bracket;
  }
  return sum;
}

// Same value, as the two separate sums before they are merged.
template <class K>
value_t<K> vw_split(const K& k, int n) {
  using T = value_t<K>;
  T first = 0;
  T second = 0;
  for (int p = 1; p <= n; ++p) {
    const int s = detail::parity_sign(static_cast<long long>(p) * (n - p));
    first += s * detail::binom<T>(n - 1, p - 1) * k.a(p) * k.b(n - p + 1);
    second += s * detail::parity_sign(n) * detail::binom<T>(n - 1, p) * k.b(p) * k.c(n - p + 1);
  }
  return first + second;
}

// m = -1: coefficient of w in J_n(u w^{n-1}).
template <class K>
value_t<K> uw(const K& k, int n) {
  using T = value_t<K>;
  T sum = 0;
  for (int p = 1; p <= n; ++p) {
    sum += detail::parity_sign(static_cast<long long>(p) * (n - p)) * detail::binom<T>(n - 1, p - 1) * k.b(p) *
           k.c(n - p + 1);
  }
  return sum;
}

// m = -1: coefficient of u in J_n(u u w^{n-2}).
template <class K>
value_t<K> uuw(const K& k, int n) {
  using T = value_t<K>;
  T sum = 0;
  for (int p = 1; p <= n - 1; ++p) {
    sum += detail::parity_sign(static_cast<long long>(p) * (n - p)) * T(-2) * detail::binom<T>(n - 2, p - 1) *
           k.b(p) * k.a(n - p + 1);
  }
  return sum;
}

// m = -1: coefficient of v in J_n(u v w^{n-2}).
template <class K>
value_t<K> uvw(const K& k, int n) {
  using T = value_t<K>;
  T sum = 0;
  for (int p = 1; p <= n; ++p) {
    T bracket = detail::binom<T>(n - 2, p - 2) * k.a(p) - detail::binom<T>(n - 2, p - 1) * k.c(p);
    sum += detail::parity_sign(static_cast<long long>(p) * (n - p)) * k.b(n - p + 1) * bracket;
  }
  return sum;
}

}  // namespace closed_form

struct JacobiReport {
  int n = 0;
  std::vector<std::pair<BasisWord, VectorValue>> per_word;
  bool passed = true;
};

JacobiReport jacobi_report(const SkewOperatorSet& ops, int n);

/// Reports for n = 1..n_max. Throws TruncationError if n_max > max_arity.
std::vector<JacobiReport> certify_Ln(const SkewOperatorSet& ops, int n_max);

bool all_passed(const std::vector<JacobiReport>& reports);

/// Smallest n <= n_max with J_n != 0, if any. Stops at the first failure.
std::optional<int> first_failure(const SkewOperatorSet& ops, int n_max);

}  // namespace linf
