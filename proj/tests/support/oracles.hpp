#pragma once
// Test-only reference implementations. Each one computes its answer by a
// different route from the library so that agreement means something.
#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Pascal's rule, row by row.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Koszul sign of reaching x_{sigma(1)} .. x_{sigma(n)} from x_1 .. x_n by
// adjacent transpositions, each contributing -(-1)^{|a||b|}.
// `one_line` is 1-indexed, `degrees` the letters' degrees in original order.
inline int adjacent_swap_sign(const std::vector<int>& one_line, const std::vector<int>& degrees) {
  std::vector<int> current(degrees.size());
  std::iota(current.begin(), current.end(), 0);  // current arrangement, as original positions
  int sign = 1;
  for (std::size_t target = 0; target < one_line.size(); ++target) {
    const int want = one_line[target] - 1;
    auto pos = static_cast<std::size_t>(std::find(current.begin(), current.end(), want) - current.begin());
    while (pos > target) {
      const int a = degrees[static_cast<std::size_t>(current[pos - 1])];
      const int b = degrees[static_cast<std::size_t>(current[pos])];
      sign *= ((a * b) % 2 == 0) ? -1 : 1;
      std::swap(current[pos - 1], current[pos]);
      --pos;
    }
  }
  return sign;
}

// Every permutation of S_{p+q} filtered to those increasing on both blocks,
// in the order std::next_permutation produces them.
inline std::vector<std::vector<int>> unshuffles_by_filter(int p, int q) {
  std::vector<int> v(static_cast<std::size_t>(p + q));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (std::is_sorted(v.begin(), v.begin() + p) && std::is_sorted(v.begin() + p, v.end())) out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Canonical words of length n on generators of degrees m, m+1, m+2 that
// carry no repeated even letter and whose J_n value has degree in range:
// every word of 3^n, sorted and deduplicated, then filtered.
inline std::vector<std::vector<int>> relevant_words_by_filter(int m, int n) {
  std::set<std::vector<int>> seen;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      word[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
      c /= 3;
    }
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    seen.insert(sorted);
  }
  std::vector<std::vector<int>> out;
  for (const auto& w : seen) {
    int degree = 0;
    bool repeated_even = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int d = m + w[i];
      degree += d;
      if (d % 2 == 0 && i > 0 && w[i - 1] == w[i]) repeated_even = true;
    }
    const int out_degree = degree + 3 - n;
    if (!repeated_even && out_degree >= m && out_degree <= m + 2) out.push_back(w);
  }
  return out;
}

}  // namespace oracle
