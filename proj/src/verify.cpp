#include "linf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "linf/classify.hpp"
#include "linf/expansion.hpp"
#include "linf/jacobi.hpp"
#include "linf/sweep.hpp"

namespace linf {

namespace {

struct Bounds {
  int sign_max_len;
  int sign_samples;
  int multiplicative_exhaustive_len;
  int multiplicative_random_len;
  int multiplicative_samples;
  int unshuffle_total;
  int degree_max_n;
  int skew_exhaustive_n;
  int composite_max_n;
  int composite_samples;
  int reduction_max_n;
  int closed_exhaustive_n;
  int closed_random_max_n;
  int closed_random_samples;
  int expansion_max_n;
  int expansion_samples;
  int caseA_samples;
  int caseA_n_max;
  int caseA_cross_checks;
  int first_order_samples;
  int first_order_n_max;
  int caseB_dichotomy_n;
  int caseC_samples;
  int caseC_n_max;
  int degenerate_max_n;
};

constexpr Bounds kFullBounds{6, 2000, 4, 6, 2000, 8, 8, 5, 6, 300, 6, 5, 8, 200, 8, 5,
                             100, 10, 5, 20, 8, 5, 100, 8, 8};
constexpr Bounds kQuickBounds{5, 100, 3, 5, 100, 6, 5, 4, 5, 30, 4, 3, 6, 10, 5, 2,
                              5, 6, 1, 3, 5, 3, 5, 5, 5};

const std::vector<int> kAllGradings = {-5, -4, -3, -2, -1, 0, 1, 2, 3};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Scalar rational() {
    Scalar q(uniform(-9, 9), uniform(1, 9));
    q.canonicalize();
    return q;
  }
  Scalar nonzero_rational() {
    Scalar q;
    do q = rational();
    while (is_zero(q));
    return q;
  }
  Permutation permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), gen_);
    return Permutation(std::move(v));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// First failure wins; later ones are counted.
class Check {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string failure_detail() const {
    return first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "");
  }

 private:
  std::string first_;
  long failures_ = 0;
};

using SuiteFn = std::function<std::string(Check&, const Bounds&, Rng&)>;

std::string str(const VectorValue& v, const GradedSpaceSpec& s) { return v.to_string(s); }

std::vector<BasisWord> all_words(const GradedSpaceSpec& space, int n) {
  std::vector<BasisWord> out;
  std::vector<GeneratorIndex> gens(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(BasisWord::from_generators(space, gens));
    int i = n - 1;
    while (i >= 0 && gens[static_cast<std::size_t>(i)] == kGeneratorCount - 1) gens[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
    ++gens[static_cast<std::size_t>(i)];
  }
}

std::vector<BasisWord> canonical_words(const GradedSpaceSpec& space, int n) {
  std::vector<BasisWord> out;
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) {
      std::vector<GeneratorIndex> gens;
      gens.insert(gens.end(), static_cast<std::size_t>(i), 0);
      gens.insert(gens.end(), static_cast<std::size_t>(j), 1);
      gens.insert(gens.end(), static_cast<std::size_t>(n - i - j), 2);
      out.push_back(BasisWord::from_generators(space, gens));
    }
  }
  return out;
}

BasisWord random_word(const GradedSpaceSpec& space, int n, Rng& rng) {
  std::vector<GeneratorIndex> gens;
  for (int i = 0; i < n; ++i) gens.push_back(rng.uniform(0, kGeneratorCount - 1));
  return BasisWord::from_generators(space, gens);
}

// Random rationals on every slot of arity <= max_arity.
StructureConstants random_constants(const SlotLayout& layout, int max_arity, Rng& rng) {
  StructureConstants k(max_arity);
  for (const auto& p : slot_positions(layout, max_arity)) k.set(p.family, p.arity, rng.rational());
  return k;
}

std::vector<GeneratorIndex> gens_of_parity(const GradedSpaceSpec& space, bool even) {
  std::vector<GeneratorIndex> out;
  for (int g = 0; g < kGeneratorCount; ++g) {
    if (space.degree(g).is_even() == even) out.push_back(g);
  }
  return out;
}

GeneratorIndex pick(const std::vector<GeneratorIndex>& from, Rng& rng) {
  return from[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(from.size()) - 1))];
}

// One-line permutation (1-indexed) that moves the block [s, s+j) past the
// following k positions of a word of length n.
Permutation block_move(int n, int s, int j, int k) {
  std::vector<int> one_line;
  for (int i = 0; i < s; ++i) one_line.push_back(i + 1);
  for (int i = s + j; i < s + j + k; ++i) one_line.push_back(i + 1);
  for (int i = s; i < s + j; ++i) one_line.push_back(i + 1);
  for (int i = s + j + k; i < n; ++i) one_line.push_back(i + 1);
  return Permutation(std::move(one_line));
}

// Permutation acting on the block [s, s+len) by `inner` (1-indexed, size len).
Permutation block_permutation(int n, int s, const Permutation& inner) {
  std::vector<int> one_line;
  for (int i = 0; i < n; ++i) one_line.push_back(i + 1);
  for (int i = 0; i < inner.size(); ++i) one_line[static_cast<std::size_t>(s + i)] = s + inner.at(i + 1);
  return Permutation(std::move(one_line));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> one_line;
  for (int i = 1; i <= tau.size(); ++i) one_line.push_back(sigma.at(tau.at(i)));
  return Permutation(std::move(one_line));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Sign conventions

std::string suite_sign_rules(Check& check, const Bounds& b, Rng& rng) {
  long cases = 0;
  auto expect = [&](const char* rule, const Permutation& sigma, const BasisWord& w, int expected,
                    const GradedSpaceSpec& s) {
    ++cases;
    const int got = koszul_sign(sigma, w);
    if (got != expected) {
      check.fail(std::string(rule) + ": sign of " + w.to_string(s) + " is " + std::to_string(got));
    }
  };
  for (int sample = 0; sample < b.sign_samples; ++sample) {
    const auto space = GradedSpaceSpec::standard(rng.uniform(-1, 1));
    const auto odd = gens_of_parity(space, false);
    const auto even = gens_of_parity(space, true);
    const int n = rng.uniform(2, b.sign_max_len);
    BasisWord base = random_word(space, n, rng);
    auto gens = base.generators();
    const int len = rng.uniform(2, n);
    const int s = rng.uniform(0, n - len);

    // A block of odd letters reordered arbitrarily: +1.
    auto w = gens;
    for (int i = s; i < s + len; ++i) w[static_cast<std::size_t>(i)] = pick(odd, rng);
    const Permutation inner = rng.permutation(len);
    expect("odd block", block_permutation(n, s, inner), BasisWord::from_generators(space, w), 1, space);

    // A block of even letters reordered: the permutation's sign.
    w = gens;
    for (int i = s; i < s + len; ++i) w[static_cast<std::size_t>(i)] = pick(even, rng);
    expect("even block", block_permutation(n, s, inner), BasisWord::from_generators(space, w),
           inner.inversions() % 2 == 0 ? 1 : -1, space);

    // Two even letters exchanged across arbitrary letters: -1.
    w = gens;
    const int i = rng.uniform(0, n - 2);
    const int j = rng.uniform(i + 1, n - 1);
    w[static_cast<std::size_t>(i)] = pick(even, rng);
    w[static_cast<std::size_t>(j)] = pick(even, rng);
    std::vector<int> swap_line(static_cast<std::size_t>(n));
    std::iota(swap_line.begin(), swap_line.end(), 1);
    std::swap(swap_line[static_cast<std::size_t>(i)], swap_line[static_cast<std::size_t>(j)]);
    expect("even transposition", Permutation(swap_line), BasisWord::from_generators(space, w), -1, space);

    // An even letter moved past k arbitrary letters: (-1)^k.
    const int k = rng.uniform(1, n - 1);
    const int start = rng.uniform(0, n - 1 - k);
    w = gens;
    w[static_cast<std::size_t>(start)] = pick(even, rng);
    expect("even past arbitrary", block_move(n, start, 1, k), BasisWord::from_generators(space, w),
           k % 2 == 0 ? 1 : -1, space);

    // An odd letter moved past k even letters: (-1)^k.
    w = gens;
    w[static_cast<std::size_t>(start)] = pick(odd, rng);
    for (int t = start + 1; t <= start + k; ++t) w[static_cast<std::size_t>(t)] = pick(even, rng);
    expect("odd past even", block_move(n, start, 1, k), BasisWord::from_generators(space, w), k % 2 == 0 ? 1 : -1,
           space);

    // A block of jj even letters moved past kk arbitrary letters: (-1)^{jj kk}.
    const int jj = rng.uniform(1, n - 1);
    const int kk = rng.uniform(1, n - jj);
    const int bs = rng.uniform(0, n - jj - kk);
    w = gens;
    for (int t = bs; t < bs + jj; ++t) w[static_cast<std::size_t>(t)] = pick(even, rng);
    expect("even block past arbitrary", block_move(n, bs, jj, kk), BasisWord::from_generators(space, w),
           (jj * kk) % 2 == 0 ? 1 : -1, space);
  }
  return std::to_string(cases) + " cases, words up to length " + std::to_string(b.sign_max_len);
}

std::string suite_sign_multiplicative(Check& check, const Bounds& b, Rng& rng) {
  long cases = 0;
  auto one = [&](const GradedSpaceSpec& space, const Permutation& sigma, const Permutation& tau,
                 const BasisWord& w) {
    ++cases;
    const int lhs = koszul_sign(compose(sigma, tau), w);
    const int rhs = koszul_sign(sigma, w) * koszul_sign(tau, permute(sigma, w));
    if (permute(tau, permute(sigma, w)) != permute(compose(sigma, tau), w)) {
      check.fail("action is not compatible with composition on " + w.to_string(space));
    }
    if (lhs != rhs) check.fail("cocycle identity fails on " + w.to_string(space));
  };
  for (int m : {-1, 0, 1}) {
    const auto space = GradedSpaceSpec::standard(m);
    for (int n = 1; n <= b.multiplicative_exhaustive_len; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& w : all_words(space, n)) {
        for (const auto& sigma : perms) {
          for (const auto& tau : perms) one(space, sigma, tau, w);
        }
      }
    }
  }
  for (int sample = 0; sample < b.multiplicative_samples; ++sample) {
    const auto space = GradedSpaceSpec::standard(rng.uniform(-1, 1));
    const int n = rng.uniform(b.multiplicative_exhaustive_len + 1, b.multiplicative_random_len);
    one(space, rng.permutation(n), rng.permutation(n), random_word(space, n, rng));
  }
  return std::to_string(cases) + " (sigma, tau, word) triples";
}

std::string suite_unshuffles(Check& check, const Bounds& b, Rng&) {
  long count = 0;
  for (int total = 1; total <= b.unshuffle_total; ++total) {
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      const auto list = unshuffles(p, q);
      count += static_cast<long>(list.size());
      if (list.size() != binomial(total, p)) {
        check.fail("(" + std::to_string(p) + "," + std::to_string(q) + ") count " + std::to_string(list.size()));
      }
      std::vector<std::vector<int>> firsts;
      for (const auto& sigma : list) {
        const auto line = sigma.one_line();
        if (!std::is_sorted(line.begin(), line.begin() + p) || !std::is_sorted(line.begin() + p, line.end())) {
          check.fail("unshuffle not increasing on its blocks");
        }
        firsts.emplace_back(line.begin(), line.begin() + p);
      }
      if (!std::is_sorted(firsts.begin(), firsts.end()) ||
          std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end()) {
        check.fail("unshuffles not strictly lexicographic for p=" + std::to_string(p));
      }
    }
  }
  return std::to_string(count) + " unshuffles, p + q <= " + std::to_string(b.unshuffle_total);
}

// ---------------------------------------------------------------------------
// Operators

std::string suite_operator_degree(Check& check, const Bounds& b, Rng& rng) {
  long evaluations = 0;
  for (int m : kAllGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SlotLayout layout(space);
    const SkewOperatorSet ops(space, random_constants(layout, b.degree_max_n, rng));
    for (int n = 1; n <= b.degree_max_n; ++n) {
      for (const auto& w : all_words(space, n)) {
        ++evaluations;
        const VectorValue v = evaluate(ops, n, w);
        int nonzero = 0;
        for (int g = 0; g < kGeneratorCount; ++g) {
          if (is_zero(v.coeff[static_cast<std::size_t>(g)])) continue;
          ++nonzero;
          if (space.degree(g).value != w.total_degree() + 2 - n) {
            check.fail("l_" + std::to_string(n) + "(" + w.to_string(space) + ") = " + str(v, space) +
                       " has the wrong degree");
          }
        }
        if (nonzero > 1) check.fail("l_" + std::to_string(n) + " is not monomial on " + w.to_string(space));
      }
    }
  }
  return std::to_string(evaluations) + " evaluations, n <= " + std::to_string(b.degree_max_n);
}

std::string suite_operator_skewness(Check& check, const Bounds& b, Rng& rng) {
  long cases = 0;
  for (int m : kAllGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, random_constants(SlotLayout(space), b.skew_exhaustive_n, rng));
    for (int n = 1; n <= b.skew_exhaustive_n; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& w : all_words(space, n)) {
        const VectorValue base = evaluate(ops, n, w);
        for (const auto& sigma : perms) {
          ++cases;
          VectorValue expected = base;
          expected *= Scalar(koszul_sign(sigma, w));
          if (evaluate(ops, n, permute(sigma, w)) != expected) {
            check.fail("l_" + std::to_string(n) + " not skew on " + w.to_string(space));
          }
        }
      }
    }
  }
  return std::to_string(cases) + " (word, sigma) pairs, n <= " + std::to_string(b.skew_exhaustive_n);
}

std::string suite_composite_skewness(Check& check, const Bounds& b, Rng& rng) {
  long cases = 0;
  for (int sample = 0; sample < b.composite_samples; ++sample) {
    const int m = kAllGradings[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(kAllGradings.size()) - 1))];
    const auto space = GradedSpaceSpec::standard(m);
    const SkewOperatorSet ops(space, random_constants(SlotLayout(space), b.composite_max_n, rng));
    const int n = rng.uniform(1, b.composite_max_n);
    const BasisWord w = random_word(space, n, rng);
    const Permutation sigma = rng.permutation(n);
    const Scalar chi(koszul_sign(sigma, w));
    const BasisWord moved = permute(sigma, w);
    for (int p = 1; p <= n; ++p) {
      ++cases;
      VectorValue expected = compose_jacobi_term(ops, p, w);
      expected *= chi;
      if (compose_jacobi_term(ops, p, moved) != expected) {
        check.fail("l_" + std::to_string(n - p + 1) + " o l_" + std::to_string(p) + " not skew on " +
                   w.to_string(space));
      }
    }
    const VectorValue j = jacobi_bruteforce(ops, n, w);
    VectorValue expected = j;
    expected *= chi;
    if (jacobi_bruteforce(ops, n, moved) != expected) check.fail("J_" + std::to_string(n) + " not skew");
    for (int g = 0; g < kGeneratorCount; ++g) {
      if (!is_zero(j.coeff[static_cast<std::size_t>(g)]) && space.degree(g).value != w.total_degree() + 3 - n) {
        check.fail("J_" + std::to_string(n) + "(" + w.to_string(space) + ") has the wrong degree");
      }
    }
  }
  return std::to_string(cases) + " composites, " + std::to_string(b.composite_samples) + " J_n samples, n <= " +
         std::to_string(b.composite_max_n);
}

std::string suite_reduction(Check& check, const Bounds& b, Rng& rng) {
  long words = 0;
  for (int m : kAllGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SlotLayout layout(space);
    const SkewOperatorSet ops(space, random_constants(layout, b.reduction_max_n, rng));
    for (int n = 1; n <= b.reduction_max_n; ++n) {
      // Tabulated slots are exactly the degree-admissible canonical words.
      std::vector<std::array<int, kGeneratorCount>> tabulated;
      for (const auto& s : layout.slots(n)) tabulated.push_back(s.counts);
      auto admissible = admissible_counts(m, n);
      std::sort(tabulated.begin(), tabulated.end());
      std::sort(admissible.begin(), admissible.end());
      if (m >= -1 && m <= 1 && tabulated != admissible) {
        check.fail("slot table for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                   " misses admissible words");
      }
      const auto relevant = relevant_words(space, n);
      for (const auto& w : canonical_words(space, n)) {
        if (std::find(relevant.begin(), relevant.end(), w) != relevant.end()) continue;
        ++words;
        const VectorValue v = jacobi_bruteforce(ops, n, w);
        if (!v.is_zero()) {
          check.fail("J_" + std::to_string(n) + "(" + w.to_string(space) + ") = " + str(v, space) +
                     " outside the relevant words");
        }
      }
    }
  }
  return std::to_string(words) + " non-relevant words vanish, n <= " + std::to_string(b.reduction_max_n);
}

// ---------------------------------------------------------------------------
// Closed forms

std::string describe(const IntegerConstants& k) {
  std::string out;
  for (Family f : kFamilies) {
    out += std::string(out.empty() ? "" : " ") + family_letter(f) + "=[";
    for (int n = 1; n <= k.max_arity(); ++n) out += (n > 1 ? "," : "") + std::to_string(k.get(f, n));
    out += "]";
  }
  return out;
}

using IntClosedForm = std::function<std::int64_t(const IntegerConstants&, int)>;

// Exhaustive {-1,0,1} comparison against the compiled expansion, then random
// rationals against direct brute force.
std::string closed_form_suite(Check& check, const Bounds& b, Rng& rng, int m,
                              const std::function<std::pair<IntClosedForm, GeneratorIndex>(const BasisWord&)>& pick_form) {
  const auto space = GradedSpaceSpec::standard(m);
  const SlotLayout layout(space);
  std::uint64_t exhaustive = 0;
  for (int n = 1; n <= b.closed_exhaustive_n; ++n) {
    std::vector<JacobiExpansion> expansions;
    std::vector<std::pair<IntClosedForm, GeneratorIndex>> forms;
    for (const auto& w : relevant_words(space, n)) {
      expansions.emplace_back(layout, n, w);
      forms.push_back(pick_form(w));
    }
    exhaustive += sweep_ternary(layout, n, [&](const IntegerConstants& k) {
      for (std::size_t i = 0; i < expansions.size(); ++i) {
        const auto brute = expansions[i].evaluate(k);
        const auto& [form, out] = forms[i];
        std::array<std::int64_t, kGeneratorCount> closed{};
        closed[static_cast<std::size_t>(out)] = form(k, n);
        if (brute != closed) {
          check.fail("closed form differs on " + expansions[i].word().to_string(space) + " at " + describe(k));
          return false;
        }
      }
      return true;
    });
  }
  long random_checks = 0;
  for (int n = b.closed_exhaustive_n + 1; n <= b.closed_random_max_n; ++n) {
    for (int sample = 0; sample < b.closed_random_samples; ++sample) {
      const SkewOperatorSet ops(space, random_constants(layout, n, rng));
      for (const auto& w : relevant_words(space, n)) {
        ++random_checks;
        if (jacobi_closed_form(ops, n, w) != jacobi_bruteforce(ops, n, w)) {
          check.fail("closed form differs from brute force on " + w.to_string(space));
        }
      }
    }
  }
  return std::to_string(exhaustive) + " exhaustive assignments (n <= " + std::to_string(b.closed_exhaustive_n) +
         "), " + std::to_string(random_checks) + " random rational checks (n <= " +
         std::to_string(b.closed_random_max_n) + ")";
}

std::string suite_closed_form_caseA(Check& check, const Bounds& b, Rng& rng) {
  std::string detail = closed_form_suite(check, b, rng, 0, [](const BasisWord&) {
    return std::pair<IntClosedForm, GeneratorIndex>(
        [](const IntegerConstants& k, int n) { return closed_form::vw_recombined(k, n); }, 2);
  });
  // The two-sum form and its recombination agree as polynomials; check on the
  // same exhaustive grid and on random rationals.
  const SlotLayout layout(GradedSpaceSpec::standard(0));
  for (int n = 1; n <= b.closed_exhaustive_n; ++n) {
    sweep_ternary(layout, n, [&](const IntegerConstants& k) {
      if (closed_form::vw_split(k, n) != closed_form::vw_recombined(k, n)) {
        check.fail("split and recombined sums differ at n=" + std::to_string(n));
        return false;
      }
      return true;
    });
  }
  for (int n = 1; n <= b.closed_random_max_n; ++n) {
    for (int sample = 0; sample < b.closed_random_samples; ++sample) {
      const auto k = random_constants(layout, n, rng);
      if (closed_form::vw_split(k, n) != closed_form::vw_recombined(k, n)) {
        check.fail("split and recombined sums differ at n=" + std::to_string(n));
      }
    }
  }
  return detail + "; split vs recombined sums agree";
}

std::string suite_closed_form_caseB(Check& check, const Bounds& b, Rng& rng) {
  return closed_form_suite(check, b, rng, -1, [](const BasisWord& w) {
    const auto counts = w.counts();
    if (counts[0] == 2) {
      return std::pair<IntClosedForm, GeneratorIndex>(
          [](const IntegerConstants& k, int n) { return closed_form::uuw(k, n); }, 0);
    }
    if (counts[1] == 1) {
      return std::pair<IntClosedForm, GeneratorIndex>(
          [](const IntegerConstants& k, int n) { return closed_form::uvw(k, n); }, 1);
    }
    return std::pair<IntClosedForm, GeneratorIndex>(
        [](const IntegerConstants& k, int n) { return closed_form::uw(k, n); }, 2);
  });
}

std::string suite_expansion(Check& check, const Bounds& b, Rng& rng) {
  long checks = 0;
  for (int m : kAllGradings) {
    const auto space = GradedSpaceSpec::standard(m);
    const SlotLayout layout(space);
    for (int n = 1; n <= b.expansion_max_n; ++n) {
      // Every canonical word, not only the relevant ones.
      std::vector<JacobiExpansion> expansions;
      for (const auto& w : canonical_words(space, n)) expansions.emplace_back(layout, n, w);
      for (int sample = 0; sample < b.expansion_samples; ++sample) {
        const SkewOperatorSet ops(space, random_constants(layout, n, rng));
        for (const auto& e : expansions) {
          ++checks;
          if (e.evaluate(ops.constants()) != jacobi_bruteforce(ops, n, e.word())) {
            check.fail("compiled expansion differs on " + e.word().to_string(space));
          }
        }
      }
    }
  }
  return std::to_string(checks) + " word evaluations, n <= " + std::to_string(b.expansion_max_n);
}

// ---------------------------------------------------------------------------
// Classification, m = 0

std::string suite_caseA_forced(Check& check, const Bounds& b, Rng& rng) {
  const auto space = GradedSpaceSpec::standard(0);
  const int n_max = b.caseA_n_max;
  long perturbations = 0;
  for (int sample = 0; sample < b.caseA_samples; ++sample) {
    const int first = sample % 2 == 0 ? 1 : rng.uniform(1, 3);
    std::vector<Scalar> bs(static_cast<std::size_t>(n_max)), cs(static_cast<std::size_t>(n_max));
    for (int p = first; p <= n_max; ++p) bs[static_cast<std::size_t>(p - 1)] = rng.rational();
    bs[static_cast<std::size_t>(first - 1)] = rng.nonzero_rational();
    for (int p = 2; p <= n_max; ++p) cs[static_cast<std::size_t>(p - 1)] = rng.rational();
    const auto result = solve_forced_a_caseA(bs, cs, n_max);
    if (result.verified_up_to != n_max) {
      check.fail("forced a certifies only L_" + std::to_string(result.verified_up_to));
      continue;
    }
    if (static_cast<int>(result.forced.size()) != n_max - first + 1) check.fail("unexpected number of forced a");
    for (const auto& f : result.forced) {
      StructureConstants bumped = result.solved;
      bumped.set(f.family, f.index, f.value + 1);
      ++perturbations;
      if (!first_failure(SkewOperatorSet(space, bumped), n_max)) {
        check.fail("perturbing a_" + std::to_string(f.index) + " keeps every J_n zero");
      }
    }
    if (sample < b.caseA_cross_checks) {
      const auto generic = solve_jacobi_constraints(space, result.solved, {Family::kA}, n_max);
      if (generic.solved != result.solved) check.fail("recursion and generic solver disagree");
    }
  }
  return std::to_string(b.caseA_samples) + " random (b, c) at n_max " + std::to_string(n_max) + ", " +
         std::to_string(perturbations) + " perturbations";
}

std::string suite_caseA_first_order(Check& check, const Bounds& b, Rng& rng) {
  const auto space = GradedSpaceSpec::standard(0);
  const SlotLayout layout(space);
  for (int sample = 0; sample < b.first_order_samples; ++sample) {
    const int n_max = rng.uniform(2, b.first_order_n_max);
    StructureConstants k = random_constants(layout, n_max, rng);
    k.set(Family::kA, 1, rng.nonzero_rational());
    const auto result = solve_jacobi_constraints(space, k, {Family::kB}, n_max);
    if (result.inconsistent_at) {
      check.fail("constraints inconsistent at n=" + std::to_string(*result.inconsistent_at));
      continue;
    }
    for (int n = 1; n <= n_max; ++n) {
      const bool forced_zero = std::any_of(result.forced.begin(), result.forced.end(), [&](const ForcedValue& f) {
        return f.family == Family::kB && f.index == n && is_zero(f.value);
      });
      if (!forced_zero) check.fail("b_" + std::to_string(n) + " not forced to zero with a_1 != 0");
    }
  }
  return std::to_string(b.first_order_samples) + " random structures with a_1 != 0, n_max <= " +
         std::to_string(b.first_order_n_max);
}

std::string suite_dg_lie_caseA(Check& check, const Bounds&, Rng&) {
  const auto space = GradedSpaceSpec::standard(0);
  const SlotLayout layout(space);
  const JacobiTable table(space, 3);
  long structures = 0;
  sweep_ternary(layout, 3, [&](const IntegerConstants& k) {
    if (table.first_failure(k, 3)) return true;
    ++structures;
    const bool predicate = k.b(1) == 0 || k.b(2) == 0 || k.a(2) == 0;
    const bool computed = dg_lie_check(SkewOperatorSet(space, k.to_rational())).is_dg_lie;
    if (predicate != computed) check.fail("d.g. Lie verdict disagrees with b_1 b_2 a_2 = 0");
    return true;
  });
  return std::to_string(structures) + " L_3 structures over {-1,0,1}";
}

// ---------------------------------------------------------------------------
// Classification, m = -1

std::string suite_caseB_dichotomy(Check& check, const Bounds& b, Rng&) {
  const auto space = GradedSpaceSpec::standard(-1);
  const SlotLayout layout(space);
  const JacobiTable table(space, b.caseB_dichotomy_n);
  std::uint64_t total = 0;
  for (int n_max = 1; n_max <= b.caseB_dichotomy_n; ++n_max) {
    total += sweep_ternary(layout, n_max, [&](const IntegerConstants& k) {
      const bool certified = !table.first_failure(k, n_max);
      if (certified != caseB_predicate(k, n_max)) {
        check.fail("dichotomy disagrees with brute force at n_max=" + std::to_string(n_max));
        return false;
      }
      return true;
    });
  }
  return std::to_string(total) + " assignments over {-1,0,1}, n_max <= " + std::to_string(b.caseB_dichotomy_n);
}

std::string suite_caseB_forcing(Check& check, const Bounds&, Rng&) {
  const auto space = GradedSpaceSpec::standard(-1);
  const SlotLayout layout(space);
  const JacobiTable table(space, 7);
  long cases = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 4; ++k) {
      for (Family f : {Family::kA, Family::kC}) {
        if (f == Family::kA && k == 1) continue;
        const int n = m + k - 1;
        // Leading coefficient with only b_m and the single constant set.
        StructureConstants lone(7);
        lone.set(Family::kB, m, Scalar(1));
        lone.set(f, k, Scalar(1));
        const int s = (m * (k - 1)) % 2 == 0 ? 1 : -1;
        const SkewOperatorSet ops(space, lone);
        if (f == Family::kA) {
          std::vector<GeneratorIndex> gens{0, 0};
          gens.insert(gens.end(), static_cast<std::size_t>(n - 2), 2);
          const Scalar expected = Scalar(-2 * s) * Scalar(static_cast<long>(binomial(m + k - 3, m - 1)));
          if (jacobi_bruteforce(ops, n, BasisWord::from_generators(space, gens)).coeff[0] != expected) {
            check.fail("leading a_" + std::to_string(k) + " b_" + std::to_string(m) + " coefficient");
          }
        } else {
          std::vector<GeneratorIndex> gens{0};
          gens.insert(gens.end(), static_cast<std::size_t>(n - 1), 2);
          const Scalar expected = Scalar(s) * Scalar(static_cast<long>(binomial(m + k - 2, m - 1)));
          if (jacobi_bruteforce(ops, n, BasisWord::from_generators(space, gens)).coeff[2] != expected) {
            check.fail("leading c_" + std::to_string(k) + " b_" + std::to_string(m) + " coefficient");
          }
        }
        // Any later b and either sign: some J_j, j <= m + k - 1, fails.
        std::vector<SweepPosition> later;
        for (int p = m + 1; p <= n; ++p) later.push_back({Family::kB, p});
        for (std::int64_t bm : {-1, 1}) {
          for (std::int64_t v : {-1, 1}) {
            sweep_assignments(7, later, {-1, 0, 1}, [&](const IntegerConstants& base) {
              IntegerConstants kk = base;
              kk.set(Family::kB, m, bm);
              kk.set(f, k, v);
              ++cases;
              if (!table.first_failure(kk, n)) {
                check.fail("b_" + std::to_string(m) + " with " + family_letter(f) + "_" + std::to_string(k) +
                           " != 0 passes up to J_" + std::to_string(n));
              }
              return true;
            });
          }
        }
      }
    }
  }
  return std::to_string(cases) + " structures, first nonzero b_m with m <= 3, single a_k or c_k with k <= 4";
}

std::string suite_dg_lie_caseB_caseC(Check& check, const Bounds&, Rng&) {
  long structures = 0;
  for (int m : {-1, 1}) {
    const auto space = GradedSpaceSpec::standard(m);
    const SlotLayout layout(space);
    const JacobiTable table(space, 3);
    sweep_ternary(layout, 3, [&](const IntegerConstants& k) {
      if (table.first_failure(k, 3)) return true;
      ++structures;
      if (!dg_lie_check(SkewOperatorSet(space, k.to_rational())).is_dg_lie) {
        check.fail("L_3 structure for m=" + std::to_string(m) + " is not d.g. Lie");
      }
      return true;
    });
  }
  return std::to_string(structures) + " L_3 structures over {-1,0,1}";
}

// ---------------------------------------------------------------------------
// Classification, m = 1

StructureConstants random_caseC_b(int n_max, int sample, Rng& rng) {
  StructureConstants k(n_max);
  const int first = sample % 2 == 0 ? 1 : rng.uniform(1, 3);
  for (int p = first; p <= n_max; ++p) k.set(Family::kB, p, rng.rational());
  k.set(Family::kB, first, rng.nonzero_rational());
  for (int p = 1; p <= n_max; ++p) k.set(Family::kA, p, rng.rational());
  return k;
}

std::string suite_caseC_solver(Check& check, const Bounds& b, Rng& rng) {
  for (int sample = 0; sample < b.caseC_samples; ++sample) {
    const auto result = classify_caseC(random_caseC_b(b.caseC_n_max, sample, rng), b.caseC_n_max);
    if (result.inconsistent_at || result.verified_up_to != b.caseC_n_max) {
      check.fail("solved a certifies only L_" + std::to_string(result.verified_up_to));
    }
    for (const auto& f : result.forced) {
      if (!is_zero(f.value)) check.fail("a_" + std::to_string(f.index) + " forced to a nonzero value");
    }
  }
  const auto free = classify_caseC(StructureConstants(b.caseC_n_max), b.caseC_n_max);
  if (free.branch != Branch::kAllBZero || !free.forced.empty()) check.fail("b = 0 does not leave a free");
  return std::to_string(b.caseC_samples) + " random b, n_max " + std::to_string(b.caseC_n_max);
}

std::string suite_caseC_printed(Check&, const Bounds& b, Rng& rng) {
  long agree = 0, disagree = 0, undefined = 0;
  for (int sample = 0; sample < b.caseC_samples; ++sample) {
    const auto result = classify_caseC(random_caseC_b(b.caseC_n_max, sample, rng), b.caseC_n_max);
    for (const auto& p : result.printed_formula) {
      switch (p.status) {
        case PrintedFormulaCheck::Status::kAgree: ++agree; break;
        case PrintedFormulaCheck::Status::kDisagree: ++disagree; break;
        case PrintedFormulaCheck::Status::kUndefined: ++undefined; break;
      }
    }
  }
  return "agree " + std::to_string(agree) + ", disagree " + std::to_string(disagree) + ", undefined " +
         std::to_string(undefined) +
         "; the printed recursion has a_m on both sides, so it only restates a_m = 0 (solver: every forced a is 0)";
}

// ---------------------------------------------------------------------------
// Degenerate gradings

std::string suite_degenerate(Check& check, const Bounds& b, Rng&) {
  std::ostringstream note;
  for (int m = -8; m <= 8; ++m) {
    if (m >= -1 && m <= 1) continue;
    const auto table = slot_table(m, b.degenerate_max_n);
    const int expected_top = (m == -2 || m == -3) ? 2 : 1;
    if (table.max_nonzero_arity() > expected_top) {
      check.fail("m=" + std::to_string(m) + " has slots at arity " + std::to_string(table.max_nonzero_arity()));
    }
    const auto space = GradedSpaceSpec::standard(m);
    const SlotLayout layout(space);
    for (int n = 3; n <= b.degenerate_max_n; ++n) {
      for (const auto& w : canonical_words(space, n)) {
        const JacobiExpansion e(layout, n, w);
        if (e.terms().empty()) continue;
        if (n == 3 && expected_top == 2) {
          note << " m=" << m << ": J_3(" << w.to_string(space) << ")";
          continue;
        }
        check.fail("J_" + std::to_string(n) + " is not vacuous for m=" + std::to_string(m));
      }
    }
  }
  return "m in [-8,8] outside {-1,0,1}: J_n vacuous for n >= 4, and for n >= 3 when l_2 = 0; J_3 is the graded "
         "Jacobi identity of l_2 on" +
         note.str();
}

// ---------------------------------------------------------------------------

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) h = (h ^ ch) * 1099511628211ull;
  return h;
}

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {{"sign-rules", "Koszul sign rules for odd, even and mixed reorderings", false}, suite_sign_rules},
      {{"sign-cocycle", "Koszul sign is compatible with composition of permutations", false},
       suite_sign_multiplicative},
      {{"unshuffles", "unshuffle count, block monotonicity and order", false}, suite_unshuffles},
      {{"operator-degree", "l_n has degree 2 - n on every basis word", false}, suite_operator_degree},
      {{"operator-skewness", "l_n is skew symmetric (exhaustive)", false}, suite_operator_skewness},
      {{"composite-skewness", "composites and J_n are skew symmetric of degree 3 - n", false},
       suite_composite_skewness},
      {{"reduction", "J_n vanishes off the relevant words; slot tables are complete", false}, suite_reduction},
      {{"closed-form-m0", "closed form of J_n(v w..w) equals brute force", false}, suite_closed_form_caseA},
      {{"closed-form-m-1", "closed forms of J_n on u w.., u u w.., u v w.. equal brute force", false},
       suite_closed_form_caseB},
      {{"compiled-expansion", "compiled unshuffle expansion equals direct brute force", false}, suite_expansion},
      {{"forced-a-m0", "m = 0: forced a certify L_n and +1 perturbations break it", false}, suite_caseA_forced},
      {{"first-order-m0", "m = 0: a_1 != 0 forces every b_n = 0", false}, suite_caseA_first_order},
      {{"dg-lie-m0", "m = 0: L_3 is d.g. Lie iff b_1 b_2 a_2 = 0", false}, suite_dg_lie_caseA},
      {{"dichotomy-m-1", "m = -1: b-dichotomy equals brute-force certification (exhaustive)", false},
       suite_caseB_dichotomy},
      {{"forcing-m-1", "m = -1: first nonzero b_m with a_k or c_k != 0 fails by J_{m+k-1}", false},
       suite_caseB_forcing},
      {{"dg-lie-m-1-m1", "m = -1 and m = 1: every L_3 structure is d.g. Lie", false}, suite_dg_lie_caseB_caseC},
      {{"solver-m1", "m = 1: solved a certify L_n", false}, suite_caseC_solver},
      {{"printed-recursion-m1", "m = 1: printed a-recursion vs solver", true}, suite_caseC_printed},
      {{"degenerate-gradings", "other m: slots only in low arity, higher J_n vacuous", false}, suite_degenerate},
  };
  return suites;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteResult run_suite(std::string_view id, VerifyScale scale, std::uint64_t seed) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteEntry& e) { return e.info.id == id; });
  if (it == suites.end()) throw std::invalid_argument("unknown verification suite: " + std::string(id));
  const Bounds& bounds = scale == VerifyScale::kFull ? kFullBounds : kQuickBounds;
  Rng rng(seed ^ fnv1a(id));
  Check check;
  SuiteResult result;
  result.id = it->info.id;
  result.description = it->info.description;
  result.informational = it->info.informational;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    summary = it->fn(check, bounds, rng);
  } catch (const std::exception& e) {
    check.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = check.ok();
  result.detail = check.ok() ? summary : check.failure_detail();
  return result;
}

std::vector<SuiteResult> run_verification(VerifyScale scale, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& info : verification_suites()) out.push_back(run_suite(info.id, scale, seed));
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed || r.informational; });
}

}  // namespace linf
