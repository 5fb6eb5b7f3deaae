#include "linf/graded_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linf {

GradedSpaceSpec::GradedSpaceSpec(int bottom_degree, std::array<std::string, kGeneratorCount> names)
    : bottom_degree_(bottom_degree), names_(std::move(names)) {
  for (int i = 0; i < kGeneratorCount; ++i) {
    if (names_[i].empty()) throw std::invalid_argument("generator names must be nonempty");
    for (int j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("generator names must be distinct");
    }
  }
}

GradedSpaceSpec GradedSpaceSpec::standard(int bottom_degree) {
  switch (bottom_degree) {
    case -1: return GradedSpaceSpec(-1, {"u", "v", "w"});
    case 0: return GradedSpaceSpec(0, {"v", "w", "x"});
    case 1: return GradedSpaceSpec(1, {"w", "x", "y"});
    default: return GradedSpaceSpec(bottom_degree, {"e0", "e1", "e2"});
  }
}

Degree GradedSpaceSpec::degree(GeneratorIndex g) const {
  if (g < 0 || g >= kGeneratorCount) throw std::out_of_range("generator index out of range");
  return Degree{bottom_degree_ + g};
}

const std::string& GradedSpaceSpec::name(GeneratorIndex g) const {
  return names_.at(static_cast<std::size_t>(g));
}

GeneratorIndex GradedSpaceSpec::index_of(std::string_view name) const {
  for (int i = 0; i < kGeneratorCount; ++i) {
    if (names_[i] == name) return i;
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Permutation::Permutation(std::vector<int> one_line) {
  const auto n = one_line.size();
  std::vector<bool> seen(n, false);
  images_.reserve(n);
  for (int image : one_line) {
    if (image < 1 || static_cast<std::size_t>(image) > n || seen[image - 1]) {
      throw std::invalid_argument("not a permutation of {1..n}");
    }
    seen[image - 1] = true;
    images_.push_back(image - 1);
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int i) { return i + 1; });
  return out;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

BasisWord BasisWord::from_generators(const GradedSpaceSpec& space, std::span<const GeneratorIndex> gens) {
  std::vector<Letter> letters;
  letters.reserve(gens.size());
  for (GeneratorIndex g : gens) letters.push_back(Letter{g, space.degree(g)});
  return BasisWord(std::move(letters));
}

BasisWord BasisWord::from_generators(const GradedSpaceSpec& space, std::initializer_list<GeneratorIndex> gens) {
  return from_generators(space, std::span<const GeneratorIndex>(gens.begin(), gens.size()));
}

BasisWord BasisWord::parse(const GradedSpaceSpec& space, std::string_view text) {
  static constexpr std::string_view kTensor = "⊗";
  std::vector<GeneratorIndex> gens;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) gens.push_back(space.index_of(token));
    token.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kTensor.size()) == kTensor) {
      flush();
      i += kTensor.size();
    } else if (text[i] == ' ' || text[i] == ',' || text[i] == '*') {
      flush();
      ++i;
    } else {
      token.push_back(text[i]);
      ++i;
    }
  }
  flush();
  return from_generators(space, gens);
}

std::vector<GeneratorIndex> BasisWord::generators() const {
  std::vector<GeneratorIndex> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.generator);
  return out;
}

int BasisWord::total_degree() const {
  int d = 0;
  for (const auto& l : letters_) d += l.degree.value;
  return d;
}

std::array<int, kGeneratorCount> BasisWord::counts() const {
  std::array<int, kGeneratorCount> c{};
  for (const auto& l : letters_) ++c.at(static_cast<std::size_t>(l.generator));
  return c;
}

bool BasisWord::belongs_to(const GradedSpaceSpec& space) const {
  return std::all_of(letters_.begin(), letters_.end(), [&](const Letter& l) {
    return l.generator >= 0 && l.generator < kGeneratorCount && space.degree(l.generator) == l.degree;
  });
}

std::string BasisWord::to_string(const GradedSpaceSpec& space) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += "⊗";
    out += space.name(letters_[i].generator);
  }
  return out;
}

BasisWord permute(const Permutation& sigma, const BasisWord& word) {
  if (sigma.size() != word.size()) throw std::invalid_argument("permutation and word lengths differ");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(word.size()));
  for (int image : sigma.zero_based()) out.push_back(word[image]);
  return BasisWord(std::move(out));
}

namespace {

// Sign picked up when two letters trade places.
constexpr int swap_sign(Degree x, Degree y) { return (x.is_odd() && y.is_odd()) ? 1 : -1; }

}  // namespace

int koszul_sign(const Permutation& sigma, const BasisWord& word) {
  if (sigma.size() != word.size()) throw std::invalid_argument("permutation and word lengths differ");
  const auto img = sigma.zero_based();
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] > img[j]) sign *= swap_sign(word[img[i]].degree, word[img[j]].degree);
    }
  }
  return sign;
}

int sorting_sign(const BasisWord& word) {
  int sign = 1;
  for (int i = 0; i < word.size(); ++i) {
    for (int j = i + 1; j < word.size(); ++j) {
      if (word[i].generator > word[j].generator) sign *= swap_sign(word[i].degree, word[j].degree);
    }
  }
  return sign;
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("unshuffles requires p, q >= 0 and p + q >= 1");
  const int n = p + q;
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(binomial(n, p)));
  // `chosen` walks the p-subsets of {0..n-1} in lexicographic order.
  std::vector<int> chosen(static_cast<std::size_t>(p));
  std::iota(chosen.begin(), chosen.end(), 0);
  while (true) {
    std::vector<int> one_line;
    one_line.reserve(static_cast<std::size_t>(n));
    std::vector<bool> in_first(static_cast<std::size_t>(n), false);
    for (int c : chosen) {
      one_line.push_back(c + 1);
      in_first[c] = true;
    }
    for (int i = 0; i < n; ++i) {
      if (!in_first[i]) one_line.push_back(i + 1);
    }
    out.emplace_back(std::move(one_line));

    int i = p - 1;
    while (i >= 0 && chosen[i] == n - p + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < p; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace linf
