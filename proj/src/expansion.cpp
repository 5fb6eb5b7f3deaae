#include "linf/expansion.hpp"

#include <map>
#include <tuple>

#include "linf/jacobi.hpp"

namespace linf {

namespace {

struct Hit {
  int sign;
  Slot slot;
};

std::optional<Hit> resolve(const SlotLayout& layout, const BasisWord& word) {
  const auto counts = word.counts();
  for (int g = 0; g < kGeneratorCount; ++g) {
    if (counts[g] > 1 && layout.space().degree(g).is_even()) return std::nullopt;
  }
  auto slot = layout.find(counts);
  if (!slot) return std::nullopt;
  return Hit{sorting_sign(word), *slot};
}

}  // namespace

JacobiExpansion::JacobiExpansion(const SlotLayout& layout, int n, BasisWord word)
    : n_(n), word_(std::move(word)) {
  if (word_.size() != n || n < 1) throw std::invalid_argument("JacobiExpansion: word length must equal n");
  const auto& space = layout.space();
  using Key = std::tuple<int, int, int, int, int>;
  std::map<Key, std::int64_t> merged;
  for (int p = 1; p <= n; ++p) {
    const int prefactor = (static_cast<long long>(p) * (n - p)) % 2 == 0 ? 1 : -1;
    for (const auto& sigma : unshuffles(p, n - p)) {
      const BasisWord moved = permute(sigma, word_);
      const BasisWord head(std::vector<Letter>(moved.letters().begin(), moved.letters().begin() + p));
      const auto inner = resolve(layout, head);
      if (!inner) continue;
      std::vector<GeneratorIndex> outer_gens{inner->slot.output};
      for (int i = p; i < n; ++i) outer_gens.push_back(moved[i].generator);
      const auto outer = resolve(layout, BasisWord::from_generators(space, outer_gens));
      if (!outer) continue;
      const int chi = koszul_sign(sigma, word_);
      const Key key{static_cast<int>(inner->slot.family), p, static_cast<int>(outer->slot.family), n - p + 1,
                    outer->slot.output};
      merged[key] += prefactor * chi * inner->sign * outer->sign;
    }
  }
  for (const auto& [key, weight] : merged) {
    if (weight == 0) continue;
    const auto [f_in, a_in, f_out, a_out, g] = key;
    terms_.push_back({weight, static_cast<Family>(f_in), a_in, static_cast<Family>(f_out), a_out, g});
  }
}

VectorValue JacobiExpansion::evaluate(const StructureConstants& constants) const {
  if (n_ > constants.max_arity()) throw TruncationError(n_, constants.max_arity());
  VectorValue out;
  Scalar product;
  for (const auto& t : terms_) {
    const Scalar& inner = constants.get(t.inner_family, t.inner_arity);
    if (sgn(inner) == 0) continue;
    const Scalar& outer = constants.get(t.outer_family, t.outer_arity);
    if (sgn(outer) == 0) continue;
    mpq_mul(product.get_mpq_t(), inner.get_mpq_t(), outer.get_mpq_t());
    if (t.weight != 1) product *= static_cast<long>(t.weight);
    out.coeff[static_cast<std::size_t>(t.output)] += product;
  }
  return out;
}

bool JacobiExpansion::vanishes(const StructureConstants& constants) const {
  return evaluate(constants).is_zero();
}

std::array<std::int64_t, kGeneratorCount> JacobiExpansion::evaluate(const IntegerConstants& constants) const {
  if (n_ > constants.max_arity()) throw TruncationError(n_, constants.max_arity());
  std::array<std::int64_t, kGeneratorCount> out{};
  for (const auto& t : terms_) {
    out[static_cast<std::size_t>(t.output)] +=
        t.weight * constants.get(t.inner_family, t.inner_arity) * constants.get(t.outer_family, t.outer_arity);
  }
  return out;
}

bool JacobiExpansion::vanishes(const IntegerConstants& constants) const {
  const auto v = evaluate(constants);
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

JacobiTable::JacobiTable(const GradedSpaceSpec& space, int n_max) : n_max_(n_max) {
  const SlotLayout layout(space);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<JacobiExpansion> row;
    for (auto& word : relevant_words(space, n)) row.emplace_back(layout, n, std::move(word));
    by_arity_.push_back(std::move(row));
  }
}

bool JacobiTable::vanishes(const StructureConstants& constants, int n) const {
  for (const auto& e : at(n)) {
    if (!e.vanishes(constants)) return false;
  }
  return true;
}

std::optional<int> JacobiTable::first_failure(const StructureConstants& constants, int n_max) const {
  if (n_max > n_max_) throw TruncationError(n_max, n_max_);
  for (int n = 1; n <= n_max; ++n) {
    if (!vanishes(constants, n)) return n;
  }
  return std::nullopt;
}

bool JacobiTable::vanishes(const IntegerConstants& constants, int n) const {
  for (const auto& e : at(n)) {
    if (!e.vanishes(constants)) return false;
  }
  return true;
}

std::optional<int> JacobiTable::first_failure(const IntegerConstants& constants, int n_max) const {
  if (n_max > n_max_) throw TruncationError(n_max, n_max_);
  for (int n = 1; n <= n_max; ++n) {
    if (!vanishes(constants, n)) return n;
  }
  return std::nullopt;
}

}  // namespace linf
