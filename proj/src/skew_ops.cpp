#include "linf/skew_ops.hpp"

#include <algorithm>

namespace linf {

TruncationError::TruncationError(int arity, int max_arity)
    : std::out_of_range("truncation exceeded: arity " + std::to_string(arity) + " > max_arity " +
                        std::to_string(max_arity)),
      arity_(arity) {}

CaseTag case_for_bottom_degree(int m) {
  switch (m) {
    case 0: return CaseTag::kCaseA;
    case -1: return CaseTag::kCaseB;
    case 1: return CaseTag::kCaseC;
    default: return CaseTag::kDegenerate;
  }
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kCaseA: return "caseA";
    case CaseTag::kCaseB: return "caseB";
    case CaseTag::kCaseC: return "caseC";
    case CaseTag::kDegenerate: return "generic";
  }
  return "?";
}

char family_letter(Family f) { return "abc"[static_cast<int>(f)]; }

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(int max_arity) : max_arity_(max_arity) {
  if (max_arity < 1) throw std::invalid_argument("max_arity must be at least 1");
  for (auto& s : seq_) s.assign(static_cast<std::size_t>(max_arity), Scalar(0));
}

StructureConstants::StructureConstants(int max_arity, std::vector<Scalar> a, std::vector<Scalar> b,
                                       std::vector<Scalar> c)
    : StructureConstants(max_arity) {
  std::array<std::vector<Scalar>*, 3> given = {&a, &b, &c};
  for (std::size_t f = 0; f < 3; ++f) {
    if (given[f]->size() > static_cast<std::size_t>(max_arity)) {
      throw std::invalid_argument(std::string("sequence ") + "abc"[f] + " is longer than max_arity");
    }
    std::copy(given[f]->begin(), given[f]->end(), seq_[f].begin());
  }
}

void StructureConstants::check_index(int n) const {
  if (n < 1) throw std::invalid_argument("structure constants are indexed from 1");
  if (n > max_arity_) throw TruncationError(n, max_arity_);
}

const Scalar& StructureConstants::get(Family f, int n) const {
  check_index(n);
  return seq_[static_cast<std::size_t>(f)][static_cast<std::size_t>(n - 1)];
}

void StructureConstants::set(Family f, int n, Scalar value) {
  check_index(n);
  seq_[static_cast<std::size_t>(f)][static_cast<std::size_t>(n - 1)] = std::move(value);
}

IntegerConstants::IntegerConstants(int max_arity) : max_arity_(max_arity) {
  if (max_arity < 1) throw std::invalid_argument("max_arity must be at least 1");
  for (auto& s : seq_) s.assign(static_cast<std::size_t>(max_arity), 0);
}

StructureConstants IntegerConstants::to_rational() const {
  StructureConstants out(max_arity_);
  for (Family f : kFamilies) {
    for (int n = 1; n <= max_arity_; ++n) out.set(f, n, Scalar(static_cast<long>(get(f, n))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Slots

std::vector<std::array<int, kGeneratorCount>> admissible_counts(int m, int n) {
  std::vector<std::array<int, kGeneratorCount>> out;
  if (n < 1) return out;
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) {
      const std::array<int, kGeneratorCount> counts = {i, j, n - i - j};
      bool repeated_even = false;
      int total = 0;
      for (int g = 0; g < kGeneratorCount; ++g) {
        const Degree d{m + g};
        if (d.is_even() && counts[g] > 1) repeated_even = true;
        total += counts[g] * d.value;
      }
      const int out_degree = total + 2 - n;
      if (!repeated_even && out_degree >= m && out_degree <= m + 2) out.push_back(counts);
    }
  }
  return out;
}

SlotLayout::SlotLayout(GradedSpaceSpec space)
    : space_(std::move(space)), tag_(case_for_bottom_degree(space_.bottom_degree())) {}

std::vector<Slot> SlotLayout::slots(int n) const {
  std::vector<Slot> out;
  if (n < 1) return out;
  switch (tag_) {
    case CaseTag::kCaseA:
      out.push_back({Family::kA, n, {1, n - 1, 0}, 1});
      out.push_back({Family::kB, n, {0, n, 0}, 2});
      if (n >= 2) out.push_back({Family::kC, n, {1, n - 2, 1}, 2});
      break;
    case CaseTag::kCaseB:
      if (n >= 2) out.push_back({Family::kA, n, {1, 1, n - 2}, 0});
      out.push_back({Family::kB, n, {1, 0, n - 1}, 1});
      out.push_back({Family::kC, n, {0, 1, n - 1}, 2});
      break;
    case CaseTag::kCaseC:
      out.push_back({Family::kA, n, {n, 0, 0}, 1});
      out.push_back({Family::kB, n, {n - 1, 1, 0}, 2});
      break;
    case CaseTag::kDegenerate: {
      const int m = space_.bottom_degree();
      const auto admissible = admissible_counts(m, n);
      for (std::size_t i = 0; i < admissible.size(); ++i) {
        const auto& c = admissible[i];
        const int total = c[0] * m + c[1] * (m + 1) + c[2] * (m + 2);
        out.push_back({kFamilies.at(i), n, c, total + 2 - n - m});
      }
      break;
    }
  }
  return out;
}

std::optional<Slot> SlotLayout::find(const std::array<int, kGeneratorCount>& counts) const {
  const int n = counts[0] + counts[1] + counts[2];
  for (const auto& s : slots(n)) {
    if (s.counts == counts) return s;
  }
  return std::nullopt;
}

bool SlotLayout::has_slot(Family f, int arity) const {
  const auto s = slots(arity);
  return std::any_of(s.begin(), s.end(), [f](const Slot& slot) { return slot.family == f; });
}

// ---------------------------------------------------------------------------
// Values

bool VectorValue::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Scalar& s) { return linf::is_zero(s); });
}

VectorValue& VectorValue::operator+=(const VectorValue& rhs) {
  for (int g = 0; g < kGeneratorCount; ++g) coeff[g] += rhs.coeff[g];
  return *this;
}

VectorValue& VectorValue::operator*=(const Scalar& s) {
  for (auto& c : coeff) c *= s;
  return *this;
}

VectorValue VectorValue::basis(GeneratorIndex g, Scalar s) {
  VectorValue v;
  v.coeff.at(static_cast<std::size_t>(g)) = std::move(s);
  return v;
}

namespace {

std::string format_term(const Scalar& c, const std::string& symbol, bool first) {
  std::string out;
  Scalar mag = abs(c);
  if (sgn(c) < 0) out += first ? "-" : " - ";
  else if (!first) out += " + ";
  if (mag != 1) out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
  out += symbol;
  return out;
}

}  // namespace

std::string VectorValue::to_string(const GradedSpaceSpec& space) const {
  std::string out;
  for (int g = 0; g < kGeneratorCount; ++g) {
    if (linf::is_zero(coeff[g])) continue;
    out += format_term(coeff[g], space.name(g), out.empty());
  }
  return out.empty() ? "0" : out;
}

void TensorValue::add(const std::vector<GeneratorIndex>& word, const Scalar& coeff) {
  if (linf::is_zero(coeff)) return;
  if (!terms_.empty() && terms_.begin()->first.size() != word.size()) {
    throw std::invalid_argument("tensor terms must share a word length");
  }
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (linf::is_zero(it->second)) terms_.erase(it);
  }
}

int TensorValue::word_length() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

std::string TensorValue::to_string(const GradedSpaceSpec& space) const {
  std::string out;
  for (const auto& [word, c] : terms_) {
    std::string symbol = "(" + BasisWord::from_generators(space, word).to_string(space) + ")";
    out += format_term(c, symbol, out.empty());
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Operators

SkewOperatorSet::SkewOperatorSet(GradedSpaceSpec space, StructureConstants constants)
    : layout_(std::move(space)), constants_(std::move(constants)) {
  for (Family f : kFamilies) {
    for (int n = 1; n <= constants_.max_arity(); ++n) {
      if (!linf::is_zero(constants_.get(f, n)) && !layout_.has_slot(f, n)) {
        throw std::invalid_argument(std::string("constant ") + family_letter(f) + "_" + std::to_string(n) +
                                    " has no operator slot for " + to_string(layout_.case_tag()) +
                                    " and must be 0");
      }
    }
  }
}

VectorValue evaluate(const SkewOperatorSet& ops, int n, const BasisWord& word) {
  if (n < 1 || word.size() != n) throw std::invalid_argument("evaluate: word length must equal the arity");
  if (n > ops.max_arity()) throw TruncationError(n, ops.max_arity());
  if (!word.belongs_to(ops.space())) throw std::invalid_argument("evaluate: word is not in the space");

  const auto counts = word.counts();
  for (int g = 0; g < kGeneratorCount; ++g) {
    if (counts[g] > 1 && ops.space().degree(g).is_even()) return {};
  }
  const auto slot = ops.layout().find(counts);
  if (!slot) return {};
  const Scalar& constant = ops.constants().get(slot->family, n);
  if (is_zero(constant)) return {};
  return VectorValue::basis(slot->output, sorting_sign(word) * constant);
}

TensorValue extend_apply(const SkewOperatorSet& ops, int p, const BasisWord& word) {
  const int n = word.size();
  if (p < 1 || p > n) throw std::invalid_argument("extend_apply requires 1 <= p <= word length");
  TensorValue out;
  for (const auto& sigma : unshuffles(p, n - p)) {
    const BasisWord moved = permute(sigma, word);
    const std::vector<Letter> head(moved.letters().begin(), moved.letters().begin() + p);
    const VectorValue inner = evaluate(ops, p, BasisWord(head));
    if (inner.is_zero()) continue;
    const int chi = koszul_sign(sigma, word);
    for (int g = 0; g < kGeneratorCount; ++g) {
      if (is_zero(inner.coeff[g])) continue;
      std::vector<GeneratorIndex> target{g};
      for (int i = p; i < n; ++i) target.push_back(moved[i].generator);
      out.add(target, chi * inner.coeff[g]);
    }
  }
  return out;
}

VectorValue compose_jacobi_term(const SkewOperatorSet& ops, int p, const BasisWord& word) {
  const int outer = word.size() - p + 1;
  if (outer > ops.max_arity()) throw TruncationError(outer, ops.max_arity());
  VectorValue out;
  const TensorValue extended = extend_apply(ops, p, word);
  for (const auto& [gens, coeff] : extended.terms()) {
    VectorValue term = evaluate(ops, outer, BasisWord::from_generators(ops.space(), gens));
    term *= coeff;
    out += term;
  }
  return out;
}

}  // namespace linf
