#include "linf/linear_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace linf {

LinearSystem::LinearSystem(int unknowns) : unknowns_(unknowns) {
  if (unknowns < 0) throw std::invalid_argument("negative number of unknowns");
}

bool LinearSystem::add_equation(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != unknowns_) throw std::invalid_argument("equation has the wrong width");
  if (!consistent_) return false;

  for (const auto& row : rows_) {
    const Scalar factor = coeffs[row.pivot];
    if (is_zero(factor)) continue;
    for (int j = 0; j < unknowns_; ++j) coeffs[j] -= factor * row.coeffs[j];
    rhs -= factor * row.rhs;
  }
  const auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return !is_zero(s); });
  if (it == coeffs.end()) {
    if (!is_zero(rhs)) consistent_ = false;
    return consistent_;
  }
  const int pivot = static_cast<int>(it - coeffs.begin());
  const Scalar lead = coeffs[pivot];
  for (auto& c : coeffs) c /= lead;
  rhs /= lead;

  for (auto& row : rows_) {
    const Scalar factor = row.coeffs[pivot];
    if (is_zero(factor)) continue;
    for (int j = 0; j < unknowns_; ++j) row.coeffs[j] -= factor * coeffs[j];
    row.rhs -= factor * rhs;
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& r, int p) { return r.pivot < p; });
  rows_.insert(pos, Row{pivot, std::move(coeffs), std::move(rhs)});
  return true;
}

bool LinearSystem::determined(int j) const {
  if (!consistent_) return false;
  for (const auto& row : rows_) {
    if (row.pivot != j) continue;
    for (int k = 0; k < unknowns_; ++k) {
      if (k != j && !is_zero(row.coeffs[k])) return false;
    }
    return true;
  }
  return false;
}

std::optional<Scalar> LinearSystem::value(int j) const {
  if (!determined(j)) return std::nullopt;
  for (const auto& row : rows_) {
    if (row.pivot == j) return row.rhs;
  }
  return std::nullopt;
}

std::vector<Scalar> LinearSystem::solve(const std::vector<Scalar>& free_values) const {
  if (!consistent_) throw std::logic_error("solve called on an inconsistent system");
  if (static_cast<int>(free_values.size()) != unknowns_) throw std::invalid_argument("free_values has the wrong width");
  std::vector<Scalar> x = free_values;
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns_), false);
  for (const auto& row : rows_) is_pivot[row.pivot] = true;
  for (const auto& row : rows_) {
    Scalar v = row.rhs;
    for (int k = 0; k < unknowns_; ++k) {
      if (!is_pivot[k] && !is_zero(row.coeffs[k])) v -= row.coeffs[k] * free_values[k];
    }
    x[row.pivot] = v;
  }
  return x;
}

}  // namespace linf
