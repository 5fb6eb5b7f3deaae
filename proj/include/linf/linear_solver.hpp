#pragma once

#include <optional>
#include <vector>

#include "linf/scalar.hpp"

namespace linf {

/// Incremental exact Gauss-Jordan elimination over Q. Rows are kept in
/// reduced row echelon form as equations are added.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns);

  int unknowns() const { return unknowns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool consistent() const { return consistent_; }

  /// Adds sum_j coeffs[j] * x_j = rhs. Returns consistent().
  bool add_equation(std::vector<Scalar> coeffs, Scalar rhs);

  /// x_j is fixed by the system (a pivot whose row has no free entries).
  bool determined(int j) const;
  std::optional<Scalar> value(int j) const;

  /// A solution in which each free unknown j takes free_values[j].
  std::vector<Scalar> solve(const std::vector<Scalar>& free_values) const;

 private:
  struct Row {
    int pivot;
    std::vector<Scalar> coeffs;
    Scalar rhs;
  };

  int unknowns_;
  bool consistent_ = true;
  std::vector<Row> rows_;
};

}  // namespace linf
