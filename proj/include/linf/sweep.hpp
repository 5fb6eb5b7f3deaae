#pragma once
// Exhaustive enumeration of small integer structure constants.
#include <cstdint>
#include <functional>
#include <vector>

#include "linf/skew_ops.hpp"

namespace linf {

struct SweepPosition {
  Family family = Family::kA;
  int arity = 0;
};

/// Every (family, arity) with a slot in the layout, arity <= n_max, ordered by
/// arity then family.
std::vector<SweepPosition> slot_positions(const SlotLayout& layout, int n_max);

/// Visits every assignment of `values` to `positions` (all other constants 0)
/// in odometer order, first position fastest. Stops early when `visit`
/// returns false. Returns the number of assignments visited.
std::uint64_t sweep_assignments(int max_arity, const std::vector<SweepPosition>& positions,
                                const std::vector<std::int64_t>& values,
                                const std::function<bool(const IntegerConstants&)>& visit);

/// The {-1, 0, 1} sweep over every slot of arity <= n_max.
std::uint64_t sweep_ternary(const SlotLayout& layout, int n_max,
                            const std::function<bool(const IntegerConstants&)>& visit);

}  // namespace linf
