#include "linf/sweep.hpp"

#include <stdexcept>

namespace linf {

std::vector<SweepPosition> slot_positions(const SlotLayout& layout, int n_max) {
  std::vector<SweepPosition> out;
  for (int n = 1; n <= n_max; ++n) {
    for (Family f : kFamilies) {
      if (layout.has_slot(f, n)) out.push_back({f, n});
    }
  }
  return out;
}

std::uint64_t sweep_assignments(int max_arity, const std::vector<SweepPosition>& positions,
                                const std::vector<std::int64_t>& values,
                                const std::function<bool(const IntegerConstants&)>& visit) {
  if (values.empty()) throw std::invalid_argument("sweep_assignments: no values");
  IntegerConstants k(max_arity);
  std::vector<std::size_t> digit(positions.size(), 0);
  for (const auto& p : positions) k.set(p.family, p.arity, values.front());
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(k)) return visited;
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      const auto& p = positions[i];
      if (++digit[i] < values.size()) {
        k.set(p.family, p.arity, values[digit[i]]);
        break;
      }
      digit[i] = 0;
      k.set(p.family, p.arity, values.front());
    }
    if (i == digit.size()) return visited;
  }
}

std::uint64_t sweep_ternary(const SlotLayout& layout, int n_max,
                            const std::function<bool(const IntegerConstants&)>& visit) {
  return sweep_assignments(n_max, slot_positions(layout, n_max), {-1, 0, 1}, visit);
}

}  // namespace linf
