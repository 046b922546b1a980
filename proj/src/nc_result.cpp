#include "ebnoise/nc_result.hpp"

#include <stdexcept>

namespace ebnoise {

NcResult NcResult::finite(int n) {
  if (n < 1) throw std::invalid_argument("entanglement-breaking order must be >= 1");
  return NcResult(n, 0, false);
}

NcResult NcResult::exceeds_cap(int cap, bool divergent) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  return NcResult(std::nullopt, cap, divergent);
}

int NcResult::value() const {
  if (!order_) throw std::logic_error("NcResult exceeds the cap; no finite value");
  return *order_;
}

bool order_greater(const NcResult& a, const NcResult& b) {
  if (!a.is_finite()) return b.is_finite();
  if (!b.is_finite()) return false;
  return a.value() > b.value();
}

std::string to_string(const NcResult& r) {
  return r.is_finite() ? std::to_string(r.value()) : std::string("exceeds_cap");
}

}  // namespace ebnoise
