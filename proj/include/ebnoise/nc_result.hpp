#pragma once

#include <optional>
#include <string>

namespace ebnoise {

/// Entanglement-breaking order: Finite(n) or ExceedsCap(cap). The divergent flag
/// marks an ExceedsCap that a closed form proves infinite.
class NcResult {
 public:
  static NcResult finite(int n);
  static NcResult exceeds_cap(int cap, bool divergent = false);

  bool is_finite() const { return order_.has_value(); }
  /// Throws std::logic_error on ExceedsCap.
  int value() const;
  int cap() const { return cap_; }
  bool divergent() const { return divergent_; }

  bool operator==(const NcResult& other) const = default;

 private:
  NcResult(std::optional<int> order, int cap, bool divergent)
      : order_(order), cap_(cap), divergent_(divergent) {}
  std::optional<int> order_;
  int cap_ = 0;
  bool divergent_ = false;
};

/// ExceedsCap > Finite(m) > Finite(m') for m' < m.
bool order_greater(const NcResult& a, const NcResult& b);

/// "3" or "exceeds_cap".
std::string to_string(const NcResult& r);

}  // namespace ebnoise
