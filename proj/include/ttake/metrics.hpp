#pragma once

#include <cstdint>

namespace ttake {

struct OpCounts {
  std::uint64_t exponentiations = 0;
  std::uint64_t scalar_multiplications = 0;
};

namespace detail {
void count_exponentiation();
void count_scalar_multiplication();
}  // namespace detail

/// Counts group exponentiations and scalar multiplications performed on the
/// current thread while the meter is alive. Meters nest; only the innermost
/// one is charged.
class CostMeter {
 public:
  CostMeter();
  ~CostMeter();
  CostMeter(const CostMeter&) = delete;
  CostMeter& operator=(const CostMeter&) = delete;

  const OpCounts& counts() const { return counts_; }
  void reset() { counts_ = {}; }

 private:
  friend void detail::count_exponentiation();
  friend void detail::count_scalar_multiplication();

  OpCounts counts_;
  CostMeter* previous_;
};

}  // namespace ttake
