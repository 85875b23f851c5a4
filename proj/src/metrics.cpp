#include "ttake/metrics.hpp"

namespace ttake {

namespace {
thread_local CostMeter* active_meter = nullptr;
}  // namespace

CostMeter::CostMeter() : previous_(active_meter) { active_meter = this; }

CostMeter::~CostMeter() { active_meter = previous_; }

namespace detail {

void count_exponentiation() {
  if (active_meter) ++active_meter->counts_.exponentiations;
}

void count_scalar_multiplication() {
  if (active_meter) ++active_meter->counts_.scalar_multiplications;
}

}  // namespace detail
}  // namespace ttake
