#pragma once

namespace psc {

// Exactness bounds. Computations that would exceed a bound fail with
// CapacityError instead of approximating.
struct Config {
  // Full element sets are stored for groups/subgroups up to this order.
  long long max_elements = 200000;
  // Exhaustive p-subgroup enumeration is supported for Sylow orders up to this.
  long long max_sylow_order = 256;
  // Full subgroup enumeration (solvable families, separating checks) is
  // supported for groups up to this order.
  long long max_subgroup_enum = 2000;
};

}  // namespace psc
