#pragma once

// Randomized exact self-checks of the rewriting and elimination engines.

#include <cstdint>
#include <string>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"

namespace loopalg {

constexpr std::uint64_t default_seed = 20240917;

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  bool pass() const { return failures == 0; }
};

// associativity, jacobi, gr_multiplicative, rewrite_bound, rank_nullity.
std::vector<PropertyResult> run_properties(const LieAlgebraSpec& spec, std::uint64_t seed, int trials,
                                           Exec exec = Exec::parallel);

}  // namespace loopalg
