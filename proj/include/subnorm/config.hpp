#pragma once

#include <cstdint>

namespace subnorm {

/// Size caps shared by all computations.
struct Config {
  /// Hard cap on |G|; larger groups are rejected at construction.
  std::uint64_t max_order = 1'000'000;
  /// Groups up to this order get a complete element store.
  std::uint64_t max_exhaustive = 200'000;
  /// Pair enumeration (degrees of nilpotence/solvability) cap.
  std::uint64_t max_pairs = 5'000;
  /// Worker threads for per-class work. Never affects results.
  unsigned jobs = 1;
};

}  // namespace subnorm
