#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "derspec/bigint.hpp"

namespace derspec {

/// Memoized derangement numbers D_0, D_1, ... grown on demand with
/// D_n = n * D_{n-1} + (-1)^n. Safe for concurrent use: reads share a lock,
/// growth is serialized.
class DerangementSequence {
 public:
  DerangementSequence();

  BigInt operator()(unsigned n) const;

  /// Number of populated entries.
  std::size_t cached() const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> memo_;
};

/// D_n from a process-wide sequence.
BigInt derangement_number(unsigned n);

inline constexpr unsigned kBruteForceDerangementLimit = 9;

/// Counts fixed-point-free permutations of {0..n-1} by enumeration.
/// Throws std::out_of_range for n > kBruteForceDerangementLimit.
BigInt derangement_count_bruteforce(unsigned n);

}  // namespace derspec
