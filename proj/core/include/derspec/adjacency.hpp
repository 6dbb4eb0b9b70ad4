#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace derspec {

inline constexpr unsigned kAdjacencyMinDegree = 2;
inline constexpr unsigned kAdjacencyMaxDegree = 6;
inline constexpr double kAdjacencyRoundingTolerance = 1e-6;

/// One distinct eigenvalue of the adjacency matrix after rounding.
struct SpectrumEntry {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;
  /// Largest |computed - value| among the eigenvalues folded into this entry.
  double max_deviation = 0.0;
};

/// Builds the n! x n! adjacency matrix of the Cayley graph on S_n whose
/// connection set is the derangements, diagonalizes it in double precision,
/// and groups the eigenvalues by nearest integer. Ascending by value.
///
/// Throws std::out_of_range unless 2 <= n <= 6, and std::runtime_error if
/// some eigenvalue lies further than kAdjacencyRoundingTolerance from an
/// integer.
std::vector<SpectrumEntry> adjacency_spectrum_bruteforce(unsigned n);

}  // namespace derspec
