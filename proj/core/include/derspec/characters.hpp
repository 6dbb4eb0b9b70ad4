#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "derspec/bigint.hpp"
#include "derspec/partition.hpp"

namespace derspec {

/// A conjugacy class of S_n named by its cycle lengths.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

  Partition const& cycles() const { return cycles_; }
  unsigned degree() const { return cycles_.size(); }

  /// No fixed points, i.e. every cycle has length at least two.
  bool is_derangement() const {
    return cycles_.empty() || cycles_.parts().back() >= 2;
  }

  /// Pairs (cycle length, how many cycles have that length), longest first.
  std::vector<std::pair<Part, unsigned>> multiplicities() const;

  bool operator==(CycleType const&) const = default;

 private:
  Partition cycles_;
};

/// n! / prod_j (j^{m_j} m_j!).
BigInt conjugacy_class_size(CycleType const& type);

/// Cycle types of S_n with no fixed points, in descending lexicographic order.
std::vector<CycleType> derangement_cycle_types(unsigned n);

/// Irreducible characters of S_n by the Murnaghan-Nakayama rule: border
/// strips of length equal to the longest remaining cycle are peeled off in
/// turn, each contributing (-1)^(rows spanned - 1).
///
/// Results are memoized per (shape, remaining cycles). The memo is guarded by
/// a mutex so one evaluator can be shared across threads.
class CharacterEvaluator {
 public:
  /// chi_shape evaluated on the class `type`. Throws std::invalid_argument
  /// when the sizes differ.
  BigInt operator()(Partition const& shape, CycleType const& type);

 private:
  BigInt evaluate(Partition const& shape, std::vector<Part> const& cycles,
                  std::size_t next);

  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, BigInt> memo_;
};

/// Eigenvalue from first principles:
///   (sum over derangement classes of size * chi(class)) / chi(identity),
/// with the division checked exact. Requires |shape| >= 1.
BigInt eta_oracle(Partition const& shape, CharacterEvaluator& characters);
BigInt eta_oracle(Partition const& shape);

}  // namespace derspec
