#pragma once

#include <cstddef>
#include <filesystem>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "derspec/bigint.hpp"
#include "derspec/partition.hpp"

namespace derspec {

/// Eigenvalue of the derangement graph indexed by a partition, together with
/// its multiplicity dimension(partition)^2.
struct EigenvalueRecord {
  Partition partition;
  BigInt eta;
  BigInt multiplicity;
};

/// Outcome of loading an on-disk memo file.
struct CacheLoadResult {
  std::size_t accepted = 0;
  /// Entries whose value disagreed with the recurrence applied to their
  /// (already validated or recomputed) children. They are not stored.
  std::vector<Partition> rejected;
};

/// Evaluates eta through the hook/column recurrence
///
///   eta(l) = (-1)^h * (eta(l - hook) + (-1)^{l_1} * h * eta(l - column))
///
/// with eta(empty) = 1, memoizing every partition it touches. The memo is
/// keyed by partition, so a single engine serves every n.
///
/// Thread safety: eta() may be called concurrently. Lookups take a shared
/// lock; inserts take an exclusive one, and racing writers store the same
/// value.
class EigenvalueEngine {
 public:
  EigenvalueEngine();

  BigInt eta(Partition const& p);

  EigenvalueRecord record(Partition const& p);

  /// Full spectrum of the derangement graph on S_n, in descending
  /// lexicographic partition order.
  std::vector<EigenvalueRecord> spectrum(unsigned n);

  std::size_t memo_size() const;

  /// Writes every memo entry as "partition<TAB>decimal" lines, ordered by
  /// size then lexicographically.
  void save_cache(std::filesystem::path const& path) const;

  /// Reads a file written by save_cache. Each entry is trusted only if it
  /// satisfies the recurrence against its two children; missing children are
  /// computed. Malformed lines throw std::runtime_error naming the line.
  CacheLoadResult load_cache(std::filesystem::path const& path);

 private:
  bool lookup(Partition const& p, BigInt& out) const;
  void store(Partition const& p, BigInt const& value);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Partition, BigInt, PartitionHash> memo_;
};

/// One application of the recurrence given the two child values.
BigInt recurrence_step(Partition const& p, BigInt const& eta_minus_hook,
                       BigInt const& eta_minus_column);

/// Process-wide engine used by the free eta() helper.
EigenvalueEngine& default_engine();

inline BigInt eta(Partition const& p) { return default_engine().eta(p); }

/// Sign of eta predicted from shape alone: (-1)^(cells below the first row).
/// Throws std::invalid_argument for |p| < 2, where eta may vanish.
int alternating_sign(Partition const& p);

}  // namespace derspec
