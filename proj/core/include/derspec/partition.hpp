#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "derspec/bigint.hpp"

namespace derspec {

using Part = unsigned;

/// An integer partition stored as its weakly decreasing list of positive
/// parts. The empty partition is a valid value of size zero.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing with
  /// no zero entries.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  /// Sorts and drops zeros. For building partitions from arbitrary part
  /// multisets, e.g. after subtracting from the first row.
  static Partition from_unsorted(std::vector<Part> parts);

  /// One-row partition (n); empty when n == 0.
  static Partition row(Part n);

  /// Hook (first, 1^(n - first)).
  static Partition hook(Part first, Part n);

  std::span<Part const> parts() const { return parts_; }
  std::vector<Part> const& vector() const { return parts_; }

  /// Zero-based part access that reads 0 past the last row.
  Part part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Part first() const { return part(0); }

  unsigned size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Principal hook size first + length - 1. Zero for the empty partition.
  unsigned hook_size() const {
    return empty() ? 0 : first() + static_cast<unsigned>(length()) - 1;
  }

  /// Number of cells below the first row.
  unsigned cells_below_first_row() const { return size_ - first(); }

  bool operator==(Partition const&) const = default;

  /// Total order used for containers: by size, then lexicographic. Matches
  /// lex_compare on partitions of equal size.
  std::strong_ordering operator<=>(Partition const& other) const;

 private:
  std::vector<Part> parts_;
  unsigned size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(Partition const& p) const noexcept;
};

/// Parses "5,4^2,3^3,1" style text. Whitespace around tokens is ignored and
/// the empty string is the empty partition.
Partition parse_partition(std::string_view text);

/// Exponent notation; "p^a" is emitted only for a >= 2.
std::string format_partition(Partition const& p);

std::ostream& operator<<(std::ostream& os, Partition const& p);

/// All partitions of n in strictly decreasing lexicographic order, from (n)
/// to (1^n). n == 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(unsigned n);

/// Lexicographic comparison of two partitions of the same size. The first
/// differing part decides. Throws std::invalid_argument on size mismatch.
std::strong_ordering lex_compare(Partition const& lhs, Partition const& rhs);

/// Lexicographically largest partition of n with first part `first`:
/// as many rows of length `first` as fit, then the remainder.
Partition lex_largest_with_first_part(Part first, unsigned n);

// Ferrers-diagram surgery. All throw std::invalid_argument when the
// operation is undefined for the input.

/// Deletes the first row and the first column.
Partition remove_hook(Partition const& p);
Partition remove_first_column(Partition const& p);
/// Deletes the first `count` columns, 0 <= count <= first part.
Partition remove_columns(Partition const& p, unsigned count);
/// Deletes the first `count` rows, 0 <= count <= length.
Partition remove_rows(Partition const& p, std::size_t count);

struct HookProfile {
  /// Principal hook size: first part + length - 1.
  unsigned hook = 0;
  /// Entry i (zero based) is the principal hook size after stripping the
  /// first i columns, for i = 0 .. first part - 1.
  std::vector<unsigned> column_hooks;
};

/// Throws std::invalid_argument for the empty partition.
HookProfile hook_profile(Partition const& p);

/// Number of standard Young tableaux, via the hook length formula with an
/// exact division. dimension(empty) == 1.
BigInt dimension(Partition const& p);

}  // namespace derspec
