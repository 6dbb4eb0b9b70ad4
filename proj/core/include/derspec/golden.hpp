#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "derspec/bigint.hpp"
#include "derspec/partition.hpp"

namespace derspec {

/// One row of the reference eigenvalue tables.
struct GoldenRow {
  unsigned n = 0;
  Partition partition;
  BigInt eta;
  std::string note;
};

/// Parses tab-separated "n, partition, eta[, note]" rows; '#' starts a
/// comment line. Throws std::runtime_error on malformed rows or when a
/// partition's size disagrees with its n column.
std::vector<GoldenRow> parse_golden_tables(std::string_view tsv);

/// The corpus compiled into the library.
std::vector<GoldenRow> const& golden_tables();

/// Rows of the embedded corpus for one n (possibly empty).
std::vector<GoldenRow> golden_rows(unsigned n);

}  // namespace derspec
