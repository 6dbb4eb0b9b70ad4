#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "derspec/eigenvalues.hpp"
#include "derspec/verify.hpp"

namespace derspec {

enum class Format { json, csv, text };

/// "json", "csv" or "text"; anything else throws std::invalid_argument.
Format parse_format(std::string_view name);

/// Serialized form of one eigenvalue. Integers are decimal strings.
struct OutputRecord {
  unsigned n = 0;
  std::string partition;
  std::string eta;
  std::string multiplicity;
  std::string sign;  // "+", "-", or "0" when eta vanishes (n = 1)

  bool operator==(OutputRecord const&) const = default;
};

OutputRecord make_record(EigenvalueRecord const& record);
std::vector<OutputRecord> make_records(std::vector<EigenvalueRecord> const& records);

/// JSON: array of {n, partition, eta, multiplicity, sign}.
/// CSV: header "n,partition,eta,multiplicity,sign" then one row per record.
/// Text: "n = ..." caption and side-by-side (partition, eta, multiplicity)
/// columns read top to bottom, then left to right.
void write_records(std::ostream& out, std::vector<OutputRecord> const& records,
                   Format format);

/// Inverse of the CSV and JSON encodings; used to check round trips.
std::vector<OutputRecord> read_records_csv(std::string_view text);
std::vector<OutputRecord> read_records_json(std::string_view text);

/// Columns used by the text layout for a table of `rows` records.
std::size_t text_column_count(std::size_t rows);

void write_reports(std::ostream& out, std::vector<VerificationReport> const& reports,
                   Format format);

void write_hoffman(std::ostream& out, HoffmanBoundReport const& report, Format format);

}  // namespace derspec
