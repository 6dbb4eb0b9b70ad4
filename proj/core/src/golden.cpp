#include "derspec/golden.hpp"

#include <sstream>
#include <stdexcept>

namespace derspec {

namespace detail {
extern std::string_view const kGoldenTablesTsv;
}

std::vector<GoldenRow> parse_golden_tables(std::string_view tsv) {
  std::vector<GoldenRow> rows;
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, '\t');) {
      fields.push_back(cell);
    }
    auto fail = [&](std::string const& why) {
      return std::runtime_error("golden tables line " + std::to_string(line_no) +
                                ": " + why);
    };
    if (fields.size() < 3 || fields.size() > 4) {
      throw fail("expected 3 or 4 tab-separated fields");
    }
    GoldenRow row;
    try {
      row.n = static_cast<unsigned>(std::stoul(fields[0]));
      row.partition = parse_partition(fields[1]);
      row.eta = parse_decimal(fields[2]);
    } catch (std::exception const& e) {
      throw fail(e.what());
    }
    if (row.partition.size() != row.n) {
      throw fail("partition " + fields[1] + " is not a partition of " + fields[0]);
    }
    if (fields.size() == 4) row.note = fields[3];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GoldenRow> const& golden_tables() {
  static std::vector<GoldenRow> const rows =
      parse_golden_tables(detail::kGoldenTablesTsv);
  return rows;
}

std::vector<GoldenRow> golden_rows(unsigned n) {
  std::vector<GoldenRow> out;
  for (auto const& row : golden_tables()) {
    if (row.n == n) out.push_back(row);
  }
  return out;
}

}  // namespace derspec
