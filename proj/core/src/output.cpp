#include "derspec/output.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace derspec {

namespace {

using nlohmann::json;

std::string csv_field(std::string const& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one CSV line with RFC 4180 quoting.
std::vector<std::string> split_csv_line(std::string const& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char const c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in CSV line");
  return fields;
}

std::string shape_text(Partition const& p) {
  return "(" + format_partition(p) + ")";
}

std::string shapes_text(std::vector<Partition> const& parts) {
  std::string out;
  for (auto const& p : parts) {
    if (!out.empty()) out += ' ';
    out += shape_text(p);
  }
  return out;
}

json evidence_json(Evidence const& e) {
  json parts = json::array();
  for (auto const& p : e.partitions) parts.push_back(format_partition(p));
  return {{"partitions", parts},
          {"lhs", to_decimal(e.lhs)},
          {"relation", e.relation},
          {"rhs", to_decimal(e.rhs)},
          {"detail", e.detail}};
}

std::string status_text(VerificationReport const& r) { return r.passed() ? "pass" : "fail"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected json, csv or text)");
}

OutputRecord make_record(EigenvalueRecord const& record) {
  OutputRecord out;
  out.n = record.partition.size();
  out.partition = format_partition(record.partition);
  out.eta = to_decimal(record.eta);
  out.multiplicity = to_decimal(record.multiplicity);
  int const s = sgn(record.eta);
  out.sign = s > 0 ? "+" : s < 0 ? "-" : "0";
  return out;
}

std::vector<OutputRecord> make_records(std::vector<EigenvalueRecord> const& records) {
  std::vector<OutputRecord> out;
  out.reserve(records.size());
  for (auto const& r : records) out.push_back(make_record(r));
  return out;
}

std::size_t text_column_count(std::size_t rows) {
  if (rows <= 3) return 1;
  if (rows <= 30) return 2;
  return 4;
}

void write_records(std::ostream& out, std::vector<OutputRecord> const& records,
                   Format format) {
  switch (format) {
    case Format::json: {
      json doc = json::array();
      for (auto const& r : records) {
        doc.push_back({{"n", r.n},
                       {"partition", r.partition},
                       {"eta", r.eta},
                       {"multiplicity", r.multiplicity},
                       {"sign", r.sign}});
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv:
      out << "n,partition,eta,multiplicity,sign\n";
      for (auto const& r : records) {
        out << r.n << ',' << csv_field(r.partition) << ',' << r.eta << ','
            << r.multiplicity << ',' << r.sign << '\n';
      }
      return;
    case Format::text: {
      if (records.empty()) return;
      std::size_t const columns = text_column_count(records.size());
      std::size_t const height = (records.size() + columns - 1) / columns;
      std::size_t shape_width = 6, eta_width = 3, mult_width = 4;
      for (auto const& r : records) {
        shape_width = std::max(shape_width, r.partition.size());
        eta_width = std::max(eta_width, r.eta.size());
        mult_width = std::max(mult_width, r.multiplicity.size());
      }
      auto cell = [&](std::string const& shape, std::string const& eta,
                      std::string const& mult) {
        std::ostringstream s;
        s << std::right << std::setw(static_cast<int>(shape_width)) << shape << "  "
          << std::setw(static_cast<int>(eta_width)) << eta << "  "
          << std::setw(static_cast<int>(mult_width)) << mult;
        return s.str();
      };
      std::string const blank(cell("", "", "").size(), ' ');
      std::string rule;

      out << "n = " << records.front().n << '\n';
      std::string header;
      for (std::size_t c = 0; c < columns; ++c) {
        if (c) header += " | ";
        header += cell("lambda", "eta", "mult");
      }
      rule.assign(header.size(), '-');
      out << rule << '\n' << header << '\n' << rule << '\n';
      for (std::size_t row = 0; row < height; ++row) {
        std::string line;
        for (std::size_t c = 0; c < columns; ++c) {
          std::size_t const i = c * height + row;
          if (c) line += " | ";
          line += i < records.size()
                      ? cell(records[i].partition.empty() ? "0" : records[i].partition,
                             records[i].eta, records[i].multiplicity)
                      : blank;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      }
      out << rule << '\n';
      return;
    }
  }
}

std::vector<OutputRecord> read_records_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "n,partition,eta,multiplicity,sign") {
    throw std::runtime_error("CSV header missing");
  }
  std::vector<OutputRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 5) throw std::runtime_error("CSV row needs 5 fields: " + line);
    out.push_back({static_cast<unsigned>(std::stoul(fields[0])), fields[1], fields[2],
                   fields[3], fields[4]});
  }
  return out;
}

std::vector<OutputRecord> read_records_json(std::string_view text) {
  auto const doc = json::parse(text);
  std::vector<OutputRecord> out;
  for (auto const& r : doc) {
    out.push_back({r.at("n").get<unsigned>(), r.at("partition").get<std::string>(),
                   r.at("eta").get<std::string>(), r.at("multiplicity").get<std::string>(),
                   r.at("sign").get<std::string>()});
  }
  return out;
}

void write_reports(std::ostream& out, std::vector<VerificationReport> const& reports,
                   Format format) {
  switch (format) {
    case Format::json: {
      json doc = json::array();
      for (auto const& r : reports) {
        json violations = json::array();
        json findings = json::array();
        for (auto const& e : r.violations) violations.push_back(evidence_json(e));
        for (auto const& e : r.findings) findings.push_back(evidence_json(e));
        doc.push_back({{"check", r.check_name},
                       {"n", r.n},
                       {"status", status_text(r)},
                       {"cases", r.cases},
                       {"elapsed_seconds", r.elapsed.count()},
                       {"violations", violations},
                       {"findings", findings}});
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      out << "check,n,status,cases,kind,partitions,lhs,relation,rhs,detail\n";
      for (auto const& r : reports) {
        std::string const head = r.check_name + ',' + std::to_string(r.n) + ',' +
                                 status_text(r) + ',' + std::to_string(r.cases) + ',';
        auto row = [&](char const* kind, Evidence const& e) {
          std::string parts;
          for (auto const& p : e.partitions) {
            if (!parts.empty()) parts += ' ';
            parts += shape_text(p);
          }
          out << head << kind << ',' << csv_field(parts) << ',' << to_decimal(e.lhs) << ','
              << csv_field(e.relation) << ',' << to_decimal(e.rhs) << ','
              << csv_field(e.detail) << '\n';
        };
        if (r.violations.empty() && r.findings.empty()) out << head << ",,,,,\n";
        for (auto const& e : r.violations) row("violation", e);
        for (auto const& e : r.findings) row("finding", e);
      }
      return;
    }
    case Format::text:
      for (auto const& r : reports) {
        out << r.check_name << " n=" << r.n << ": " << (r.passed() ? "PASS" : "FAIL")
            << " (" << r.cases << " cases";
        if (!r.findings.empty()) out << ", " << r.findings.size() << " findings";
        out << ", " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s)\n";
        out.unsetf(std::ios::floatfield);
        auto line = [&](char const* kind, Evidence const& e) {
          out << "  " << kind << ": " << shapes_text(e.partitions) << "  "
              << to_decimal(e.lhs) << ' ' << e.relation << ' ' << to_decimal(e.rhs);
          if (!e.detail.empty()) out << "  [" << e.detail << ']';
          out << '\n';
        };
        for (auto const& e : r.violations) line("violation", e);
        for (auto const& e : r.findings) line("finding", e);
      }
      return;
  }
}

void write_hoffman(std::ostream& out, HoffmanBoundReport const& h, Format format) {
  switch (format) {
    case Format::json:
      out << json{{"n", h.n},
                  {"degree", to_decimal(h.degree)},
                  {"vertices", to_decimal(h.vertices)},
                  {"smallest", to_decimal(h.smallest)},
                  {"bound", h.bound.get_str()},
                  {"attained", to_decimal(h.attained)},
                  {"tight", h.tight()}}
                 .dump(2)
          << '\n';
      return;
    case Format::csv:
      out << "n,degree,vertices,smallest,bound,attained,tight\n"
          << h.n << ',' << to_decimal(h.degree) << ',' << to_decimal(h.vertices) << ','
          << to_decimal(h.smallest) << ',' << h.bound.get_str() << ','
          << to_decimal(h.attained) << ',' << (h.tight() ? "true" : "false") << '\n';
      return;
    case Format::text:
      out << "n=" << h.n << " degree=" << to_decimal(h.degree)
          << " vertices=" << to_decimal(h.vertices) << " smallest=" << to_decimal(h.smallest)
          << " bound=" << h.bound.get_str() << " (n-1)!=" << to_decimal(h.attained)
          << (h.tight() ? " tight" : " not tight") << '\n';
      return;
  }
}

}  // namespace derspec
