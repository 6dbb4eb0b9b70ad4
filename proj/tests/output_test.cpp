#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "derspec/output.hpp"
#include "json.hpp"

namespace derspec {
namespace {

std::string render(std::vector<OutputRecord> const& records, Format format) {
  std::ostringstream out;
  write_records(out, records, format);
  return out.str();
}

std::vector<OutputRecord> spectrum_records(unsigned n) {
  EigenvalueEngine engine;
  return make_records(engine.spectrum(n));
}

TEST(Output, ParseFormat) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Output, RecordFields) {
  EigenvalueEngine engine;
  auto const r = make_record(engine.record({5, 4, 4, 3, 3, 3, 1}));
  EXPECT_EQ(r.n, 23u);
  EXPECT_EQ(r.partition, "5,4^2,3^3,1");
  EXPECT_EQ(parse_decimal(r.eta), engine.eta({5, 4, 4, 3, 3, 3, 1}));
  EXPECT_EQ(r.sign, "+");
  EXPECT_EQ(make_record(engine.record({2, 1})).sign, "-");
  auto const one = make_record(engine.record({1}));
  EXPECT_EQ(one.eta, "0");
  EXPECT_EQ(one.sign, "0");
  auto const empty = make_record(engine.record({}));
  EXPECT_EQ(empty.partition, "");
  EXPECT_EQ(empty.eta, "1");
}

TEST(Output, CsvHeaderAndQuoting) {
  auto const text = render(spectrum_records(5), Format::csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n,partition,eta,multiplicity,sign");
  EXPECT_NE(text.find("5,\"4,1\",-11,16,-\n"), std::string::npos);
  EXPECT_NE(text.find("5,1^5,4,1,+\n"), std::string::npos);
}

TEST(Output, JsonUsesDecimalStrings) {
  auto const doc = nlohmann::json::parse(render(spectrum_records(22), Format::json));
  ASSERT_EQ(doc.size(), 1002u);
  EXPECT_EQ(doc[0]["n"], 22);
  EXPECT_TRUE(doc[0]["eta"].is_string());
  EXPECT_TRUE(doc[0]["multiplicity"].is_string());
  EXPECT_EQ(doc[0]["partition"], "22");
}

TEST(Output, EncodingsAgree) {
  for (unsigned n : {1u, 4u, 12u, 21u}) {
    auto const records = spectrum_records(n);
    EXPECT_EQ(read_records_csv(render(records, Format::csv)), records) << n;
    EXPECT_EQ(read_records_json(render(records, Format::json)), records) << n;
    // Every (partition, eta) appears in the text table.
    auto const text = render(records, Format::text);
    for (auto const& r : records) {
      EXPECT_NE(text.find(r.eta), std::string::npos);
      if (!r.partition.empty()) {
        EXPECT_NE(text.find(r.partition), std::string::npos);
      }
    }
  }
}

TEST(Output, TextLayoutColumns) {
  EXPECT_EQ(text_column_count(2), 1u);
  EXPECT_EQ(text_column_count(3), 1u);
  EXPECT_EQ(text_column_count(5), 2u);
  EXPECT_EQ(text_column_count(30), 2u);
  EXPECT_EQ(text_column_count(176), 4u);
  auto const text = render(spectrum_records(5), Format::text);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n = 5");
  std::getline(in, line);  // rule
  std::getline(in, line);  // header
  EXPECT_EQ(std::count(line.begin(), line.end(), '|'), 1);
  std::getline(in, line);  // rule
  std::getline(in, line);
  // Column-major: (5) on the left, (2^2,1) beside it.
  EXPECT_NE(line.find("44"), std::string::npos);
  EXPECT_NE(line.find("2^2,1"), std::string::npos);
}

TEST(Output, Reports) {
  VerificationReport report;
  report.check_name = "demo";
  report.n = 3;
  report.cases = 2;
  report.violations.push_back({{Partition{1, 1, 1}, Partition{2, 1}}, 2, 1, "<=", "why, exactly"});
  report.findings.push_back({{Partition{3}}, 2, 2, "==", ""});

  std::ostringstream json_out;
  write_reports(json_out, {report}, Format::json);
  auto const doc = nlohmann::json::parse(json_out.str());
  EXPECT_EQ(doc[0]["status"], "fail");
  EXPECT_EQ(doc[0]["violations"][0]["partitions"][0], "1^3");
  EXPECT_EQ(doc[0]["violations"][0]["lhs"], "2");
  EXPECT_EQ(doc[0]["findings"].size(), 1u);

  std::ostringstream csv_out;
  write_reports(csv_out, {report}, Format::csv);
  EXPECT_NE(csv_out.str().find(
                "demo,3,fail,2,violation,\"(1^3) (2,1)\",2,<=,1,\"why, exactly\"\n"),
            std::string::npos);

  std::ostringstream text_out;
  write_reports(text_out, {report}, Format::text);
  EXPECT_NE(text_out.str().find("demo n=3: FAIL"), std::string::npos);
  EXPECT_NE(text_out.str().find("violation: (1^3) (2,1)  2 <= 1"), std::string::npos);
}

TEST(Output, Hoffman) {
  EigenvalueEngine engine;
  TheoremVerifier verifier(engine);
  std::ostringstream out;
  write_hoffman(out, verifier.hoffman_bound(5), Format::json);
  auto const doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["bound"], "24");
  EXPECT_EQ(doc["smallest"], "-11");
  EXPECT_EQ(doc["tight"], true);
}

}  // namespace
}  // namespace derspec
