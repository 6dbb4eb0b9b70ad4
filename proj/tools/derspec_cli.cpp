// derspec: spectra of the derangement graph from the command line.
//
//   derspec spectrum --n 8 --format csv
//   derspec eta --partition 6,4
//   derspec verify --n 11 --checks asp,lexscan --jobs 4
//
// Exit status: 0 when everything requested succeeded (for verify: every
// selected check passed), 1 when a check failed, 2 on bad input.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "derspec/adjacency.hpp"
#include "derspec/eigenvalues.hpp"
#include "derspec/output.hpp"
#include "derspec/verify.hpp"

namespace {

constexpr unsigned kOracleLimit = 10;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_checks(std::string const& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto const begin = item.find_first_not_of(" \t");
    auto const end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) continue;
    out.push_back(item.substr(begin, end - begin + 1));
  }
  return out;
}

void require_known(std::vector<std::string> const& checks) {
  auto const& known = derspec::check_names();
  for (auto const& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      std::string list;
      for (auto const& k : known) list += (list.empty() ? "" : ", ") + k;
      throw UsageError("unknown check '" + c + "'; known checks: " + list);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eigenvalues of the derangement graph"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_file;
  unsigned jobs = 1;
  bool allow_slow = false;
  app.add_option("--cache-file", cache_file,
                 "Memo file: validated and loaded if present, rewritten on exit");
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--allow-slow", allow_slow,
               "Permit the character oracle above n=10 and the adjacency check");

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  unsigned n = 0;
  auto* spectrum = app.add_subcommand("spectrum", "All eigenvalues of the graph on S_n");
  spectrum->add_option("--n,n", n, "Degree of the symmetric group")->required();
  add_format(spectrum);

  std::string partition_text;
  auto* eta_cmd = app.add_subcommand("eta", "Eigenvalue for one partition");
  eta_cmd->add_option("--partition,partition", partition_text,
                      "Parts like 5,4^2,1; empty for the empty partition")
      ->required();
  add_format(eta_cmd);

  std::string checks_text = "asp,main2,main3,lexscan,minimum,trace,conjecture,hoffman,golden";
  auto* verify = app.add_subcommand("verify", "Run theorem checks over all partitions of n");
  verify->add_option("--n,n", n, "Degree of the symmetric group (>= 2)")->required();
  verify->add_option("--checks", checks_text, "Comma-separated check names");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    derspec::Format const format = derspec::parse_format(format_name);
    derspec::EigenvalueEngine engine;
    if (!cache_file.empty() && std::filesystem::exists(cache_file)) {
      auto const loaded = engine.load_cache(cache_file);
      if (!loaded.rejected.empty()) {
        std::cerr << "cache: rejected " << loaded.rejected.size()
                  << " inconsistent entries, first " << loaded.rejected.front() << '\n';
      }
    }

    int status = 0;
    if (*spectrum) {
      if (n < 1) throw UsageError("spectrum needs n >= 1");
      derspec::write_records(std::cout, derspec::make_records(engine.spectrum(n)), format);
    } else if (*eta_cmd) {
      auto const record = derspec::make_record(engine.record(derspec::parse_partition(partition_text)));
      if (format == derspec::Format::text) {
        std::cout << "(" << record.partition << ")  eta=" << record.eta
                  << "  multiplicity=" << record.multiplicity << "  sign=" << record.sign
                  << '\n';
      } else {
        derspec::write_records(std::cout, {record}, format);
      }
    } else if (*verify) {
      if (n < 2) throw UsageError("verify needs n >= 2");
      auto const checks = split_checks(checks_text);
      if (checks.empty()) throw UsageError("no checks selected");
      require_known(checks);
      for (auto const& c : checks) {
        if (c == "oracle" && n > kOracleLimit && !allow_slow) {
          throw UsageError("oracle above n=" + std::to_string(kOracleLimit) +
                           " needs --allow-slow");
        }
        if (c == "adjacency") {
          if (!allow_slow) throw UsageError("adjacency needs --allow-slow");
          if (n > derspec::kAdjacencyMaxDegree) {
            throw UsageError("adjacency needs n <= " +
                             std::to_string(derspec::kAdjacencyMaxDegree));
          }
        }
      }
      derspec::TheoremVerifier verifier(engine, jobs);
      std::vector<derspec::VerificationReport> reports;
      for (auto const& c : checks) reports.push_back(verifier.run(c, n));
      derspec::write_reports(std::cout, reports, format);
      if (format == derspec::Format::text &&
          std::find(checks.begin(), checks.end(), "hoffman") != checks.end()) {
        derspec::write_hoffman(std::cout, verifier.hoffman_bound(n), format);
      }
      for (auto const& r : reports) {
        if (!r.passed()) status = kExitFailed;
      }
    }

    if (!cache_file.empty()) engine.save_cache(cache_file);
    return status;
  } catch (UsageError const& e) {
    std::cerr << "derspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "derspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "derspec: error: " << e.what() << '\n';
    return kExitUsage;
  }
}
