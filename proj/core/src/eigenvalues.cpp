#include "derspec/eigenvalues.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

namespace derspec {

EigenvalueEngine::EigenvalueEngine() { memo_.emplace(Partition(), BigInt(1)); }

bool EigenvalueEngine::lookup(Partition const& p, BigInt& out) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(p);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void EigenvalueEngine::store(Partition const& p, BigInt const& value) {
  std::unique_lock lock(mutex_);
  memo_.insert_or_assign(p, value);
}

BigInt recurrence_step(Partition const& p, BigInt const& eta_minus_hook,
                       BigInt const& eta_minus_column) {
  if (p.empty()) return 1;
  unsigned const h = p.hook_size();
  BigInt inner = eta_minus_column * h;
  if (p.first() % 2 != 0) inner = -inner;
  inner += eta_minus_hook;
  if (h % 2 != 0) inner = -inner;
  return inner;
}

BigInt EigenvalueEngine::eta(Partition const& p) {
  BigInt value;
  if (lookup(p, value)) return value;
  BigInt const minus_hook = eta(remove_hook(p));
  BigInt const minus_column = eta(remove_first_column(p));
  value = recurrence_step(p, minus_hook, minus_column);
  store(p, value);
  return value;
}

EigenvalueRecord EigenvalueEngine::record(Partition const& p) {
  BigInt dim = dimension(p);
  return EigenvalueRecord{p, eta(p), dim * dim};
}

std::vector<EigenvalueRecord> EigenvalueEngine::spectrum(unsigned n) {
  std::vector<EigenvalueRecord> out;
  for (auto const& p : enumerate_partitions(n)) out.push_back(record(p));
  return out;
}

std::size_t EigenvalueEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void EigenvalueEngine::save_cache(std::filesystem::path const& path) const {
  std::map<Partition, BigInt> ordered;
  {
    std::shared_lock lock(mutex_);
    ordered.insert(memo_.begin(), memo_.end());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write cache file " + path.string());
  }
  for (auto const& [p, value] : ordered) {
    out << format_partition(p) << '\t' << to_decimal(value) << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed writing cache file " + path.string());
  }
}

CacheLoadResult EigenvalueEngine::load_cache(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read cache file " + path.string());
  }
  // Children are strictly smaller, so validating in size order lets every
  // entry lean on already-trusted values.
  std::map<Partition, BigInt> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected 'partition<TAB>value'");
    }
    try {
      entries.insert_or_assign(parse_partition(line.substr(0, tab)),
                               parse_decimal(line.substr(tab + 1)));
    } catch (std::invalid_argument const& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": " + e.what());
    }
  }

  CacheLoadResult result;
  for (auto const& [p, value] : entries) {
    BigInt expected = 1;
    if (!p.empty()) {
      expected = recurrence_step(p, eta(remove_hook(p)), eta(remove_first_column(p)));
    }
    if (expected != value) {
      result.rejected.push_back(p);
      continue;
    }
    store(p, value);
    ++result.accepted;
  }
  return result;
}

EigenvalueEngine& default_engine() {
  static EigenvalueEngine engine;
  return engine;
}

int alternating_sign(Partition const& p) {
  if (p.size() < 2) {
    throw std::invalid_argument("sign prediction needs |partition| >= 2");
  }
  return alternating(p.cells_below_first_row());
}

}  // namespace derspec
