#include "derspec/derangements.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace derspec {

DerangementSequence::DerangementSequence() : memo_{BigInt(1), BigInt(0)} {}

BigInt DerangementSequence::operator()(unsigned n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < memo_.size()) return memo_[n];
  }
  std::unique_lock lock(mutex_);
  memo_.reserve(n + 1);
  while (memo_.size() <= n) {
    auto const k = static_cast<unsigned long>(memo_.size());
    BigInt next = memo_.back() * k;
    next += alternating(k);
    memo_.push_back(std::move(next));
  }
  return memo_[n];
}

std::size_t DerangementSequence::cached() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

BigInt derangement_number(unsigned n) {
  static DerangementSequence const sequence;
  return sequence(n);
}

BigInt derangement_count_bruteforce(unsigned n) {
  if (n > kBruteForceDerangementLimit) {
    throw std::out_of_range("brute-force derangement count supports n <= " +
                            std::to_string(kBruteForceDerangementLimit));
  }
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  unsigned long count = 0;
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n && !fixed; ++i) fixed = perm[i] == i;
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(count);
}

}  // namespace derspec
