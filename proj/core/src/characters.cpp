#include "derspec/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "derspec/derangements.hpp"

namespace derspec {

std::vector<std::pair<Part, unsigned>> CycleType::multiplicities() const {
  std::vector<std::pair<Part, unsigned>> out;
  for (Part length : cycles_.parts()) {
    if (!out.empty() && out.back().first == length) {
      ++out.back().second;
    } else {
      out.emplace_back(length, 1);
    }
  }
  return out;
}

BigInt conjugacy_class_size(CycleType const& type) {
  BigInt centralizer = 1;
  for (auto [length, count] : type.multiplicities()) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), length, count);
    centralizer *= power * factorial(count);
  }
  return exact_div(factorial(type.degree()), centralizer, "class size");
}

std::vector<CycleType> derangement_cycle_types(unsigned n) {
  std::vector<CycleType> out;
  for (auto& p : enumerate_partitions(n)) {
    CycleType type(std::move(p));
    if (type.is_derangement()) out.push_back(std::move(type));
  }
  return out;
}

BigInt CharacterEvaluator::operator()(Partition const& shape,
                                      CycleType const& type) {
  if (shape.size() != type.degree()) {
    throw std::invalid_argument("character: shape and class have different sizes");
  }
  return evaluate(shape, type.cycles().vector(), 0);
}

BigInt CharacterEvaluator::evaluate(Partition const& shape,
                                    std::vector<Part> const& cycles,
                                    std::size_t next) {
  if (next == cycles.size()) return shape.empty() ? 1 : 0;

  auto key = std::make_pair(
      shape, Partition(std::vector<Part>(cycles.begin() + next, cycles.end())));
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  // Beta numbers: first-column hook lengths, strictly decreasing.
  std::size_t const rows = shape.length();
  std::vector<long> beta(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    beta[i] = static_cast<long>(shape.part(i) + (rows - 1 - i));
  }

  long const strip = cycles[next];
  BigInt total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    long const target = beta[i] - strip;
    if (target < 0 ||
        std::find(beta.begin(), beta.end(), target) != beta.end()) {
      continue;
    }
    // Rows the strip spans beyond its first = beta values jumped over.
    auto const height = std::count_if(beta.begin(), beta.end(), [&](long b) {
      return b > target && b < beta[i];
    });
    std::vector<long> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<Part> parts;
    for (std::size_t j = 0; j < rows; ++j) {
      long const part = moved[j] - static_cast<long>(rows - 1 - j);
      if (part > 0) parts.push_back(static_cast<Part>(part));
    }
    BigInt term = evaluate(Partition(std::move(parts)), cycles, next + 1);
    if (height % 2 != 0) term = -term;
    total += term;
  }

  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt eta_oracle(Partition const& shape, CharacterEvaluator& characters) {
  if (shape.empty()) {
    throw std::invalid_argument("eta_oracle needs a nonempty partition");
  }
  BigInt sum = 0;
  for (auto const& type : derangement_cycle_types(shape.size())) {
    sum += conjugacy_class_size(type) * characters(shape, type);
  }
  CycleType const identity(Partition(std::vector<Part>(shape.size(), 1)));
  return exact_div(sum, characters(shape, identity), "character sum / degree");
}

BigInt eta_oracle(Partition const& shape) {
  CharacterEvaluator characters;
  return eta_oracle(shape, characters);
}

}  // namespace derspec
