#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "derspec/characters.hpp"
#include "derspec/derangements.hpp"
#include "derspec/eigenvalues.hpp"

namespace derspec {
namespace {

// Ways to distribute the cycles of a class among rows so that row i receives
// total length exactly sizes[i]: the permutation character of the Young
// subgroup S_sizes at that class.
long young_character(std::vector<long> sizes, std::vector<Part> const& cycles,
                     std::size_t next = 0) {
  if (next == cycles.size()) {
    return std::all_of(sizes.begin(), sizes.end(), [](long s) { return s == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& s : sizes) {
    if (s >= static_cast<long>(cycles[next])) {
      s -= cycles[next];
      total += young_character(sizes, cycles, next + 1);
      s += cycles[next];
    }
  }
  return total;
}

// Jacobi-Trudi: chi_l = sum over sigma in S_r of sgn(sigma) times the Young
// character for the composition (l_i - i + sigma(i)).
long jacobi_trudi_character(Partition const& shape, CycleType const& type) {
  std::size_t const r = shape.length();
  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  long total = 0;
  do {
    std::vector<long> sizes(r);
    bool valid = true;
    for (std::size_t i = 0; i < r; ++i) {
      sizes[i] = static_cast<long>(shape.part(i)) - static_cast<long>(i) +
                 static_cast<long>(sigma[i]);
      valid = valid && sizes[i] >= 0;
    }
    if (!valid) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) inversions += sigma[i] > sigma[j];
    }
    long const term = young_character(sizes, type.cycles().vector());
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// Cycle type of every permutation of {0..n-1}, tallied.
std::map<Partition, long> class_sizes_by_enumeration(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::map<Partition, long> counts;
  do {
    std::vector<bool> seen(n);
    std::vector<Part> cycles;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      Part length = 0;
      for (unsigned j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++length;
      }
      cycles.push_back(length);
    }
    ++counts[Partition::from_unsorted(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

TEST(CycleType, ClassSizes) {
  EXPECT_EQ(conjugacy_class_size(CycleType({5})), 24);
  EXPECT_EQ(conjugacy_class_size(CycleType({3, 2})), 20);
  EXPECT_EQ(conjugacy_class_size(CycleType({1, 1, 1, 1})), 1);
  for (unsigned n = 1; n <= 8; ++n) {
    for (auto const& [cycles, count] : class_sizes_by_enumeration(n)) {
      EXPECT_EQ(conjugacy_class_size(CycleType(cycles)), count) << cycles;
    }
  }
}

TEST(CycleType, DerangementClasses) {
  auto const five = derangement_cycle_types(5);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[0], CycleType({5}));
  EXPECT_EQ(five[1], CycleType({3, 2}));
  EXPECT_EQ(derangement_cycle_types(2).size(), 1u);
  EXPECT_EQ(derangement_cycle_types(9).size(), 8u);
  EXPECT_FALSE(CycleType({3, 1}).is_derangement());
  for (unsigned n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (auto const& type : derangement_cycle_types(n)) {
      EXPECT_TRUE(type.is_derangement());
      total += conjugacy_class_size(type);
    }
    EXPECT_EQ(total, derangement_number(n)) << n;
  }
}

TEST(Characters, KnownValues) {
  CharacterEvaluator chi;
  for (unsigned n = 1; n <= 8; ++n) {
    for (auto const& mu : enumerate_partitions(n)) {
      CycleType const type(mu);
      EXPECT_EQ(chi(Partition::row(n), type), 1);
      EXPECT_EQ(chi(Partition::hook(1, n), type), alternating(n - mu.length()));
    }
  }
  EXPECT_EQ(chi({3, 2}, CycleType({2, 2, 1})), 1);
  EXPECT_EQ(chi({}, CycleType(Partition{})), 1);
  EXPECT_THROW(chi({3, 2}, CycleType({4})), std::invalid_argument);
}

TEST(Characters, IdentityClassGivesDimension) {
  CharacterEvaluator chi;
  for (unsigned n = 1; n <= 10; ++n) {
    CycleType const identity(Partition(std::vector<Part>(n, 1)));
    for (auto const& p : enumerate_partitions(n)) EXPECT_EQ(chi(p, identity), dimension(p));
  }
}

TEST(Characters, MatchJacobiTrudiUpTo7) {
  CharacterEvaluator chi;
  for (unsigned n = 1; n <= 7; ++n) {
    auto const parts = enumerate_partitions(n);
    for (auto const& shape : parts) {
      for (auto const& mu : parts) {
        CycleType const type(mu);
        EXPECT_EQ(chi(shape, type), jacobi_trudi_character(shape, type)) << shape << mu;
      }
    }
  }
}

TEST(Characters, ColumnOrthogonalityUpTo7) {
  CharacterEvaluator chi;
  for (unsigned n = 1; n <= 7; ++n) {
    auto const parts = enumerate_partitions(n);
    for (auto const& mu : parts) {
      for (auto const& nu : parts) {
        BigInt sum = 0;
        for (auto const& shape : parts) sum += chi(shape, CycleType(mu)) * chi(shape, CycleType(nu));
        if (mu == nu) {
          // |centralizer| = n! / class size
          EXPECT_EQ(sum * conjugacy_class_size(CycleType(mu)), factorial(n)) << mu;
        } else {
          EXPECT_EQ(sum, 0) << mu << nu;
        }
      }
    }
  }
}

TEST(EtaOracle, Examples) {
  EXPECT_EQ(eta_oracle({3, 2}), 4);
  EXPECT_EQ(eta_oracle({2, 1}), -1);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(eta_oracle(Partition::row(n)), derangement_number(n));
  EXPECT_THROW(eta_oracle({}), std::invalid_argument);
}

TEST(EtaOracle, AgreesWithRecurrenceUpTo9) {
  CharacterEvaluator chi;
  EigenvalueEngine engine;
  for (unsigned n = 1; n <= 9; ++n) {
    for (auto const& p : enumerate_partitions(n)) EXPECT_EQ(eta_oracle(p, chi), engine.eta(p)) << p;
  }
}

}  // namespace
}  // namespace derspec
