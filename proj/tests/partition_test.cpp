#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "derspec/partition.hpp"

namespace derspec {
namespace {

// p(n, largest part <= m), by the textbook recursion. Independent of
// enumerate_partitions.
unsigned long count_partitions(unsigned n, unsigned m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  unsigned long total = 0;
  for (unsigned k = 1; k <= std::min(n, m); ++k) total += count_partitions(n - k, k);
  return total;
}

// Standard Young tableaux counted by removing a corner holding the largest
// entry, recursively. Independent of the hook length formula.
unsigned long count_tableaux(std::vector<unsigned> shape,
                             std::map<std::vector<unsigned>, unsigned long>& memo) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  unsigned long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    bool const corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_tableaux(smaller, memo);
  }
  memo[shape] = total;
  return total;
}

TEST(Partition, RejectsNonCanonicalParts) {
  EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Partition, EmptyPartition) {
  Partition const empty;
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(empty.length(), 0u);
  EXPECT_EQ(format_partition(empty), "");
}

TEST(Partition, FromUnsortedDropsZeros) {
  EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 2}), (Partition{3, 2, 1}));
  EXPECT_EQ(Partition::hook(3, 5), (Partition{3, 1, 1}));
  EXPECT_EQ(Partition::row(0), Partition{});
}

TEST(ParsePartition, ExponentNotation) {
  EXPECT_EQ(parse_partition("5,4^2,3^3,1"), (Partition{5, 4, 4, 3, 3, 3, 1}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_partition("3,1^2"), (Partition{3, 1, 1}));
  EXPECT_EQ(parse_partition(" 4 , 2^1 "), (Partition{4, 2}));
}

TEST(ParsePartition, Errors) {
  for (char const* bad : {"1,2", "0", "3,0", "a", "3,,1", "3^", "^2", "3^0", "2^2,3", "-1",
                          "3^2^2"}) {
    EXPECT_THROW(parse_partition(bad), std::invalid_argument) << bad;
  }
}

TEST(FormatPartition, UsesExponentsOnlyForRepeats) {
  EXPECT_EQ(format_partition({5, 4, 4, 3, 3, 3, 1}), "5,4^2,3^3,1");
  EXPECT_EQ(format_partition({2, 1}), "2,1");
  std::ostringstream os;
  os << Partition{2, 2};
  EXPECT_EQ(os.str(), "(2^2)");
}

TEST(FormatPartition, RoundTripsEveryPartitionUpTo12) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      auto const text = format_partition(p);
      EXPECT_EQ(parse_partition(text), p);
      EXPECT_EQ(format_partition(parse_partition(text)), text);
    }
  }
}

TEST(EnumeratePartitions, SmallCases) {
  EXPECT_EQ(enumerate_partitions(4),
            (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(15).size(), 176u);
}

TEST(EnumeratePartitions, CountsAndOrderMatchIndependentCounter) {
  for (unsigned n = 1; n <= 25; ++n) {
    auto const parts = enumerate_partitions(n);
    ASSERT_EQ(parts.size(), count_partitions(n, n)) << n;
    EXPECT_EQ(parts.front(), Partition::row(n));
    EXPECT_EQ(parts.back(), Partition::hook(1, n));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      EXPECT_EQ(lex_compare(parts[i], parts[i + 1]), std::strong_ordering::greater);
      EXPECT_EQ(parts[i].size(), n);
    }
  }
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare({7, 4, 1, 1, 1, 1}, {7, 3, 3, 2}), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare({2, 2}, {2, 2}), std::strong_ordering::equal);
  EXPECT_EQ(lex_compare({2, 1, 1}, {2, 2}), std::strong_ordering::less);
  EXPECT_THROW(lex_compare({2}, {2, 1}), std::invalid_argument);
}

TEST(LexLargest, FillsWithFirstPart) {
  EXPECT_EQ(lex_largest_with_first_part(4, 15), (Partition{4, 4, 4, 3}));
  EXPECT_EQ(lex_largest_with_first_part(3, 9), (Partition{3, 3, 3}));
  EXPECT_EQ(lex_largest_with_first_part(7, 7), (Partition{7}));
  for (unsigned n = 1; n <= 14; ++n) {
    auto const parts = enumerate_partitions(n);
    for (Part first = 1; first <= n; ++first) {
      // The first partition listed with this first part is the largest.
      auto it = std::find_if(parts.begin(), parts.end(),
                             [&](Partition const& p) { return p.first() == first; });
      EXPECT_EQ(lex_largest_with_first_part(first, n), *it);
    }
  }
}

TEST(Surgery, RemoveHook) {
  EXPECT_EQ(remove_hook({6, 4}), (Partition{3}));
  EXPECT_EQ(remove_hook({7}), Partition{});
  EXPECT_EQ(remove_hook({5, 3, 2}), (Partition{2, 1}));
  EXPECT_THROW(remove_hook({}), std::invalid_argument);
}

TEST(Surgery, RemoveColumns) {
  EXPECT_EQ(remove_first_column({2, 2}), (Partition{1, 1}));
  EXPECT_EQ(remove_first_column({1, 1, 1}), Partition{});
  EXPECT_EQ(remove_first_column({6, 4}), (Partition{5, 3}));
  EXPECT_THROW(remove_first_column({}), std::invalid_argument);
  EXPECT_EQ(remove_columns({3, 2}, 0), (Partition{3, 2}));
  EXPECT_EQ(remove_columns({3, 2}, 2), (Partition{1}));
  EXPECT_EQ(remove_columns({3, 2}, 3), Partition{});
  EXPECT_THROW(remove_columns({3, 2}, 4), std::invalid_argument);
}

TEST(Surgery, RemoveRows) {
  EXPECT_EQ(remove_rows({5, 3, 2}, 1), (Partition{3, 2}));
  EXPECT_EQ(remove_rows({5, 3, 2}, 3), Partition{});
  EXPECT_THROW(remove_rows({5, 3, 2}, 4), std::invalid_argument);
  EXPECT_EQ(remove_rows(remove_first_column({5, 3, 2}), 1), remove_hook({5, 3, 2}));
}

TEST(Surgery, IdentitiesHoldForAllPartitionsUpTo12) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      // For a single column, stripping it leaves no row to delete.
      if (p.first() == 1) {
        EXPECT_EQ(remove_hook(p), Partition{});
        EXPECT_THROW(remove_rows(remove_first_column(p), 1), std::invalid_argument);
      } else {
        EXPECT_EQ(remove_hook(p), remove_rows(remove_first_column(p), 1));
      }
      EXPECT_EQ(remove_hook(p).size(), n - hook_profile(p).hook);
      EXPECT_EQ(remove_columns(p, p.first()), Partition{});
      EXPECT_EQ(remove_rows(p, p.length()), Partition{});
    }
  }
}

TEST(HookProfile, Examples) {
  auto const square = hook_profile({2, 2});
  EXPECT_EQ(square.hook, 3u);
  EXPECT_EQ(square.column_hooks, (std::vector<unsigned>{3, 2}));
  auto const row = hook_profile(Partition::row(5));
  EXPECT_EQ(row.hook, 5u);
  EXPECT_EQ(row.column_hooks, (std::vector<unsigned>{5, 4, 3, 2, 1}));
  EXPECT_EQ(hook_profile({1, 1}).column_hooks, (std::vector<unsigned>{2}));
  EXPECT_THROW(hook_profile({}), std::invalid_argument);
}

TEST(HookProfile, StrictlyDecreasingUnderEqualLeadingRows) {
  for (unsigned n = 6; n <= 18; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      auto const profile = hook_profile(p);
      EXPECT_EQ(profile.hook, p.first() + p.length() - 1);
      ASSERT_EQ(profile.column_hooks.size(), p.first());
      bool const hypothesis =
          p.length() >= 2 && p.part(0) == p.part(1) && p.first() >= 3 && p.part(2) < p.first();
      if (!hypothesis) continue;
      for (std::size_t i = 0; i + 1 < profile.column_hooks.size(); ++i) {
        EXPECT_GT(profile.column_hooks[i], profile.column_hooks[i + 1]) << p;
      }
      EXPECT_EQ(profile.column_hooks.back(), 2u) << p;
    }
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension({}), 1);
  EXPECT_EQ(dimension(Partition::row(7)), 1);
  EXPECT_EQ(dimension(Partition::hook(1, 7)), 1);
  EXPECT_EQ(dimension({6, 1}), 6);
  EXPECT_EQ(dimension({3, 2}), 5);
}

TEST(Dimension, MatchesTableauxCountAndSumsToFactorial) {
  std::map<std::vector<unsigned>, unsigned long> memo;
  for (unsigned n = 1; n <= 12; ++n) {
    BigInt squares = 0;
    for (auto const& p : enumerate_partitions(n)) {
      BigInt const d = dimension(p);
      EXPECT_EQ(d, count_tableaux(p.vector(), memo)) << p;
      squares += d * d;
    }
    EXPECT_EQ(squares, factorial(n)) << n;
  }
}

// Seeded random partitions: text with random spacing and explicit ^1
// exponents parses to the same value.
TEST(ParsePartition, RandomSpellingsProperty) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    unsigned const n = std::uniform_int_distribution<unsigned>(1, 30)(rng);
    std::vector<Part> parts;
    for (unsigned left = n; left > 0;) {
      Part const cap = parts.empty() ? left : std::min<Part>(left, parts.back());
      Part const part = std::uniform_int_distribution<Part>(1, cap)(rng);
      parts.push_back(part);
      left -= part;
    }
    Partition const p(parts);
    std::string text;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) text += rng() % 2 ? ", " : ",";
      text += std::to_string(parts[i]);
      if (rng() % 3 == 0) text += "^1";
    }
    EXPECT_EQ(parse_partition(text), p) << text;
    EXPECT_EQ(p.size(), n);
  }
}

}  // namespace
}  // namespace derspec
