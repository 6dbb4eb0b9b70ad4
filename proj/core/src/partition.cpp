#include "derspec/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace derspec {

namespace {

unsigned sum_parts(std::vector<Part> const& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

unsigned parse_positive(std::string_view token, std::string_view whole) {
  unsigned value = 0;
  auto const* first = token.data();
  auto const* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed partition token '" +
                                std::string(token) + "' in '" +
                                std::string(whole) + "'");
  }
  if (value == 0) {
    throw std::invalid_argument("zero part in partition '" +
                                std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = sum_parts(parts_);
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::erase(parts, Part{0});
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(Part n) {
  return n == 0 ? Partition() : Partition(std::vector<Part>{n});
}

Partition Partition::hook(Part first, Part n) {
  if (first == 0 || first > n) {
    throw std::invalid_argument("hook requires 1 <= first part <= n");
  }
  std::vector<Part> parts(n - first + 1, 1);
  parts[0] = first;
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(Partition const& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  return lex_compare(*this, other);
}

std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Part x : p.parts()) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h ^ p.length();
}

Partition parse_partition(std::string_view text) {
  std::string_view const whole = text;
  text = trim(text);
  std::vector<Part> parts;
  if (text.empty()) return Partition();

  while (true) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    auto caret = token.find('^');
    Part base = 0;
    unsigned repeat = 1;
    if (caret == std::string_view::npos) {
      base = parse_positive(token, whole);
    } else {
      base = parse_positive(trim(token.substr(0, caret)), whole);
      repeat = parse_positive(trim(token.substr(caret + 1)), whole);
    }
    if (!parts.empty() && base > parts.back()) {
      throw std::invalid_argument("partition parts increase in '" +
                                  std::string(whole) + "'");
    }
    parts.insert(parts.end(), repeat, base);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string format_partition(Partition const& p) {
  std::string out;
  auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[i]);
    if (j - i >= 2) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, Partition const& p) {
  return os << '(' << format_partition(p) << ')';
}

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Part> current{n};
  while (true) {
    out.emplace_back(current);
    // Rightmost part larger than one; everything after it is a run of ones.
    std::size_t k = current.size();
    while (k > 0 && current[k - 1] == 1) --k;
    if (k == 0) break;
    unsigned remainder = static_cast<unsigned>(current.size() - k) + 1;
    Part const cap = --current[k - 1];
    current.resize(k);
    while (remainder > 0) {
      Part const take = std::min(cap, remainder);
      current.push_back(take);
      remainder -= take;
    }
  }
  return out;
}

std::strong_ordering lex_compare(Partition const& lhs, Partition const& rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("lex_compare needs partitions of equal size");
  }
  std::size_t const len = std::max(lhs.length(), rhs.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = lhs.part(i) <=> rhs.part(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Partition lex_largest_with_first_part(Part first, unsigned n) {
  if (first == 0 || first > n) {
    throw std::invalid_argument("first part must lie in 1..n");
  }
  std::vector<Part> parts(n / first, first);
  if (n % first != 0) parts.push_back(n % first);
  return Partition(std::move(parts));
}

Partition remove_first_column(Partition const& p) {
  if (p.empty()) {
    throw std::invalid_argument("cannot remove a column from the empty partition");
  }
  std::vector<Part> parts;
  parts.reserve(p.length());
  for (Part x : p.parts()) {
    if (x > 1) parts.push_back(x - 1);
  }
  return Partition(std::move(parts));
}

Partition remove_columns(Partition const& p, unsigned count) {
  if (count > p.first()) {
    throw std::invalid_argument("cannot remove more columns than the first part");
  }
  std::vector<Part> parts;
  for (Part x : p.parts()) {
    if (x > count) parts.push_back(x - count);
  }
  return Partition(std::move(parts));
}

Partition remove_rows(Partition const& p, std::size_t count) {
  if (count > p.length()) {
    throw std::invalid_argument("cannot remove more rows than the length");
  }
  return Partition(std::vector<Part>(p.vector().begin() + count, p.vector().end()));
}

Partition remove_hook(Partition const& p) {
  if (p.empty()) {
    throw std::invalid_argument("the empty partition has no hook");
  }
  std::vector<Part> parts;
  for (std::size_t i = 1; i < p.length(); ++i) {
    if (p.part(i) > 1) parts.push_back(p.part(i) - 1);
  }
  return Partition(std::move(parts));
}

HookProfile hook_profile(Partition const& p) {
  if (p.empty()) {
    throw std::invalid_argument("hook profile is undefined for the empty partition");
  }
  HookProfile profile;
  profile.hook = p.hook_size();
  profile.column_hooks.reserve(p.first());
  for (unsigned i = 0; i < p.first(); ++i) {
    // Rows of length > i survive the first i columns.
    auto rows = static_cast<unsigned>(std::count_if(
        p.parts().begin(), p.parts().end(), [i](Part x) { return x > i; }));
    profile.column_hooks.push_back(p.first() - i + rows - 1);
  }
  return profile;
}

BigInt dimension(Partition const& p) {
  if (p.empty()) return 1;
  // Column lengths give the leg of each cell.
  std::vector<unsigned> column_length(p.first(), 0);
  for (Part x : p.parts()) {
    for (unsigned j = 0; j < x; ++j) ++column_length[j];
  }
  BigInt hooks = 1;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (unsigned j = 0; j < p.part(i); ++j) {
      unsigned arm = p.part(i) - j - 1;
      unsigned leg = column_length[j] - static_cast<unsigned>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return exact_div(factorial(p.size()), hooks, "hook length formula");
}

}  // namespace derspec
