#include "derspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "derspec/adjacency.hpp"
#include "derspec/characters.hpp"
#include "derspec/closed_forms.hpp"
#include "derspec/derangements.hpp"
#include "derspec/golden.hpp"
#include "derspec/magnitude.hpp"

namespace derspec {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown here.
void parallel_for(std::size_t count, unsigned jobs,
                  std::function<void(std::size_t)> const& fn) {
  std::size_t const workers = std::min<std::size_t>(std::max(jobs, 1u), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

void require_n(unsigned n, unsigned minimum, char const* check) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(check) + " needs n >= " +
                                std::to_string(minimum));
  }
}

// Collects one report's bookkeeping and stamps elapsed time on finish().
class ReportBuilder {
 public:
  ReportBuilder(std::string name, unsigned n) : start_(Clock::now()) {
    report_.check_name = std::move(name);
    report_.n = n;
  }

  // Counts one comparison; records a violation if `holds` is false.
  void expect(bool holds, std::vector<Partition> partitions, BigInt lhs,
              BigInt rhs, std::string relation, std::string detail = {}) {
    ++report_.cases;
    if (!holds) {
      report_.violations.push_back({std::move(partitions), std::move(lhs),
                                    std::move(rhs), std::move(relation),
                                    std::move(detail)});
    }
  }

  void expect_equal(std::vector<Partition> partitions, BigInt const& lhs,
                    BigInt const& rhs, std::string detail = {}) {
    expect(lhs == rhs, std::move(partitions), lhs, rhs, "==", std::move(detail));
  }

  void expect_less(std::vector<Partition> partitions, BigInt const& lhs,
                   BigInt const& rhs, bool strict, std::string detail = {}) {
    bool const holds = strict ? lhs < rhs : lhs <= rhs;
    expect(holds, std::move(partitions), lhs, rhs, strict ? "<" : "<=",
           std::move(detail));
  }

  void count(std::size_t cases = 1) { report_.cases += cases; }

  void find(Evidence evidence) { report_.findings.push_back(std::move(evidence)); }

  void absorb(std::vector<Evidence>&& violations, std::size_t cases) {
    report_.cases += cases;
    for (auto& v : violations) report_.violations.push_back(std::move(v));
  }

  VerificationReport finish() {
    report_.elapsed = Clock::now() - start_;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

// Per-partition output of a parallel sweep: the comparisons made and the
// ones that failed, merged afterwards in partition order.
struct LocalResult {
  std::size_t cases = 0;
  std::vector<Evidence> violations;

  void expect(bool holds, std::vector<Partition> partitions, BigInt lhs,
              BigInt rhs, std::string relation, std::string detail = {}) {
    ++cases;
    if (!holds) {
      violations.push_back({std::move(partitions), std::move(lhs), std::move(rhs),
                            std::move(relation), std::move(detail)});
    }
  }
};

std::vector<std::vector<Partition>> group_by_first_part(
    std::vector<Partition> const& parts, std::vector<BigInt> const& values,
    std::vector<std::vector<BigInt>>& grouped_values) {
  std::map<Part, std::size_t, std::greater<>> index;
  std::vector<std::vector<Partition>> groups;
  grouped_values.clear();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto [it, fresh] = index.emplace(parts[i].first(), groups.size());
    if (fresh) {
      groups.emplace_back();
      grouped_values.emplace_back();
    }
    groups[it->second].push_back(parts[i]);
    grouped_values[it->second].push_back(values[i]);
  }
  return groups;
}

Partition shorten_first_row(Partition const& p, Part by) {
  std::vector<Part> parts = p.vector();
  parts.front() -= by;
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

std::vector<std::string> const& check_names() {
  static std::vector<std::string> const names = {
      "asp",     "main2",  "main3",  "lexscan", "minimum",  "trace",  "conjecture",
      "hoffman", "oracle", "golden", "props",   "closed",   "adjacency"};
  return names;
}

TheoremVerifier::TheoremVerifier(EigenvalueEngine& engine, unsigned jobs)
    : engine_(engine), jobs_(std::max(jobs, 1u)) {}

std::vector<BigInt> TheoremVerifier::etas(std::vector<Partition> const& parts) {
  std::vector<BigInt> out(parts.size());
  parallel_for(parts.size(), jobs_, [&](std::size_t i) { out[i] = engine_.eta(parts[i]); });
  return out;
}

VerificationReport TheoremVerifier::alternating_sign(unsigned n) {
  require_n(n, 2, "asp");
  ReportBuilder report("asp", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    report.expect(values[i] != 0, {parts[i]}, values[i], 0, "!=", "nonzero");
    report.expect(sgn(values[i]) == derspec::alternating_sign(parts[i]), {parts[i]},
                  sgn(values[i]), derspec::alternating_sign(parts[i]), "==", "sign");
  }
  return report.finish();
}

VerificationReport TheoremVerifier::hook_sandwich(unsigned n) {
  require_n(n, 2, "main2");
  ReportBuilder report("main2", n);

  std::vector<BigInt> hook_abs(n + 2);
  for (Part a = 1; a <= n; ++a) {
    Partition const h = Partition::hook(a, n);
    hook_abs[a] = abs(engine_.eta(h));
    BigInt const expected = derangement_number(a) + derangement_number(a - 1) * (n - a);
    report.expect_equal({h}, hook_abs[a], expected, "hook magnitude");
  }

  unsigned const half = n / 2;
  bool const strict_below = n >= 6;
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Partition const& p = parts[i];
    BigInt const magnitude = abs(values[i]);
    Part const a = p.first();
    if (a >= half) {
      report.expect_less({Partition::hook(a, n), p}, hook_abs[a], magnitude, false,
                         "lower hook");
      if (a < n) {
        report.expect_less({p, Partition::hook(a + 1, n)}, magnitude, hook_abs[a + 1],
                           false, "upper hook");
      }
    } else {
      report.expect_less({p, Partition::hook(half + 1, n)}, magnitude,
                         hook_abs[half + 1], strict_below, "short first row");
    }
  }
  return report.finish();
}

VerificationReport TheoremVerifier::lex_monotonicity(unsigned n) {
  require_n(n, 2, "main3");
  ReportBuilder report("main3", n);
  // First part n - k is covered from n >= minimum[k].
  constexpr unsigned minimum[] = {0, 2, 4, 6, 8};
  bool const strict = n >= 7;
  for (unsigned k = 1; k <= 4; ++k) {
    if (n < minimum[k] || n <= k) continue;
    Part const first = n - k;
    std::vector<Partition> group;
    for (auto& p : enumerate_partitions(n)) {
      if (p.first() == first) group.push_back(std::move(p));
    }
    auto const values = etas(group);
    for (std::size_t i = 0; i + 1 < group.size(); ++i) {
      report.expect_less({group[i + 1], group[i]}, abs(values[i + 1]), abs(values[i]),
                         strict, "first part " + std::to_string(first));
    }
  }
  return report.finish();
}

VerificationReport TheoremVerifier::lex_scan(unsigned n) {
  require_n(n, 2, "lexscan");
  ReportBuilder report("lexscan", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  std::vector<std::vector<BigInt>> grouped;
  auto const groups = group_by_first_part(parts, values, grouped);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto const& group = groups[g];
    for (std::size_t i = 0; i < group.size(); ++i) {
      BigInt const upper = abs(grouped[g][i]);
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        report.count();
        BigInt const lower = abs(grouped[g][j]);
        if (upper < lower) {
          report.find({{group[i], group[j]}, upper, lower, "<",
                       "lexicographically larger partition has smaller |eta|"});
        }
      }
    }
  }
  return report.finish();
}

VerificationReport TheoremVerifier::smallest_eigenvalue(unsigned n) {
  require_n(n, 2, "minimum");
  ReportBuilder report("minimum", n);
  Partition const runner = Partition::from_unsorted({n - 1, 1});
  Partition const top = Partition::row(n);
  BigInt const expected = -(derangement_number(n - 1) + derangement_number(n - 2));
  BigInt const runner_eta = engine_.eta(runner);
  BigInt const degree = derangement_number(n);
  report.expect_equal({runner}, runner_eta, expected, "value at (n-1,1)");

  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  auto const lowest = std::min_element(values.begin(), values.end());
  report.expect_equal({parts[lowest - values.begin()]}, *lowest, expected,
                      "smallest eigenvalue");

  BigInt const runner_abs = abs(runner_eta);
  bool others = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == top || parts[i] == runner) continue;
    others = true;
    report.expect_less({parts[i], runner}, abs(values[i]), runner_abs, true,
                       "below (n-1,1)");
  }
  // The chain is stated for the other partitions; with none it is vacuous.
  if (others) {
    report.expect_less({runner, top}, runner_abs, degree, true, "(n-1,1) below (n)");
  }
  return report.finish();
}

VerificationReport TheoremVerifier::trace_identities(unsigned n) {
  require_n(n, 1, "trace");
  ReportBuilder report("trace", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  BigInt const degree = derangement_number(n);
  BigInt const order = factorial(n);
  Partition const top = Partition::row(n);

  BigInt dims = 0;
  BigInt trace = 0;
  BigInt walks = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BigInt const d = dimension(parts[i]);
    BigInt const mult = d * d;
    dims += mult;
    trace += mult * values[i];
    walks += mult * values[i] * values[i];
    if (parts[i] == top) {
      report.expect_equal({top}, values[i], degree, "largest eigenvalue is the degree");
    } else {
      report.expect_less({parts[i], top}, values[i], degree, false,
                         "bounded by the degree");
      // Equality means more than one component (n = 3: two triangles).
      if (values[i] == degree) {
        report.find({{parts[i], top}, values[i], degree, "==", "degree attained again"});
      }
    }
  }
  report.expect_equal({}, dims, order, "sum of dim^2");
  report.expect_equal({}, trace, 0, "sum of dim^2 eta");
  report.expect_equal({}, walks, order * degree, "sum of dim^2 eta^2");
  return report.finish();
}

VerificationReport TheoremVerifier::conjecture_scan(unsigned n) {
  require_n(n, 2, "conjecture");
  ReportBuilder report("conjecture", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Partition const& p = parts[i];
    Partition const low = Partition::hook(p.first(), n);
    Partition const high = lex_largest_with_first_part(p.first(), n);
    BigInt const magnitude = abs(values[i]);
    report.expect_less({low, p}, abs(engine_.eta(low)), magnitude, false, "hook below");
    report.expect_less({p, high}, magnitude, abs(engine_.eta(high)), false,
                       "lex-largest above");
  }
  return report.finish();
}

HoffmanBoundReport TheoremVerifier::hoffman_bound(unsigned n) {
  require_n(n, 2, "hoffman");
  auto const values = etas(enumerate_partitions(n));
  HoffmanBoundReport out;
  out.n = n;
  out.degree = derangement_number(n);
  out.vertices = factorial(n);
  out.smallest = *std::min_element(values.begin(), values.end());
  out.bound = BigRational(-out.smallest * out.vertices, out.degree - out.smallest);
  out.bound.canonicalize();
  out.attained = factorial(n - 1);
  return out;
}

VerificationReport TheoremVerifier::hoffman(unsigned n) {
  ReportBuilder report("hoffman", n);
  auto const h = hoffman_bound(n);
  report.expect_less({}, h.smallest, 0, true, "smallest eigenvalue negative");
  bool const integral = h.bound.get_den() == 1;
  report.expect(integral && h.tight(), {}, integral ? BigInt(h.bound.get_num()) : BigInt(0),
                h.attained, "==",
                "ratio bound " + h.bound.get_str() + " against (n-1)!");
  return report.finish();
}

VerificationReport TheoremVerifier::oracle_equivalence(unsigned n) {
  require_n(n, 1, "oracle");
  ReportBuilder report("oracle", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);
  CharacterEvaluator characters;
  std::vector<BigInt> oracle(parts.size());
  parallel_for(parts.size(), jobs_,
               [&](std::size_t i) { oracle[i] = eta_oracle(parts[i], characters); });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    report.expect_equal({parts[i]}, values[i], oracle[i], "recurrence vs character sum");
  }
  return report.finish();
}

VerificationReport TheoremVerifier::golden(unsigned n) {
  ReportBuilder report("golden", n);
  for (auto const& row : golden_rows(n)) {
    std::string detail = "table value";
    if (!row.note.empty()) detail += " (" + row.note + ")";
    report.expect_equal({row.partition}, engine_.eta(row.partition), row.eta,
                        std::move(detail));
  }
  return report.finish();
}

VerificationReport TheoremVerifier::magnitude_properties(unsigned n) {
  require_n(n, 2, "props");
  ReportBuilder report("props", n);
  auto const parts = enumerate_partitions(n);
  auto const values = etas(parts);

  std::vector<LocalResult> local(parts.size());
  parallel_for(parts.size(), jobs_, [&](std::size_t i) {
    Partition const& p = parts[i];
    BigInt const magnitude = abs(values[i]);
    LocalResult& out = local[i];

    BigInt const step = abs_eta_step(p, engine_);
    out.expect(magnitude == step, {p}, magnitude, step, "==", "magnitude step");
    BigInt const bound = hook_product_bound(p);
    out.expect(magnitude <= bound, {p}, magnitude, bound, "<=", "hook product bound");

    if (has_equal_leading_rows(p)) {
      BigInt const delta = delta_margin(p, engine_);
      out.expect(delta > 0, {p}, delta, 0, ">", "delta positive");
      Partition const below = remove_rows(p, 1);
      BigInt const floor = abs(engine_.eta(below)) + delta;
      out.expect(magnitude >= floor, {p, below}, magnitude, floor, ">=",
                 "first-row removal plus delta");
      if (p.first() >= 3) {
        BigInt const h = delta_lower_bound(p);
        BigInt const s = hook_deficit_product(p);
        out.expect(h > s, {p}, h, s, ">", "H over S");
        out.expect(s > 0, {p}, s, 0, ">", "S positive");
        out.expect(delta >= h, {p}, delta, h, ">=", "delta over H");
      }
    }
    if (p.length() >= 2 && p.part(0) == p.part(1)) {
      Partition const below = remove_rows(p, 1);
      BigInt const smaller = abs(engine_.eta(below));
      out.expect(magnitude > smaller, {p, below}, magnitude, smaller, ">",
                 "repeated first row removed");
    }
    if (n >= 3 && p.part(0) >= p.part(1) + 2) {
      Partition const shorter = shorten_first_row(p, 2);
      BigInt const smaller = abs(engine_.eta(shorter));
      out.expect(magnitude > smaller, {p, shorter}, magnitude, smaller, ">",
                 "first row shortened by two");
    }
  });
  for (auto& l : local) report.absorb(std::move(l.violations), l.cases);

  auto hooks = hook_monotonicity(n);
  report.absorb(std::move(hooks.violations), hooks.cases);
  return report.finish();
}

VerificationReport TheoremVerifier::hook_monotonicity(unsigned n) {
  require_n(n, 2, "hook monotonicity");
  ReportBuilder report("hookmono", n);
  for (Part a = 2; a + 1 <= n; ++a) {
    Partition const lo = Partition::hook(a, n);
    Partition const hi = Partition::hook(a + 1, n);
    report.expect_less({lo, hi}, abs(engine_.eta(lo)), abs(engine_.eta(hi)), true,
                       "hook magnitudes increase with the first row");
  }
  return report.finish();
}

VerificationReport TheoremVerifier::closed_forms(unsigned n) {
  require_n(n, 1, "closed");
  ReportBuilder report("closed", n);
  auto check = [&](char const* name, Partition const& p, auto&& formula) {
    BigInt const expected = engine_.eta(p);
    try {
      report.expect_equal({p}, formula(), expected, name);
    } catch (InexactDivision const& e) {
      report.expect(false, {p}, 0, expected, "==", std::string(name) + ": " + e.what());
    }
  };
  auto shape = [](std::vector<Part> parts) { return Partition::from_unsorted(std::move(parts)); };
  auto with_ones = [](std::vector<Part> parts, unsigned ones) {
    parts.insert(parts.end(), ones, 1u);
    return Partition::from_unsorted(std::move(parts));
  };

  for (Part a = 1; a <= n; ++a) {
    Partition const p = Partition::hook(a, n);
    check("hook", p, [&] { return closed_form::hook(a, n); });
    check("hook via derangements", p, [&] { return closed_form::hook_by_derangements(a, n); });
  }
  for (Part a = 2; a + 2 <= n; ++a) {
    Partition const p = with_ones({a, 2}, n - a - 2);
    check("near hook", p, [&] { return closed_form::near_hook(a, n); });
    check("near hook expanded", p, [&] { return closed_form::near_hook_expanded(a, n); });
  }
  for (Part b = 1; 2 * b <= n; ++b) {
    Part const a = n - b;
    Partition const p = shape({a, b});
    check("two rows", p, [&] { return closed_form::two_rows(a, b); });
    check("two rows expanded", p, [&] { return closed_form::two_rows_expanded(a, b); });
  }
  if (n >= 4) {
    check("(n-2,2)", shape({n - 2, 2}), [&] { return closed_form::first_n_minus_2_two(n); });
    check("(n-2,1^2)", shape({n - 2, 1, 1}),
          [&] { return closed_form::first_n_minus_2_one_one(n); });
  }
  if (n >= 6) {
    check("(n-3,3)", shape({n - 3, 3}), [&] { return closed_form::first_n_minus_3_three(n); });
    check("(n-3,2,1)", shape({n - 3, 2, 1}),
          [&] { return closed_form::first_n_minus_3_two_one(n); });
    check("(n-3,1^3)", shape({n - 3, 1, 1, 1}),
          [&] { return closed_form::first_n_minus_3_one_three(n); });
  }
  if (n >= 8) {
    Part const a = n - 4;
    check("(a,4)", shape({a, 4}), [&] { return closed_form::first_a_four(a); });
    check("(a,3,1)", shape({a, 3, 1}), [&] { return closed_form::first_a_three_one(a); });
    check("(a,2^2)", shape({a, 2, 2}), [&] { return closed_form::first_a_two_two(a); });
    check("(a,2,1^2)", shape({a, 2, 1, 1}),
          [&] { return closed_form::first_a_two_one_one(a); });
    check("(a,1^4)", shape({a, 1, 1, 1, 1}), [&] { return closed_form::first_a_one_four(a); });
  }
  return report.finish();
}

VerificationReport TheoremVerifier::adjacency(unsigned n) {
  ReportBuilder report("adjacency", n);
  std::map<long, BigInt> expected;
  for (auto const& rec : engine_.spectrum(n)) {
    expected[rec.eta.get_si()] += rec.multiplicity;
  }
  std::map<long, BigInt> observed;
  for (auto const& entry : adjacency_spectrum_bruteforce(n)) {
    observed[static_cast<long>(entry.value)] += static_cast<unsigned long>(entry.multiplicity);
  }
  std::map<long, std::pair<BigInt, BigInt>> merged;
  for (auto const& [value, mult] : expected) merged[value].second = mult;
  for (auto const& [value, mult] : observed) merged[value].first = mult;
  for (auto const& [value, mults] : merged) {
    report.expect_equal({}, mults.first, mults.second,
                        "multiplicity of eigenvalue " + std::to_string(value));
  }
  return report.finish();
}

VerificationReport TheoremVerifier::run(std::string_view check, unsigned n) {
  if (check == "asp") return alternating_sign(n);
  if (check == "main2") return hook_sandwich(n);
  if (check == "main3") return lex_monotonicity(n);
  if (check == "lexscan") return lex_scan(n);
  if (check == "minimum") return smallest_eigenvalue(n);
  if (check == "trace") return trace_identities(n);
  if (check == "conjecture") return conjecture_scan(n);
  if (check == "hoffman") return hoffman(n);
  if (check == "oracle") return oracle_equivalence(n);
  if (check == "golden") return golden(n);
  if (check == "props") return magnitude_properties(n);
  if (check == "closed") return closed_forms(n);
  if (check == "adjacency") return adjacency(n);
  throw std::invalid_argument("unknown check '" + std::string(check) + "'");
}

}  // namespace derspec
