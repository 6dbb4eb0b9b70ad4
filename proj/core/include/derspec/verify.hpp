#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "derspec/bigint.hpp"
#include "derspec/eigenvalues.hpp"
#include "derspec/partition.hpp"

namespace derspec {

/// One comparison that did not go the expected way, or (for scans) one
/// noteworthy observation. For a violation `relation` is what should have
/// held between lhs and rhs, e.g. "<="; for a finding it is what was seen.
struct Evidence {
  std::vector<Partition> partitions;
  BigInt lhs;
  BigInt rhs;
  std::string relation;
  std::string detail;
};

struct VerificationReport {
  std::string check_name;
  unsigned n = 0;
  std::size_t cases = 0;
  std::vector<Evidence> violations;
  /// Scan output that is reported but does not fail the check.
  std::vector<Evidence> findings;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return violations.empty(); }
};

struct HoffmanBoundReport {
  unsigned n = 0;
  BigInt degree;        // D_n
  BigInt vertices;      // n!
  BigInt smallest;      // least eigenvalue
  BigRational bound;    // -smallest * n! / (D_n - smallest)
  BigInt attained;      // (n-1)!, the size of a point stabilizer

  bool smallest_negative() const { return sgn(smallest) < 0; }
  bool tight() const { return bound == BigRational(attained); }
};

/// Names accepted by TheoremVerifier::run, in a fixed order.
std::vector<std::string> const& check_names();

/// Exhaustive sweeps over the partitions of n. Per-partition work is split
/// across `jobs` threads sharing one engine; reports are assembled in
/// partition order, so they do not depend on the thread count.
class TheoremVerifier {
 public:
  explicit TheoremVerifier(EigenvalueEngine& engine, unsigned jobs = 1);

  /// sign(eta) = (-1)^(n - l_1) and eta != 0. n >= 2.
  VerificationReport alternating_sign(unsigned n);

  /// Hook sandwich for l_1 >= floor(n/2), the bound by the
  /// (floor(n/2)+1)-hook below that (strict for n >= 6), and the hook
  /// magnitude identity |eta(a,1^{n-a})| = D_a + (n-a) D_{a-1}. n >= 2.
  VerificationReport hook_sandwich(unsigned n);

  /// |eta| decreases along lexicographic order within first part n-1, n-2,
  /// n-3, n-4 (from n = 2, 4, 6, 8 respectively); strictly once n >= 7.
  VerificationReport lex_monotonicity(unsigned n);

  /// Every same-first-part pair l > m (lex) with |eta(l)| < |eta(m)|,
  /// reported as findings.
  VerificationReport lex_scan(unsigned n);

  /// min eta = -(D_{n-1} + D_{n-2}) at (n-1,1), and
  /// |eta(l)| < |eta(n-1,1)| < D_n for every other l.
  VerificationReport smallest_eigenvalue(unsigned n);

  /// Sum dim^2 = n!, sum dim^2 eta = 0, sum dim^2 eta^2 = n! D_n, and the
  /// largest eigenvalue is D_n, taken at (n). Other partitions reaching D_n
  /// are reported as findings. n >= 1.
  VerificationReport trace_identities(unsigned n);

  /// |eta(l_1,1^{n-l_1})| <= |eta(l)| <= |eta(l*)| where l* is the
  /// lexicographically largest partition with first part l_1.
  VerificationReport conjecture_scan(unsigned n);

  HoffmanBoundReport hoffman_bound(unsigned n);
  VerificationReport hoffman(unsigned n);

  /// Recurrence against the character sum, partition by partition.
  VerificationReport oracle_equivalence(unsigned n);

  /// Recurrence against the embedded reference tables.
  VerificationReport golden(unsigned n);

  /// Magnitude step, hook-product bound, H > S > 0, delta > 0,
  /// delta >= H, |eta(l)| >= |eta(l - first row)| + delta, the drop on
  /// removing a repeated first row, the drop on shortening the first row
  /// by two, and hook_monotonicity(n).
  VerificationReport magnitude_properties(unsigned n);

  /// |eta(a,1^{n-a})| < |eta(a+1,1^{n-a-1})| for 2 <= a <= n-1.
  VerificationReport hook_monotonicity(unsigned n);

  /// Every closed form that applies at n against the recurrence.
  VerificationReport closed_forms(unsigned n);

  /// Dense adjacency spectrum against eta with multiplicities. 2 <= n <= 6.
  VerificationReport adjacency(unsigned n);

  /// Dispatch by name (see check_names). Throws std::invalid_argument for
  /// an unknown name.
  VerificationReport run(std::string_view check, unsigned n);

 private:
  std::vector<BigInt> etas(std::vector<Partition> const& parts);

  EigenvalueEngine& engine_;
  unsigned jobs_;
};

}  // namespace derspec
