#pragma once

#include "derspec/bigint.hpp"
#include "derspec/eigenvalues.hpp"
#include "derspec/partition.hpp"

namespace derspec {

/// |eta| rebuilt from the magnitudes of the column- and hook-removed
/// children, using the parity of the first two rows:
///
///   first two rows of equal parity:   | h |eta(l - c)| - |eta(l - hook)| |
///   otherwise:                         h |eta(l - c)| + |eta(l - hook)|
///
/// A missing second row counts as odd. Then for (n) the sum branch applies
/// exactly when n is even, matching D_n = n D_{n-1} + (-1)^n.
/// Requires |p| >= 2.
BigInt abs_eta_step(Partition const& p, EigenvalueEngine& engine);

/// prod over column hooks of (h_i + 1); an upper bound on |eta|.
BigInt hook_product_bound(Partition const& p);

/// True when the first two rows are equal and, with three or more rows, the
/// third row is strictly shorter. This is the domain of delta_margin and
/// delta_lower_bound.
bool has_equal_leading_rows(Partition const& p);

/// The margin delta(l) in |eta(l)| >= |eta(l - first row)| + delta(l), from
///   delta((1,1)) = 1,
///   delta(l) = h_1 delta(l - c) - |eta((l - c) - first two rows)|.
/// Throws std::invalid_argument outside has_equal_leading_rows.
BigInt delta_margin(Partition const& p, EigenvalueEngine& engine);

/// Hook-only lower bound on delta_margin for leading rows of length t >= 2:
///   prod_{i<t} h_i - prod_{i<t-1} h_i - prod_{2<=i<t} (h_i - 2)
///     - sum_{i=1}^{t-3} h_1...h_i (h_{i+2}-2)...(h_{t-1}-2)
/// with the short forms h_1 (t = 2) and h_1 h_2 - h_1 - (h_2 - 2) (t = 3).
BigInt delta_lower_bound(Partition const& p);

/// prod_{i<t} (h_i - 2). Requires has_equal_leading_rows and t >= 3.
BigInt hook_deficit_product(Partition const& p);

}  // namespace derspec
