#pragma once

#include "derspec/bigint.hpp"

// Closed-form eigenvalues for special shapes. None of these consult the
// recurrence engine; they exist to cross-check it. Each throws
// std::invalid_argument outside its domain and InexactDivision if a
// division that must be exact is not.

namespace derspec::closed_form {

/// Hook (first, 1^(n-first)): (-1)^n (1 + (-1)^first n D_{first-1}).
/// Domain 1 <= first <= n.
BigInt hook(unsigned first, unsigned n);
/// Same shape via (-1)^(n-first) (D_first + (n-first) D_{first-1}).
BigInt hook_by_derangements(unsigned first, unsigned n);

/// Near hook (first, 2, 1^(n-first-2)): (-1)^(n+first) (n-1) D_first / (first-1).
/// Domain first >= 2, n >= first + 2.
BigInt near_hook(unsigned first, unsigned n);
/// Same shape via (n-1)((-1)^(n-1) + (-1)^(n+first) first D_{first-2}).
BigInt near_hook_expanded(unsigned first, unsigned n);

/// Two rows (a, b), a >= b >= 1, by iterating
/// eta(a,b) = (-1)^(a+1) D_{b-1} - (a+1) eta(a-1,b-1) down to eta(a-b) = D_{a-b}.
BigInt two_rows(unsigned a, unsigned b);
/// Two rows (a, b) from the explicit sum
/// (-1)^(a+1) sum_{k<b} (a+1)a...(a-k+2) D_{b-1-k} + (-1)^b (a+1)...(a-b+2) D_{a-b}.
BigInt two_rows_expanded(unsigned a, unsigned b);

// First part n - 2, n >= 4.
BigInt first_n_minus_2_two(unsigned n);         // (n-2, 2)
BigInt first_n_minus_2_one_one(unsigned n);     // (n-2, 1^2)

// First part n - 3, n >= 6.
BigInt first_n_minus_3_three(unsigned n);       // (n-3, 3)
BigInt first_n_minus_3_two_one(unsigned n);     // (n-3, 2, 1)
BigInt first_n_minus_3_one_three(unsigned n);   // (n-3, 1^3)

// First part a = n - 4, a >= 4.
BigInt first_a_four(unsigned a);                // (a, 4)
BigInt first_a_three_one(unsigned a);           // (a, 3, 1)
BigInt first_a_two_two(unsigned a);             // (a, 2^2)
BigInt first_a_two_one_one(unsigned a);         // (a, 2, 1^2)
BigInt first_a_one_four(unsigned a);            // (a, 1^4) = D_a + 4 D_{a-1}

}  // namespace derspec::closed_form
