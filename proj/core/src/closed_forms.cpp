#include "derspec/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "derspec/derangements.hpp"

namespace derspec::closed_form {

namespace {

BigInt D(unsigned n) { return derangement_number(n); }

void require(bool ok, char const* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BigInt hook(unsigned first, unsigned n) {
  require(first >= 1 && first <= n, "hook: need 1 <= first <= n");
  BigInt inner = D(first - 1) * n;
  if (first % 2 != 0) inner = -inner;
  inner += 1;
  return alternating(n) * inner;
}

BigInt hook_by_derangements(unsigned first, unsigned n) {
  require(first >= 1 && first <= n, "hook: need 1 <= first <= n");
  BigInt magnitude = D(first) + D(first - 1) * (n - first);
  return alternating(n - first) * magnitude;
}

BigInt near_hook(unsigned first, unsigned n) {
  require(first >= 2 && n >= first + 2, "near hook: need first >= 2, n >= first + 2");
  BigInt ratio = exact_div(D(first), first - 1, "near hook D_first / (first - 1)");
  return alternating(n + first) * (ratio * (n - 1));
}

BigInt near_hook_expanded(unsigned first, unsigned n) {
  require(first >= 2 && n >= first + 2, "near hook: need first >= 2, n >= first + 2");
  BigInt inner = alternating(n - 1) + alternating(n + first) * (D(first - 2) * first);
  return inner * (n - 1);
}

BigInt two_rows(unsigned a, unsigned b) {
  require(b >= 1 && a >= b, "two rows: need a >= b >= 1");
  // Unroll from the one-row base (a-b) upward to (a, b).
  BigInt value = D(a - b);
  for (unsigned k = 1; k <= b; ++k) {
    unsigned const top = a - b + k;  // current shape (top, k)
    value = alternating(top + 1) * D(k - 1) - value * (top + 1);
  }
  return value;
}

BigInt two_rows_expanded(unsigned a, unsigned b) {
  require(b >= 1 && a >= b, "two rows: need a >= b >= 1");
  BigInt sum = 0;
  BigInt falling = 1;  // (a+1) a ... (a-k+2)
  for (unsigned k = 0; k < b; ++k) {
    sum += falling * D(b - 1 - k);
    falling *= a + 1 - k;
  }
  return alternating(a + 1) * sum + alternating(b) * falling * D(a - b);
}

BigInt first_n_minus_2_two(unsigned n) {
  require(n >= 4, "(n-2,2): need n >= 4");
  return exact_div(D(n - 2) * (n - 1), n - 3, "(n-2,2)");
}

BigInt first_n_minus_2_one_one(unsigned n) {
  require(n >= 4, "(n-2,1^2): need n >= 4");
  return D(n - 3) * n + alternating(n);
}

BigInt first_n_minus_3_three(unsigned n) {
  require(n >= 6, "(n-3,3): need n >= 6");
  BigInt tail = exact_div(D(n - 4) * (n - 2) * (n - 3), n - 5, "(n-3,3)");
  return alternating(n - 2) - tail;
}

BigInt first_n_minus_3_two_one(unsigned n) {
  require(n >= 6, "(n-3,2,1): need n >= 6");
  return -exact_div(D(n - 3) * (n - 1), n - 4, "(n-3,2,1)");
}

BigInt first_n_minus_3_one_three(unsigned n) {
  require(n >= 6, "(n-3,1^3): need n >= 6");
  return alternating(n) - D(n - 4) * n;
}

BigInt first_a_four(unsigned a) {
  require(a >= 4, "(a,4): need a >= 4");
  return 2 * alternating(a + 1) - first_n_minus_3_three(a + 2) * (a + 1);
}

BigInt first_a_three_one(unsigned a) {
  require(a >= 4, "(a,3,1): need a >= 4");
  BigInt inner = D(a - 1) + 2 * (D(a - 2) + D(a - 3));
  return alternating(a + 2) + inner * (a + 2);
}

BigInt first_a_two_two(unsigned a) {
  require(a >= 4, "(a,2^2): need a >= 4");
  return alternating(a + 1) * static_cast<long>(a + 3) +
         D(a - 2) * (a + 2) * (a + 1);
}

BigInt first_a_two_one_one(unsigned a) {
  require(a >= 4, "(a,2,1^2): need a >= 4");
  return (alternating(a + 3) + D(a - 2) * a) * (a + 3);
}

BigInt first_a_one_four(unsigned a) {
  require(a >= 4, "(a,1^4): need a >= 4");
  return alternating(a) + D(a - 1) * (a + 4);
}

}  // namespace derspec::closed_form
