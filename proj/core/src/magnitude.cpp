#include "derspec/magnitude.hpp"

#include <stdexcept>

namespace derspec {

namespace {

void require_equal_leading_rows(Partition const& p) {
  if (!has_equal_leading_rows(p)) {
    throw std::invalid_argument(
        "needs first row == second row and a strictly shorter third row");
  }
}

// Product of hooks[first..last] (1-based, inclusive); 1 when empty.
BigInt hook_product(std::vector<unsigned> const& hooks, unsigned first,
                    unsigned last, long shift) {
  BigInt out = 1;
  for (unsigned i = first; i <= last; ++i) {
    out *= static_cast<long>(hooks[i - 1]) + shift;
  }
  return out;
}

}  // namespace

BigInt abs_eta_step(Partition const& p, EigenvalueEngine& engine) {
  if (p.size() < 2) {
    throw std::invalid_argument("abs_eta_step needs |partition| >= 2");
  }
  BigInt const column = abs(engine.eta(remove_first_column(p))) * p.hook_size();
  BigInt const hook = abs(engine.eta(remove_hook(p)));
  unsigned const second = p.length() >= 2 ? p.part(1) : 1;
  if ((p.first() + second) % 2 == 0) return abs(BigInt(column - hook));
  return column + hook;
}

BigInt hook_product_bound(Partition const& p) {
  auto const profile = hook_profile(p);
  BigInt out = 1;
  for (unsigned h : profile.column_hooks) out *= h + 1;
  return out;
}

bool has_equal_leading_rows(Partition const& p) {
  return p.length() >= 2 && p.part(0) == p.part(1) &&
         (p.length() < 3 || p.part(2) < p.part(0));
}

BigInt delta_margin(Partition const& p, EigenvalueEngine& engine) {
  require_equal_leading_rows(p);
  if (p.first() == 1) return 1;  // p == (1,1)
  Partition const stripped = remove_first_column(p);
  BigInt const tail = abs(engine.eta(remove_rows(stripped, 2)));
  return delta_margin(stripped, engine) * p.hook_size() - tail;
}

BigInt delta_lower_bound(Partition const& p) {
  require_equal_leading_rows(p);
  unsigned const t = p.first();
  if (t < 2) {
    throw std::invalid_argument("delta_lower_bound needs leading rows of length >= 2");
  }
  auto const h = hook_profile(p).column_hooks;
  if (t == 2) return h[0];
  BigInt out = hook_product(h, 1, t - 1, 0) - hook_product(h, 1, t - 2, 0) -
               hook_product(h, 2, t - 1, -2);
  for (unsigned i = 1; i + 3 <= t; ++i) {
    out -= hook_product(h, 1, i, 0) * hook_product(h, i + 2, t - 1, -2);
  }
  return out;
}

BigInt hook_deficit_product(Partition const& p) {
  require_equal_leading_rows(p);
  unsigned const t = p.first();
  if (t < 3) {
    throw std::invalid_argument("hook_deficit_product needs leading rows of length >= 3");
  }
  return hook_product(hook_profile(p).column_hooks, 1, t - 1, -2);
}

}  // namespace derspec
