#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace derspec {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when a division that must be exact leaves a remainder. Every such
// division in this library is backed by an identity, so this is a bug signal.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt exact_div(BigInt const& numerator, BigInt const& denominator,
                 std::string_view context);

std::string to_decimal(BigInt const& value);
BigInt parse_decimal(std::string_view text);

BigInt factorial(unsigned n);

inline int sign_of(BigInt const& value) { return sgn(value); }

inline BigInt abs_value(BigInt const& value) { return abs(value); }

// (-1)^k
inline int alternating(unsigned long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace derspec
