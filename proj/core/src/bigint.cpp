#include "derspec/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace derspec {

BigInt exact_div(BigInt const& numerator, BigInt const& denominator,
                 std::string_view context) {
  if (denominator == 0) {
    throw InexactDivision(std::string(context) + ": division by zero");
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw InexactDivision(std::string(context) + ": " + numerator.get_str() +
                          " is not divisible by " + denominator.get_str());
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  return quotient;
}

std::string to_decimal(BigInt const& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("not a decimal integer: '" +
                                std::string(text) + "'");
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return BigInt(owned, 10);
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace derspec
