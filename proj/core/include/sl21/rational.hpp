#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl21 {

/// Exact arbitrary-precision rational. Every coefficient in the library uses it.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "p", "-p", "p/q" (surrounding whitespace allowed); result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms; integers are printed without "/1".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace sl21
