#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quivermod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or mis-sized input (wrong vector length, unparsable text).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the operation's domain (zero vector,
/// non-coprime weights, reflection leaving the positive cone, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Computation refused because it would exceed a fixed size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Canonical `p/q` serialization; integers are written as `p/1`.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts `p/q`, `p`, with optional sign. Result is canonicalized.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Splits on commas; empty fields are an error.
std::vector<std::string> split_list(std::string_view text, char sep = ',');
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);

std::string join(const std::vector<std::int64_t>& values, char sep = ',');

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

/// Binomial coefficient with the polynomial extension in the top argument:
/// C(x, k) = x (x-1) ... (x-k+1) / k! for every integer x and k >= 0.
Integer binomial(const Integer& top, unsigned long k);

}  // namespace quivermod
