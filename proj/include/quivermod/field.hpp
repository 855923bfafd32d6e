#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "quivermod/arith.hpp"

namespace quivermod {

__extension__ using uint128 = unsigned __int128;

/// Exact coefficient field: the rationals or a prime field. Elements are
/// plain values; all arithmetic goes through the field object.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, const Rational& q) {
  typename F::value_type;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_rational(q) } -> std::same_as<typename F::value_type>;
  { f.format(a) } -> std::convertible_to<std::string>;
};

class RationalField {
 public:
  using value_type = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Rational& a) const { return a == 0; }
  Rational from_rational(const Rational& q) const { return q; }
  std::string format(const Rational& a) const { return to_string(a); }
  bool operator==(const RationalField&) const = default;
};

/// Integers modulo a prime p < 2^63, stored as canonical residues.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  /// Throws InputError unless p is prime and < 2^63.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t zero() const noexcept { return 0; }
  std::uint64_t one() const noexcept { return 1 % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p_);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t inv(std::uint64_t a) const;
  bool is_zero(std::uint64_t a) const noexcept { return a == 0; }
  /// DomainError if the denominator vanishes mod p.
  std::uint64_t from_rational(const Rational& q) const;
  std::uint64_t from_integer(const Integer& z) const;
  std::string format(std::uint64_t a) const { return std::to_string(a); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace quivermod
