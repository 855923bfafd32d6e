#include "quivermod/field.hpp"

namespace quivermod {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw InputError("prime field characteristic out of range");
  const Integer z(std::to_string(p), 10);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) throw InputError(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::from_integer(const Integer& z) const {
  Integer r;
  const Integer p(std::to_string(p_), 10);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return std::stoull(r.get_str());
}

std::uint64_t PrimeField::from_rational(const Rational& q) const {
  const auto den = from_integer(q.get_den());
  if (den == 0) throw DomainError("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p_));
  return mul(from_integer(q.get_num()), inv(den));
}

}  // namespace quivermod
