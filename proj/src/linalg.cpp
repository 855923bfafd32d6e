#include "quivermod/linalg.hpp"

#include <array>

namespace quivermod {

std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& p) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(p / 2).get_mpz_t());
  Integer r0 = p, r1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
  return make_rational(r1, t1);
}

namespace {

// Rows scaled by the lcm of their denominators; rank is unchanged.
Matrix<Integer> integerize(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

std::optional<std::size_t> modular_attempt(const Matrix<Integer>& mz, const PrimeField& field) {
  const Integer p(std::to_string(field.characteristic()), 10);
  Matrix<std::uint64_t> mp(mz.rows(), mz.cols(), 0);
  for (std::size_t r = 0; r < mz.rows(); ++r)
    for (std::size_t c = 0; c < mz.cols(); ++c) mp(r, c) = field.from_integer(mz(r, c));
  auto reduced = mp;
  const auto pivots = row_reduce(field, reduced);
  const std::size_t rank_p = pivots.size();
  if (rank_p == std::min(mz.rows(), mz.cols())) return rank_p;

  // rank over Q >= rank_p; show the kernel has dimension >= cols - rank_p
  for (const auto& v : nullspace(field, mp)) {
    std::vector<Rational> lifted;
    lifted.reserve(v.size());
    Integer den = 1;
    for (auto x : v) {
      auto q = rational_reconstruction(Integer(std::to_string(x), 10), p);
      if (!q) return std::nullopt;
      den = lcm(den, q->get_den());
      lifted.push_back(std::move(*q));
    }
    std::vector<Integer> w(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) w[i] = lifted[i].get_num() * (den / lifted[i].get_den());
    for (std::size_t r = 0; r < mz.rows(); ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < mz.cols(); ++c)
        if (w[c] != 0 && mz(r, c) != 0) s += mz(r, c) * w[c];
      if (s != 0) return std::nullopt;
    }
  }
  return rank_p;
}

}  // namespace

std::size_t certified_rank(const Matrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto mz = integerize(m);
  Integer candidate = Integer(1) << 62;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Integer p;
    mpz_nextprime(p.get_mpz_t(), candidate.get_mpz_t());
    const PrimeField field(std::stoull(p.get_str()));
    if (auto r = modular_attempt(mz, field)) return *r;
    candidate = p + (Integer(1) << 40);
  }
  return rank(RationalField{}, m);
}

}  // namespace quivermod
