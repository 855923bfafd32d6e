#include <doctest.h>

#include "quivermod/arith.hpp"
#include "quivermod/field.hpp"
#include "quivermod/linalg.hpp"
#include "support/oracles.hpp"

using namespace quivermod;

TEST_CASE("rationals serialize as p/q and round-trip") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational(" +2/3 ") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);

  testing::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r = rng.rational(1'000'000, 1'000);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("lists") {
  CHECK(parse_int_list("2, 3,4") == std::vector<std::int64_t>{2, 3, 4});
  CHECK_THROWS_AS(parse_int_list("2,,3"), InputError);
  CHECK(join({1, -2, 3}) == "1,-2,3");
  CHECK(parse_rational_list("1/2,3").size() == 2);
}

TEST_CASE("binomial extends polynomially to negative tops") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(-1, 2) == 1);   // (-1)(-2)/2
  CHECK(binomial(-2, 3) == -4);  // (-2)(-3)(-4)/6
  CHECK(binomial(7, 0) == 1);
}

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(15), InputError);
  const PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_rational(Rational(1, 2)) == 4);
  CHECK(f.from_rational(Rational(-1)) == 6);
  CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), DomainError);
  CHECK_THROWS_AS(f.inv(0), DomainError);

  const PrimeField big((std::uint64_t{1} << 61) - 1);
  for (std::uint64_t a : {std::uint64_t{2}, std::uint64_t{12345678901234567}, (std::uint64_t{1} << 61) - 2})
    CHECK(big.mul(a, big.inv(a)) == 1);

  const PrimeField two(2);
  CHECK(two.add(1, 1) == 0);
  CHECK(two.one() == 1);
}

TEST_CASE("rational linear algebra") {
  Matrix<Rational> m(3, 3, Rational(0));
  m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 4, m(1, 1) = 2, m(2, 2) = Rational(1, 3);
  const RationalField q;
  CHECK(rank(q, m) == 2);
  CHECK(determinant(q, m) == 0);
  const auto kernel = nullspace(q, m);
  REQUIRE(kernel.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * kernel[0][c];
    CHECK(s == 0);
  }
  m(1, 1) = 3;
  CHECK(determinant(q, m) == Rational(2, 3));
  CHECK_THROWS_AS(determinant(q, Matrix<Rational>(2, 3, Rational(0))), InputError);
}

TEST_CASE("rational reconstruction") {
  const Integer p = 1000003;
  const Rational target(-17, 29);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(29).get_mpz_t(), p.get_mpz_t());
  Integer a = (Integer(-17) * inv) % p;
  if (a < 0) a += p;
  const auto r = rational_reconstruction(a, p);
  REQUIRE(r);
  CHECK(*r == target);
}

TEST_CASE("certified rank agrees with rational elimination") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 9)), cols = static_cast<std::size_t>(rng.uniform(1, 9));
    const std::size_t target = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(std::min(rows, cols))));
    // product of random rows x target and target x cols factors: rank <= target
    Matrix<Rational> left(rows, target, Rational(0)), right(target, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < target; ++k) left(i, k) = rng.rational(20, 7);
    for (std::size_t k = 0; k < target; ++k)
      for (std::size_t j = 0; j < cols; ++j) right(k, j) = rng.rational(20, 7);
    Matrix<Rational> m(rows, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < target; ++k) m(i, j) += left(i, k) * right(k, j);
    CHECK(certified_rank(m) == rank(RationalField{}, m));
  }
  // entries far beyond the modulus; second row is twice the first
  Matrix<Rational> huge(2, 2, Rational(0));
  huge(0, 0) = Rational(Integer(1) << 200);
  huge(0, 1) = Rational(1, Integer(1) << 150);
  huge(1, 0) = Rational(Integer(1) << 201);
  huge(1, 1) = Rational(1, Integer(1) << 149);
  CHECK(certified_rank(huge) == 1);
  huge(1, 1) += 1;
  CHECK(certified_rank(huge) == 2);
}
