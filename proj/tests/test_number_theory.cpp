#include <doctest.h>

#include "quivermod/number_theory.hpp"
#include "support/oracles.hpp"

using namespace quivermod;

namespace {

const Place R = Place::real();
Place P(long p) { return Place::prime(Integer(p)); }

std::int64_t random_squarefree(testing::Rng& rng, std::int64_t bound) {
  for (;;) {
    const auto x = rng.nonzero(-bound, bound);
    bool ok = true;
    for (std::int64_t k = 2; k * k <= std::abs(x); ++k)
      if (x % (k * k) == 0) ok = false;
    if (ok) return x;
  }
}

int symbol_product(const Rational& u, const Rational& v) {
  int prod = 1;
  for (const auto& e : hilbert_symbols(u, v)) prod *= e.value;
  return prod;
}

}  // namespace

TEST_CASE("places and factorization") {
  CHECK(R.is_real());
  CHECK(R.to_string() == "real");
  CHECK(P(7).to_string() == "7");
  CHECK_THROWS_AS(Place::prime(Integer(9)), InputError);
  CHECK(R < P(2));
  using Factors = std::vector<std::pair<Integer, unsigned>>;
  CHECK(factor_integer(Integer(360)) == Factors{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factor_integer(Integer(-97)) == Factors{{97, 1}});
  CHECK(factor_integer(Integer(1)).empty());
  CHECK(factor_integer(Integer(1000003) * 999983) == Factors{{999983, 1}, {1000003, 1}});
}

TEST_CASE("Hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, R) == -1);
  CHECK(hilbert_symbol(-1, -1, P(2)) == -1);
  CHECK(hilbert_symbol(-1, -1, P(3)) == 1);
  CHECK(hilbert_symbol(1, Rational(-7, 3), P(3)) == 1);
  CHECK(hilbert_symbol(2, 3, P(3)) == -1);
  CHECK(hilbert_symbol(2, 3, P(2)) == -1);
  CHECK(hilbert_symbol(Rational(8), Rational(12), P(3)) == hilbert_symbol(2, 3, P(3)));  // square classes
  CHECK_THROWS_AS(hilbert_symbol(0, 1, R), DomainError);
  for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(hilbert_symbol(1, Rational(p), P(p)) == 1);

  // x^2 + y^2 = -1 (mod 8) has no solution, matching (-1, -1)_2 = -1
  bool solvable = false;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) solvable = solvable || (x * x + y * y + 1) % 8 == 0;
  CHECK_FALSE(solvable);
}

TEST_CASE("Hilbert symbols agree with local search") {
  testing::Rng rng(103);
  for (int i = 0; i < 300; ++i) {
    const auto u = random_squarefree(rng, 30), v = random_squarefree(rng, 30);
    for (long p : {2L, 3L, 5L, 7L})
      CHECK(hilbert_symbol(u, v, P(p)) == testing::local_symbol_by_search(u, v, p));
  }
}

TEST_CASE("product formula") {
  testing::Rng rng(107);
  for (int i = 0; i < 200; ++i) {
    const auto u = rng.nonzero_rational(200, 50), v = rng.nonzero_rational(200, 50);
    CHECK(symbol_product(u, v) == 1);
    const auto places = relevant_places(u, v);
    REQUIRE(places.size() >= 2);
    CHECK(places[0] == R);
    CHECK(places[1] == P(2));
  }
}

TEST_CASE("split quaternions") {
  CHECK(quaternion_is_split(QuaternionAlgebra(1, 1)));
  CHECK_FALSE(quaternion_is_split(QuaternionAlgebra(-1, -1)));
  CHECK(quaternion_is_split(QuaternionAlgebra(-1, 1)));
  CHECK(quaternion_is_split(QuaternionAlgebra(5, -1)));  // 5 = 1 + 4
  CHECK_FALSE(quaternion_is_split(QuaternionAlgebra(2, 3)));
  CHECK_FALSE(testing::diagonal_conic_search(2, 3, -1));  // 2x^2 + 3y^2 = z^2
}

TEST_CASE("conic examples") {
  const auto l2 = conic_has_rational_point({0, 0, -2, -2, 0, 0});
  CHECK(l2.has_point);
  REQUIRE(l2.witness);
  const auto& [x0, y0, z0] = *l2.witness;
  CHECK(evaluate_ternary<Rational>({0, 0, -2, -2, 0, 0}, x0, y0, z0) == 0);
  CHECK(evaluate_ternary<Rational>({0, 0, -2, -2, 0, 0}, 1, 0, 0) == 0);

  CHECK_FALSE(conic_has_rational_point({-1, 0, 0, -2, 0, -1}).has_point);
  const auto three = conic_has_rational_point({1, 0, 0, 1, 0, -3});
  CHECK_FALSE(three.has_point);
  CHECK_FALSE(three.witness);
  CHECK_FALSE(testing::diagonal_conic_search(1, 1, -3));

  const auto pyth = conic_has_rational_point({1, 0, 0, 1, 0, -1});
  REQUIRE(pyth.witness);
  const auto& w = *pyth.witness;
  CHECK(w[0] * w[0] + w[1] * w[1] == w[2] * w[2]);
  CHECK_THROWS_AS(conic_has_rational_point({1, 0, 0, 1, 0, 0}), DomainError);
}

TEST_CASE("split verdict matches conic points") {
  testing::Rng rng(109);
  for (int i = 0; i < 100; ++i) {
    const auto a = rng.nonzero(-30, 30), b = rng.nonzero(-30, 30), c = rng.nonzero(-30, 30);
    const auto decision = conic_has_rational_point({a, 0, 0, b, 0, c});
    const auto found = testing::diagonal_conic_search(a, b, c);
    CHECK(decision.has_point == found.has_value());
    CHECK(decision.has_point == quaternion_is_split(decision.quaternion));
    if (decision.has_point) {
      REQUIRE(decision.witness);
      const auto& [x, y, z] = *decision.witness;
      CHECK(a * x * x + b * y * y + c * z * z == 0);
    }
  }
}

TEST_CASE("witnesses on general conics") {
  testing::Rng rng(113);
  int with_point = 0;
  for (int i = 0; i < 150; ++i) {
    std::array<Rational, 6> coeffs;
    for (auto& c : coeffs) c = rng.rational(12, 3);
    if (!is_smooth_quadric(ternary_form(coeffs))) continue;
    const auto decision = conic_has_rational_point(coeffs);
    CHECK(decision.has_point == quaternion_is_split(quaternion_from_ternary(ternary_form(coeffs))));
    if (!decision.has_point) continue;
    ++with_point;
    REQUIRE(decision.witness);
    const auto& [x, y, z] = *decision.witness;
    CHECK(evaluate_ternary(coeffs, Rational(x), Rational(y), Rational(z)) == 0);
    CHECK((x != 0 || y != 0 || z != 0));
  }
  CHECK(with_point > 10);
}

TEST_CASE("Clifford invariants of model points") {
  const auto split = clifford_invariant_of_model_point(L2Point::from_coordinates(0, 1, 0, 0, 0));
  CHECK(split.split);
  const auto nonsplit = clifford_invariant_of_model_point(L2Point::from_coordinates(-1, 0, -1, 0, 0));
  CHECK_FALSE(nonsplit.split);
  CHECK_THROWS_AS(clifford_invariant_of_model_point(L2Point::from_coordinates(1, 1, 1, 0, 0)), DomainError);

  testing::Rng rng(127);
  for (int i = 0; i < 40; ++i) {
    const auto p = k3_invariants(rng.matrix(4), rng.matrix(4), rng.matrix(4));
    if (!p.stable()) continue;
    const auto inv = clifford_invariant_of_model_point(p);
    CHECK(inv.split == conic_has_rational_point(k3_conic(p).coefficients).has_point);
  }
  CHECK_THROWS_AS(clifford_invariant_of_model_point(K3Point::from_coordinates({1, 0, 0, -1, 0, 0})), DomainError);
}

TEST_CASE("Hilbert polynomial of quadrics") {
  for (int t = 0; t <= 10; ++t) CHECK(hilbert_polynomial_quadric(1, t) == 2 * t + 1);
  for (int t = 1; t <= 10; ++t) CHECK(hilbert_polynomial_quadric(0, t) == 2);
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(hilbert_polynomial_quadric(n, 0) == 1);
  CHECK(hilbert_polynomial_quadric(0, 0) == 2);  // two points; C(-1, 1) = -1
  CHECK(hilbert_polynomial_quadric(1, -3) == -5);
  CHECK(hilbert_polynomial_quadric(2, 2) == 9);  // quadric surface: (t+1)^2
}
