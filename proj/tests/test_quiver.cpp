#include <doctest.h>

#include "quivermod/quiver.hpp"
#include "support/oracles.hpp"

using namespace quivermod;

namespace {

DimensionVector random_vector(testing::Rng& rng, std::size_t n, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = rng.uniform(0, hi);
  return DimensionVector(v);
}

Quiver random_quiver(testing::Rng& rng, std::size_t n) {
  Quiver q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.set_arrows(i, j, rng.uniform(0, 4));
  return q;
}

}  // namespace

TEST_CASE("quiver encodings") {
  const auto l2 = Quiver::loop(2);
  CHECK(l2.vertex_count() == 1);
  CHECK(l2.arrows(0, 0) == 2);
  const auto k3 = Quiver::kronecker(3);
  CHECK(k3.vertex_count() == 2);
  CHECK(k3.arrows(0, 1) == 3);
  CHECK(k3.arrows(1, 0) == 0);
  CHECK_THROWS_AS(Quiver(0), InputError);
  CHECK_THROWS_AS(Quiver(2, {0, -1, 0, 0}), InputError);
  CHECK_THROWS_AS(DimensionVector({1, -1}), InputError);
}

TEST_CASE("quiver text format") {
  const auto q = parse_quiver("# K3\nvertices 2\narrow 0 1 3  # three arrows\n\n");
  CHECK(q == Quiver::kronecker(3));
  CHECK(parse_quiver(format_quiver(q)) == q);
  CHECK_THROWS_AS(parse_quiver("arrow 0 1 3\n"), InputError);
  CHECK_THROWS_AS(parse_quiver("vertices 2\narrow 0 2 1\n"), InputError);
  CHECK_THROWS_AS(parse_quiver("vertices 2\narrow 0 1 1 extra\n"), InputError);
  CHECK_THROWS_AS(parse_quiver("vertices 2\nedge 0 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_quiver(""), InputError);
}

TEST_CASE("euler form") {
  CHECK(euler_form(Quiver::loop(2), {2}, {2}) == -4);
  CHECK(euler_form(Quiver::kronecker(3), {2, 2}, {2, 2}) == -4);
  CHECK(euler_form(Quiver::kronecker(3), {2, 5}, {0, 0}) == 0);
  CHECK_THROWS_AS(euler_form(Quiver::kronecker(3), {2}, {2, 2}), InputError);
}

TEST_CASE("slope") {
  CHECK(slope(Stability{1, 0}, {2, 2}) == Rational(1, 2));
  CHECK(slope(Stability{1, 0}, {1, 0}) == 1);
  CHECK_THROWS_AS(slope(Stability{1, 0}, {0, 0}), DomainError);
  CHECK(compare_slopes(Stability{1, 0}, {1, 0}, {1, 2}) == 1);
  CHECK(compare_slopes(Stability{1, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(compare_slopes(Stability{1, 0}, {0, 1}, {2, 2}) == -1);
}

TEST_CASE("gcd and linearization weights") {
  CHECK(gcd_of({2, 2}) == 2);
  CHECK(gcd_of({2, 3}) == 1);
  CHECK(gcd_of({6, 4, 10}) == 2);
  CHECK(gcd_of({0, 4}) == 4);
  CHECK_THROWS_AS(gcd_of({0, 0}), DomainError);

  CHECK(linearization_weights({2, 3}) == std::vector<Integer>{-1, 1});
  CHECK(linearization_weights({1}) == std::vector<Integer>{1});
  CHECK_THROWS_AS(linearization_weights({2, 2}), DomainError);

  testing::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_vector(rng, static_cast<std::size_t>(rng.uniform(1, 5)), 40);
    if (d.is_zero() || gcd_of(d) != 1) continue;
    const auto a = linearization_weights(d);
    Integer s = 0;
    for (std::size_t k = 0; k < d.size(); ++k) s += a[k] * d[k];
    CHECK(s == 1);
  }
}

TEST_CASE("moduli and bundle dimensions") {
  CHECK(moduli_dimension(Quiver::loop(2), {2}) == 5);
  CHECK(moduli_dimension(Quiver::kronecker(3), {2, 2}) == 5);
  CHECK(moduli_dimension(Quiver::kronecker(3), {1, 1}) == 2);
  CHECK(moduli_dimension(Quiver(1), {1}) == 0);  // <d, d> = 1
  CHECK(framed_bundle_relative_dimension({2, 2}, {1, 0}) == 1);
  CHECK(framed_bundle_relative_dimension({2}, {1}) == 1);
  CHECK(framed_bundle_relative_dimension({2, 2}, {2, 2}) == 7);
  CHECK_THROWS_AS(framed_bundle_relative_dimension({2, 0}, {0, 1}), DomainError);
}

TEST_CASE("euler form is bilinear") {
  testing::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto q = random_quiver(rng, n);
    const auto d = random_vector(rng, n, 9), d2 = random_vector(rng, n, 9), e = random_vector(rng, n, 9);
    CHECK(euler_form(q, d + d2, e) == euler_form(q, d, e) + euler_form(q, d2, e));
    CHECK(euler_form(q, e, d + d2) == euler_form(q, e, d) + euler_form(q, e, d2));
  }
}

TEST_CASE("slope is scale invariant and gcd is homogeneous") {
  testing::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto d = random_vector(rng, n, 12);
    if (d.is_zero()) continue;
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = rng.uniform(-5, 5);
    const Stability theta(w);
    const auto k = rng.uniform(1, 7);
    CHECK(slope(theta, d.scaled(k)) == slope(theta, d));
    CHECK(gcd_of(d.scaled(k)) == k * gcd_of(d));
  }
}
