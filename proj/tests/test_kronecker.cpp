#include <doctest.h>

#include <numeric>

#include "quivermod/kronecker.hpp"
#include "quivermod/stability.hpp"
#include "support/oracles.hpp"

using namespace quivermod;

namespace {

Integer kronecker_self_pairing(std::int64_t m, KroneckerVector d) {
  return euler_form(Quiver::kronecker(m), d.to_dimension_vector(), d.to_dimension_vector());
}

}  // namespace

TEST_CASE("reflections") {
  CHECK(kronecker_reflect_sink(3, {1, 1}) == KroneckerVector{1, 2});
  CHECK(kronecker_reflect_source(3, {2, 1}) == KroneckerVector{1, 1});
  CHECK(kronecker_dualize({2, 5}) == KroneckerVector{5, 2});
  CHECK_THROWS_AS(kronecker_reflect_sink(3, {1, 4}), DomainError);
  CHECK_THROWS_AS(kronecker_reflect_source(3, {7, 2}), DomainError);

  testing::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto m = rng.uniform(3, 8);
    const KroneckerVector d{rng.uniform(0, 30), rng.uniform(0, 30)};
    if (d.d1 == 0 && d.d2 == 0) continue;
    const auto g = std::gcd(d.d1, d.d2);
    if (m * d.d1 >= d.d2) {
      const auto r = kronecker_reflect_sink(m, d);
      CHECK(kronecker_self_pairing(m, r) == kronecker_self_pairing(m, d));
      CHECK(std::gcd(r.d1, r.d2) == g);
      CHECK(kronecker_reflect_sink(m, r) == d);
    }
    if (m * d.d2 >= d.d1) {
      const auto r = kronecker_reflect_source(m, d);
      CHECK(kronecker_self_pairing(m, r) == kronecker_self_pairing(m, d));
      CHECK(std::gcd(r.d1, r.d2) == g);
    }
    CHECK(kronecker_self_pairing(m, kronecker_dualize(d)) == kronecker_self_pairing(m, d));
  }
}

TEST_CASE("normalization") {
  const auto a = normalize_kronecker(3, {1, 2});
  REQUIRE(a.normalized);
  CHECK(*a.normalized == KroneckerVector{1, 1});
  CHECK(a.trace == std::vector<KroneckerMove>{KroneckerMove::reflect_sink});

  const auto b = normalize_kronecker(3, {3, 2});
  REQUIRE(b.normalized);
  CHECK(*b.normalized == KroneckerVector{2, 3});
  CHECK(b.trace == std::vector<KroneckerMove>{KroneckerMove::dualize});

  CHECK(normalize_kronecker(3, {2, 2}).trace.empty());
  CHECK(normalize_kronecker(3, {1, 5}).degenerate());
  CHECK(normalize_kronecker(3, {0, 4}).degenerate());
  CHECK_THROWS_AS(normalize_kronecker(2, {1, 1}), DomainError);

  testing::Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    const auto m = rng.uniform(3, 7);
    const KroneckerVector d{rng.uniform(1, 40), rng.uniform(1, 40)};
    const auto norm = normalize_kronecker(m, d);
    if (norm.degenerate()) continue;
    const auto inst = make_kronecker_instance(m, *norm.normalized);
    CHECK(inst.normalized());
    CHECK(kronecker_self_pairing(m, *norm.normalized) == kronecker_self_pairing(m, d));
    CHECK(inst.n == std::gcd(d.d1, d.d2));
  }
}

TEST_CASE("instances") {
  const auto inst = make_kronecker_instance(3, {4, 6});
  CHECK(inst.n == 2);
  CHECK(inst.p == 2);
  CHECK(inst.q == 3);
  CHECK(inst.discriminant() == 18 - 4 - 9);
  CHECK_THROWS_AS(make_kronecker_instance(3, {0, 0}), DomainError);
}

TEST_CASE("scans") {
  const auto loop = loop_criterion_exceptions({2, 6}, {2, 6}, Execution::serial);
  CHECK(loop.exceptions == expected_loop_exceptions({2, 6}, {2, 6}));
  CHECK(loop.scanned == 25);
  const auto kron = kronecker_criterion_exceptions({3, 6}, {1, 8}, Execution::serial);
  CHECK(kron.exceptions == expected_kronecker_exceptions({3, 6}, {1, 8}));
  CHECK(expected_kronecker_exceptions({4, 6}, {1, 8}).empty());
  CHECK_THROWS_AS(loop_criterion_exceptions({1, 3}, {2, 3}), DomainError);
  CHECK_THROWS_AS(kronecker_criterion_exceptions({2, 3}, {1, 3}), DomainError);
}

TEST_CASE("inequality trace examples") {
  const auto t = kronecker_inequality_trace(3, {2, 2}, {1, 1});
  CHECK(t.n == 2);
  CHECK(t.k == 0);
  CHECK(t.slope_condition);
  CHECK(t.f3_holds);
  CHECK(t.pairing == -1);
  REQUIRE(t.finfty_holds);
  CHECK(*t.finfty_holds);
  CHECK(*t.finfty_lhs == 4);
  CHECK(*t.finfty_rhs == 4);

  const auto u = kronecker_inequality_trace(4, {1, 2}, {1, 1});
  CHECK_FALSE(u.f3_holds);
  CHECK(u.pairing == -3);
  CHECK_FALSE(u.finfty_holds);

  CHECK_THROWS_AS(kronecker_inequality_trace(3, {1, 5}, {1, 1}), DomainError);
  CHECK_THROWS_AS(kronecker_inequality_trace(3, {2, 2}, {0, 1}), DomainError);
  CHECK_THROWS_AS(kronecker_inequality_trace(3, {2, 2}, {2, 2}), DomainError);
}

TEST_CASE("inequality trace is equivalent to the pairing bound") {
  testing::Rng rng(41);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto m = rng.uniform(3, 6);
    const KroneckerVector raw{rng.uniform(1, 12), rng.uniform(1, 12)};
    const auto norm = normalize_kronecker(m, raw);
    if (norm.degenerate()) continue;
    const auto d = *norm.normalized;
    const KroneckerVector e{rng.uniform(1, d.d1), rng.uniform(0, d.d2 - 1)};
    if (e == d) continue;
    const auto t = kronecker_inequality_trace(m, d, e);
    if (!t.slope_condition) continue;
    ++checked;
    CHECK(t.f3_holds == (t.pairing >= -1));
    if (m == 3) CHECK(*t.finfty_holds == (t.pairing == -1));
    // duality swaps the roles of (a, b) and (dd, c)
    CHECK(euler_form(Quiver::kronecker(m), DimensionVector{t.dd, t.c}, DimensionVector{t.b, t.a}) == t.pairing);
  }
  CHECK(checked > 200);
}
