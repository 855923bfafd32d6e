#include <doctest.h>

#include <cstdlib>

#include "quivermod/kronecker.hpp"

using namespace quivermod;

TEST_CASE("loop scan: parallel matches serial") {
  const auto reference = loop_criterion_exceptions({2, 8}, {2, 12}, Execution::serial);
  CHECK(reference.exceptions == expected_loop_exceptions({2, 8}, {2, 12}));
  for (int threads : {1, 2, 3, 8}) {
    const auto r = loop_criterion_exceptions({2, 8}, {2, 12}, Execution::parallel, threads);
    CHECK(r.exceptions == reference.exceptions);
    CHECK(r.scanned == reference.scanned);
    CHECK(r.candidates == reference.candidates);
  }
}

TEST_CASE("kronecker scan: parallel matches serial") {
  const auto reference = kronecker_criterion_exceptions({3, 8}, {1, 10}, Execution::serial);
  CHECK(reference.exceptions == expected_kronecker_exceptions({3, 8}, {1, 10}));
  CHECK(reference.scanned == 6 * 100);
  for (int threads : {1, 2, 4, 7}) {
    const auto r = kronecker_criterion_exceptions({3, 8}, {1, 10}, Execution::parallel, threads);
    CHECK(r.exceptions == reference.exceptions);
    CHECK(r.candidates == reference.candidates);
  }
  // a box starting at 0 skips the zero vector and degenerate orbits
  const auto zero_box = kronecker_criterion_exceptions({3, 4}, {0, 6}, Execution::parallel, 3);
  CHECK(zero_box.exceptions == kronecker_criterion_exceptions({3, 4}, {0, 6}, Execution::serial).exceptions);
}

TEST_CASE("invalid scan ranges") {
  CHECK_THROWS_AS(kronecker_criterion_exceptions({2, 4}, {1, 3}, Execution::parallel, 2), DomainError);
}

TEST_CASE("thread count configuration") {
  ::setenv("QUIVERMOD_THREADS", "3", 1);
  CHECK(configured_thread_count() == 3);
  ::setenv("QUIVERMOD_THREADS", "junk", 1);
  CHECK(configured_thread_count() >= 1);
  ::setenv("QUIVERMOD_THREADS", "-2", 1);
  CHECK(configured_thread_count() >= 1);
  ::unsetenv("QUIVERMOD_THREADS");
  CHECK(configured_thread_count() >= 1);
}
