#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/parallel.hpp"
#include "quivermod/quiver.hpp"

namespace quivermod {

/// Dimension vector (d1, d2) of the Kronecker quiver K_m.
struct KroneckerVector {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  DimensionVector to_dimension_vector() const { return DimensionVector{d1, d2}; }
  auto operator<=>(const KroneckerVector&) const = default;
};

/// (d1, d2) -> (m d2 - d1, d2); DomainError if m d2 < d1.
KroneckerVector kronecker_reflect_source(std::int64_t m, KroneckerVector d);
/// (d1, d2) -> (d1, m d1 - d2); DomainError if m d1 < d2.
KroneckerVector kronecker_reflect_sink(std::int64_t m, KroneckerVector d);
KroneckerVector kronecker_dualize(KroneckerVector d);

/// d = n (p, q) with gcd(p, q) = 1.
struct KroneckerInstance {
  std::int64_t m = 0;
  KroneckerVector d;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;

  /// d1 <= d2 <= (m / 2) d1.
  bool normalized() const noexcept { return d.d1 <= d.d2 && 2 * d.d2 <= m * d.d1; }
  /// m p q - p^2 - q^2; negative means at most a point of stables.
  std::int64_t discriminant() const noexcept { return m * p * q - p * p - q * q; }
};

KroneckerInstance make_kronecker_instance(std::int64_t m, KroneckerVector d);

enum class KroneckerMove { dualize, reflect_source, reflect_sink };

std::string to_string(KroneckerMove move);

struct KroneckerNormalization {
  std::optional<KroneckerVector> normalized;  ///< absent for a degenerate orbit
  std::vector<KroneckerMove> trace;
  std::string degenerate_reason;

  bool degenerate() const noexcept { return !normalized.has_value(); }
};

/// Moves d into the window d1 <= d2 <= (m/2) d1 by dualizing and sink
/// reflections. Each sink reflection strictly lowers d1 + d2, so the walk is
/// finite; it stops as degenerate on a zero entry, a vector outside every
/// reflection domain, or a revisited state. Requires m >= 3.
KroneckerNormalization normalize_kronecker(std::int64_t m, KroneckerVector d);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  ///< inclusive

  bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
  std::int64_t size() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
};

struct ExceptionCell {
  std::int64_t m = 0;
  DimensionVector d;

  auto operator<=>(const ExceptionCell&) const = default;
};

struct ScanResult {
  std::vector<ExceptionCell> exceptions;  ///< m ascending, then d lexicographic
  std::size_t scanned = 0;
  std::size_t candidates = 0;  ///< cells on which the criterion was evaluated
  std::chrono::duration<double> elapsed{0};
};

/// Ample-stability criterion for L_m over m in m_range, d in d_range.
ScanResult loop_criterion_exceptions(IntRange m_range, IntRange d_range, Execution exec = Execution::parallel,
                                     int threads = 0);

/// For each (m, d1, d2) in m_range x box x box: normalize, drop degenerate
/// orbits and cells with m p q - p^2 - q^2 < 0, then run the criterion with
/// Theta = (1, 0) on the normalized vector. Exceptions are reported by
/// normalized vector, once each.
ScanResult kronecker_criterion_exceptions(IntRange m_range, IntRange box, Execution exec = Execution::parallel,
                                          int threads = 0);

/// {(2, (2))} when the grid contains it, else empty.
std::vector<ExceptionCell> expected_loop_exceptions(IntRange m_range, IntRange d_range);
/// {(3, (2, 2))} when the grid contains it, else empty.
std::vector<ExceptionCell> expected_kronecker_exceptions(IntRange m_range, IntRange box);

/// Audit record for a decomposition (a, b) + (c, dd) of a normalized
/// d = n (p, q), in the variables of the inequality chain used to classify
/// criterion failures.
struct KroneckerInequalityTrace {
  std::int64_t m = 0, n = 0, p = 0, q = 0;
  std::int64_t a = 0, b = 0, c = 0, dd = 0;
  Integer k;  ///< p dd + q a - n p q; k >= 0 iff mu(a, b) >= mu(c, dd)
  bool slope_condition = false;
  Integer f3_lhs;  ///< p q
  Integer f3_rhs;  ///< (m p q - p^2 - q^2) a dd + (p a + q dd) k
  bool f3_holds = false;  ///< equivalent to <e, f> >= -1
  Integer pairing;        ///< <(a, b), (c, dd)> evaluated directly
  std::optional<Integer> finfty_lhs;  ///< m = 3 only: n a p + n dd q
  std::optional<Integer> finfty_rhs;  ///< m = 3 only: a^2 + dd^2 + 3 a dd - 1
  std::optional<bool> finfty_holds;   ///< equivalent to <e, f> = -1 when m = 3
};

/// e = (a, b) is the first summand. DomainError when d is not normalized,
/// when e is not a proper summand, or when a = 0 or dd = 0 (the slope
/// condition then forces d = 0).
KroneckerInequalityTrace kronecker_inequality_trace(std::int64_t m, KroneckerVector d, KroneckerVector e);

}  // namespace quivermod
