#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quivermod/arith.hpp"

namespace quivermod {

/// A finite quiver stored as its arrow-multiplicity matrix:
/// arrows(i, j) is the number of arrows i -> j, loops allowed.
class Quiver {
 public:
  explicit Quiver(std::size_t vertex_count);
  Quiver(std::size_t vertex_count, std::vector<std::int64_t> arrows_row_major);

  /// One vertex with m loops.
  static Quiver loop(std::int64_t m);
  /// Two vertices, m arrows 0 -> 1.
  static Quiver kronecker(std::int64_t m);

  std::size_t vertex_count() const noexcept { return n_; }
  std::int64_t arrows(std::size_t i, std::size_t j) const { return arrows_.at(i * n_ + j); }
  void set_arrows(std::size_t i, std::size_t j, std::int64_t mult);

  bool operator==(const Quiver&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> arrows_;
};

/// Natural-number vector indexed by the vertices of a quiver.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::int64_t> entries);
  DimensionVector(std::initializer_list<std::int64_t> entries)
      : DimensionVector(std::vector<std::int64_t>(entries)) {}

  static DimensionVector zero(std::size_t size) { return DimensionVector(std::vector<std::int64_t>(size, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  Integer total() const;

  DimensionVector operator+(const DimensionVector& other) const;
  /// Throws DomainError if a component would go negative.
  DimensionVector operator-(const DimensionVector& other) const;
  DimensionVector scaled(std::int64_t k) const;

  auto operator<=>(const DimensionVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Integer weight per vertex.
class Stability {
 public:
  Stability() = default;
  explicit Stability(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
  Stability(std::initializer_list<std::int64_t> weights) : weights_(weights) {}

  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  /// Theta(d) = sum_i weights_i d_i.
  Integer evaluate(const DimensionVector& d) const;

 private:
  std::vector<std::int64_t> weights_;
};

Integer euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e);

Rational slope(const Stability& theta, const DimensionVector& d);

/// Exact comparison of slopes by cross-multiplication; returns <0, 0, >0.
int compare_slopes(const Stability& theta, const DimensionVector& d, const DimensionVector& e);

Integer gcd_of(const DimensionVector& d);

/// Integers a with sum a_i d_i = 1, built by iterated extended gcd. At each
/// step the new coefficient is the one of least absolute value, positive on
/// ties; earlier coefficients are rescaled accordingly.
std::vector<Integer> linearization_weights(const DimensionVector& d);

/// 1 - <d, d>.
Integer moduli_dimension(const Quiver& q, const DimensionVector& d);

/// n . d - 1, the relative dimension of the framed projective bundle P_n.
Integer framed_bundle_relative_dimension(const DimensionVector& d, const DimensionVector& n);

void check_sized(const Quiver& q, const DimensionVector& d, std::string_view what = "dimension vector");
void check_sized(const Quiver& q, const Stability& theta);

/// Line format: `vertices <k>` followed by `arrow <i> <j> <mult>` lines.
/// Blank lines and `#` comments are ignored.
Quiver parse_quiver(std::istream& in);
Quiver parse_quiver(std::string_view text);
std::string format_quiver(const Quiver& q);

DimensionVector parse_dimension_vector(std::string_view text);
Stability parse_stability(std::string_view text);
std::string to_string(const DimensionVector& d);

}  // namespace quivermod
