#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivermod/models.hpp"
#include "quivermod/quaternion.hpp"

namespace quivermod {

/// A place of Q: a prime, or the real place.
class Place {
 public:
  static Place real() { return Place(Integer(0)); }
  /// InputError unless p is prime.
  static Place prime(const Integer& p);

  bool is_real() const { return p_ == 0; }
  const Integer& prime_number() const { return p_; }
  std::string to_string() const;
  auto operator<=>(const Place& o) const { return cmp(p_, o.p_) <=> 0; }
  bool operator==(const Place& o) const { return p_ == o.p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;  // 0 for the real place
};

/// Prime factorization of |n| by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Local Hilbert symbol (u, v)_place in {+1, -1}. DomainError if u or v is 0.
int hilbert_symbol(const Rational& u, const Rational& v, const Place& place);

struct HilbertSymbolEvaluation {
  Place place;
  int value;
};

/// The real place, 2, and every prime dividing a numerator or denominator of
/// u or v, in that order (primes ascending). All other symbols are +1.
std::vector<Place> relevant_places(const Rational& u, const Rational& v);
std::vector<HilbertSymbolEvaluation> hilbert_symbols(const Rational& u, const Rational& v);

bool quaternion_is_split(const QuaternionAlgebra& alg);

struct ConicDecision {
  bool has_point;
  QuaternionAlgebra quaternion;                  ///< even Clifford algebra of the form
  std::optional<std::array<Integer, 3>> witness;  ///< primitive integer point when has_point
};

/// Rational point on the projective conic sum c_k m_k = 0 (monomials x^2,
/// xy, xz, y^2, yz, z^2). Solvability is decided by local symbols; a witness
/// is then found by exhaustive search within Holzer's bound on the reduced
/// Legendre form and mapped back. DomainError for a degenerate form;
/// CapacityError when the search box exceeds `max_search`.
ConicDecision conic_has_rational_point(const std::array<Rational, 6>& coefficients,
                                       std::uint64_t max_search = 50'000'000);

struct CliffordInvariant {
  QuaternionAlgebra quaternion;
  bool split;
};

/// Quaternion class of the conic fiber over a stable model point.
/// DomainError when h = 0 (or the K3 point is degenerate).
CliffordInvariant clifford_invariant_of_model_point(const L2Point& p);
CliffordInvariant clifford_invariant_of_model_point(const K3Point& p);

/// C(t+n+1, n+1) - C(t+n-1, n+1), binomials extended polynomially.
Integer hilbert_polynomial_quadric(std::uint64_t n, const Integer& t);

}  // namespace quivermod
