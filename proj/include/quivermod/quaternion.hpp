#pragma once

#include <vector>

#include "quivermod/clifford.hpp"

namespace quivermod {

using RationalForm = QuadraticFormB<RationalField>;

/// Congruence diagonalization: with P's columns as the new basis,
/// Q(P w) = sum_i diagonal[i] w_i^2.
struct Diagonalization {
  std::vector<Rational> diagonal;
  Matrix<Rational> basis;  ///< column i = new basis vector i in old coordinates
};

/// Symmetric Gaussian congruence over the rationals. Pivot: first nonzero
/// diagonal entry; when none is left, a hyperbolic pair e_i, e_j is split by
/// replacing e_i with e_i + e_j.
Diagonalization diagonalize(const RationalForm& q);

/// Diagonal form sum_i d_i x_i^2.
RationalForm diagonal_form(const std::vector<Rational>& d);

/// (u, v) over the rationals: basis 1, i, j, k with i^2 = u, j^2 = v,
/// ij = -ji = k.
struct QuaternionAlgebra {
  Rational u, v;

  /// DomainError if u or v is zero.
  QuaternionAlgebra(Rational u_, Rational v_);
  Algebra<RationalField> structure_constants() const;
  bool operator==(const QuaternionAlgebra&) const = default;
};

/// Quaternion pair of the even Clifford algebra of a smooth ternary form:
/// with <alpha, beta, gamma> a diagonalization and i = e0 e1, j = e1 e2 in the
/// diagonal basis, (u, v) = (i^2, j^2) = (-alpha beta, -beta gamma). The
/// identification with build_clifford's even part is checked on structure
/// constants before returning. DomainError for a singular or non-ternary form.
QuaternionAlgebra quaternion_from_ternary(const RationalForm& q);

/// Ternary b-matrix of sum c_k m_k, monomials x^2, xy, xz, y^2, yz, z^2.
RationalForm ternary_form(const std::array<Rational, 6>& coefficients);

}  // namespace quivermod
