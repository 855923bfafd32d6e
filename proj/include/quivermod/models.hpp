#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "quivermod/arith.hpp"

namespace quivermod {

/// 2x2 matrix over a commutative ring T, row-major.
template <class T>
struct Mat2 {
  std::array<T, 4> m{};

  const T& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  T& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity() { return Mat2{{T(1), T(0), T(0), T(1)}}; }
  static Mat2 elementary(int r, int c) {
    Mat2 out{{T(0), T(0), T(0), T(0)}};
    out(r, c) = T(1);
    return out;
  }

  T trace() const { return m[0] + m[3]; }
  T det() const { return m[0] * m[3] - m[1] * m[2]; }

  Mat2 operator+(const Mat2& o) const { return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}}; }
  Mat2 operator-(const Mat2& o) const { return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}}; }
  Mat2 operator*(const Mat2& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3], m[2] * o.m[0] + m[3] * o.m[2],
             m[2] * o.m[1] + m[3] * o.m[3]}};
  }
  Mat2 scaled(const T& s) const { return {{s * m[0], s * m[1], s * m[2], s * m[3]}}; }
  std::array<T, 2> apply(const std::array<T, 2>& v) const {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
  }

  bool operator==(const Mat2&) const = default;
};

template <class T>
using Vec2 = std::array<T, 2>;

/// det(u | w) with u, w as columns.
template <class T>
T det_columns(const Vec2<T>& u, const Vec2<T>& w) {
  return u[0] * w[1] - u[1] * w[0];
}

/// Coefficients of a ternary quadratic form in the monomial order
/// x^2, xy, xz, y^2, yz, z^2.
template <class T>
using TernaryCoefficients = std::array<T, 6>;

template <class T>
T evaluate_ternary(const TernaryCoefficients<T>& c, const T& x, const T& y, const T& z) {
  return c[0] * x * x + c[1] * x * y + c[2] * x * z + c[3] * y * y + c[4] * y * z + c[5] * z * z;
}

/// Ring-generic formulas of the two explicit models. Every T used here must
/// be constructible from Rational and closed under +, -, *.
namespace model_formulas {

/// A - tr(A)/2 * E.
template <class T>
Mat2<T> traceless_part(const Mat2<T>& a) {
  const T half_trace = T(Rational(1, 2)) * a.trace();
  return a - Mat2<T>::identity().scaled(half_trace);
}

/// (tr A'^2, tr A'B', tr B'^2, tr A, tr B).
template <class T>
std::array<T, 5> l2_coordinates(const Mat2<T>& a, const Mat2<T>& b) {
  const auto ap = traceless_part(a);
  const auto bp = traceless_part(b);
  return {(ap * ap).trace(), (ap * bp).trace(), (bp * bp).trace(), a.trace(), b.trace()};
}

/// (x, y, z) = (det(v|Av), det(A'v|B'v), det(v|Bv)).
template <class T>
std::array<T, 3> l2_semiinvariants(const Mat2<T>& a, const Mat2<T>& b, const Vec2<T>& v) {
  const auto ap = traceless_part(a);
  const auto bp = traceless_part(b);
  return {det_columns(v, a.apply(v)), det_columns(ap.apply(v), bp.apply(v)), det_columns(v, b.apply(v))};
}

/// c x^2 + a z^2 - 2 y^2 - 2 b x z.
template <class T>
TernaryCoefficients<T> l2_conic(const T& a, const T& b, const T& c) {
  const T two(Rational(2));
  return {c, T(Rational(0)), T(Rational(0)) - two * b, T(Rational(0)) - two, T(Rational(0)), a};
}

/// det(X + Y) - det X - det Y.
template <class T>
T polar_det(const Mat2<T>& x, const Mat2<T>& y) {
  return x(0, 0) * y(1, 1) + y(0, 0) * x(1, 1) - x(0, 1) * y(1, 0) - y(0, 1) * x(1, 0);
}

/// det(alpha A + beta B + gamma C) = a alpha^2 + b alpha beta + c alpha gamma
///                                 + d beta^2 + e beta gamma + f gamma^2.
template <class T>
std::array<T, 6> k3_coordinates(const Mat2<T>& a, const Mat2<T>& b, const Mat2<T>& c) {
  return {a.det(), polar_det(a, b), polar_det(a, c), b.det(), polar_det(b, c), c.det()};
}

/// 4adf + bce - c^2 d - a e^2 - b^2 f.
template <class T>
T k3_discriminant(const std::array<T, 6>& p) {
  const auto& [a, b, c, d, e, f] = p;
  return T(Rational(4)) * a * d * f + b * c * e - c * c * d - a * e * e - b * b * f;
}

/// (det(Av|Bv), det(Av|Cv), det(Bv|Cv)).
template <class T>
std::array<T, 3> k3_semiinvariants(const Mat2<T>& a, const Mat2<T>& b, const Mat2<T>& c, const Vec2<T>& v) {
  const auto av = a.apply(v);
  const auto bv = b.apply(v);
  const auto cv = c.apply(v);
  return {det_columns(av, bv), det_columns(av, cv), det_columns(bv, cv)};
}

/// f x^2 - e xy + c xz + d y^2 - b yz + a z^2.
///
/// (z, -y, x) spans the kernel of (alpha, beta, gamma) -> alpha Av + beta Bv
/// + gamma Cv, so the determinant form vanishes there. Against the naive
/// labelling f x^2 - e xy + d xz + c y^2 - b yz + a z^2 this exchanges c and
/// d; the conic-fitting test re-derives the correspondence.
template <class T>
TernaryCoefficients<T> k3_conic(const std::array<T, 6>& p) {
  const auto& [a, b, c, d, e, f] = p;
  const T zero(Rational(0));
  return {f, zero - e, c, d, zero - b, a};
}

}  // namespace model_formulas

using RMat2 = Mat2<Rational>;
using RVec2 = Vec2<Rational>;

/// Nondegenerate ternary quadratic form given by its six monomial
/// coefficients (x^2, xy, xz, y^2, yz, z^2).
struct ConicFiber {
  TernaryCoefficients<Rational> coefficients;

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    return evaluate_ternary(coefficients, x, y, z);
  }
  /// Determinant of the symmetric matrix S with Q(v) = v^T S v.
  Rational symmetric_determinant() const;
  /// Determinant of the polarization Phi = 2 S.
  Rational gram_determinant() const { return 8 * symmetric_determinant(); }
};

/// Point of the open subset b^2 != ac of A^5.
struct L2Point {
  Rational a, b, c, d, e;
  Rational h;  ///< b^2 - a c

  static L2Point from_coordinates(Rational a, Rational b, Rational c, Rational d, Rational e);
  bool stable() const { return h != 0; }
};

L2Point l2_invariants(const RMat2& a, const RMat2& b);
/// No common invariant line (over the algebraic closure) iff h != 0.
bool l2_is_stable(const RMat2& a, const RMat2& b);
std::array<Rational, 3> l2_semiinvariants(const RMat2& a, const RMat2& b, const RVec2& v);
ConicFiber l2_conic(const L2Point& p);

/// Point (a : b : c : d : e : f) of P^5, labels a..f for the coefficients of
/// alpha^2, alpha beta, alpha gamma, beta^2, beta gamma, gamma^2 in
/// det(alpha A + beta B + gamma C).
struct K3Point {
  std::array<Rational, 6> coords;
  Rational h;  ///< 4adf + bce - c^2 d - a e^2 - b^2 f on this representative

  static K3Point from_coordinates(std::array<Rational, 6> coords);
  bool degenerate() const;
  bool stable() const { return !degenerate() && h != 0; }
  /// Determinant of [[2a, b, c], [b, 2d, e], [c, e, 2f]], equal to 2h.
  Rational symmetric_matrix_determinant() const;
};

K3Point k3_invariants(const RMat2& a, const RMat2& b, const RMat2& c);
bool k3_is_stable(const RMat2& a, const RMat2& b, const RMat2& c);
std::array<Rational, 3> k3_semiinvariants(const RMat2& a, const RMat2& b, const RMat2& c, const RVec2& v);
/// DomainError for a degenerate point.
ConicFiber k3_conic(const K3Point& p);

/// Dimension of the span of the identity and all words of length <= 3 in
/// the given matrices. Equals 4 iff the tuple has no common invariant line
/// over the algebraic closure.
std::size_t burnside_dimension(std::span<const RMat2> matrices);

/// `a11,a12,a21,a22`.
RMat2 parse_mat2(std::string_view text);
RVec2 parse_vec2(std::string_view text);

}  // namespace quivermod
