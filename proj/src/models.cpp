#include "quivermod/models.hpp"

#include <vector>

#include "quivermod/field.hpp"
#include "quivermod/linalg.hpp"

namespace quivermod {

Rational ConicFiber::symmetric_determinant() const {
  const auto& c = coefficients;
  const Rational xx = c[0], xy = c[1] / 2, xz = c[2] / 2, yy = c[3], yz = c[4] / 2, zz = c[5];
  return xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) + xz * (xy * yz - yy * xz);
}

L2Point L2Point::from_coordinates(Rational a, Rational b, Rational c, Rational d, Rational e) {
  L2Point p{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), 0};
  p.h = p.b * p.b - p.a * p.c;
  return p;
}

L2Point l2_invariants(const RMat2& a, const RMat2& b) {
  auto co = model_formulas::l2_coordinates(a, b);
  return L2Point::from_coordinates(co[0], co[1], co[2], co[3], co[4]);
}

bool l2_is_stable(const RMat2& a, const RMat2& b) { return l2_invariants(a, b).stable(); }

std::array<Rational, 3> l2_semiinvariants(const RMat2& a, const RMat2& b, const RVec2& v) {
  return model_formulas::l2_semiinvariants(a, b, v);
}

ConicFiber l2_conic(const L2Point& p) { return ConicFiber{model_formulas::l2_conic(p.a, p.b, p.c)}; }

K3Point K3Point::from_coordinates(std::array<Rational, 6> coords) {
  K3Point p{std::move(coords), 0};
  p.h = model_formulas::k3_discriminant(p.coords);
  return p;
}

bool K3Point::degenerate() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

Rational K3Point::symmetric_matrix_determinant() const {
  const auto& [a, b, c, d, e, f] = coords;
  Matrix<Rational> m(3, 3, Rational(0));
  m(0, 0) = 2 * a;
  m(0, 1) = m(1, 0) = b;
  m(0, 2) = m(2, 0) = c;
  m(1, 1) = 2 * d;
  m(1, 2) = m(2, 1) = e;
  m(2, 2) = 2 * f;
  return determinant(RationalField{}, m);
}

K3Point k3_invariants(const RMat2& a, const RMat2& b, const RMat2& c) {
  return K3Point::from_coordinates(model_formulas::k3_coordinates(a, b, c));
}

bool k3_is_stable(const RMat2& a, const RMat2& b, const RMat2& c) { return k3_invariants(a, b, c).stable(); }

std::array<Rational, 3> k3_semiinvariants(const RMat2& a, const RMat2& b, const RMat2& c, const RVec2& v) {
  return model_formulas::k3_semiinvariants(a, b, c, v);
}

ConicFiber k3_conic(const K3Point& p) {
  if (p.degenerate()) throw DomainError("K3 point with all coordinates zero is not a point of P^5");
  return ConicFiber{model_formulas::k3_conic(p.coords)};
}

std::size_t burnside_dimension(std::span<const RMat2> matrices) {
  std::vector<RMat2> words{RMat2::identity()};
  std::vector<RMat2> layer{RMat2::identity()};
  for (int length = 1; length <= 3; ++length) {
    std::vector<RMat2> next;
    for (const auto& w : layer)
      for (const auto& g : matrices) next.push_back(w * g);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  Matrix<Rational> span(words.size(), 4, Rational(0));
  for (std::size_t r = 0; r < words.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) span(r, c) = words[r].m[c];
  return rank(RationalField{}, span);
}

RMat2 parse_mat2(std::string_view text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 4) throw InputError("2x2 matrix needs 4 entries a11,a12,a21,a22");
  return RMat2{{v[0], v[1], v[2], v[3]}};
}

RVec2 parse_vec2(std::string_view text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 2) throw InputError("vector needs 2 entries");
  return RVec2{v[0], v[1]};
}

}  // namespace quivermod
