#include "quivermod/quaternion.hpp"

#include <stdexcept>

namespace quivermod {

namespace {

void swap_columns(Matrix<Rational>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// col_dst += c * col_src and row_dst += c * row_src on S; col_dst += c * col_src on P.
void congruence_add(Matrix<Rational>& s, Matrix<Rational>& p, std::size_t dst, std::size_t src, const Rational& c) {
  for (std::size_t r = 0; r < s.rows(); ++r) s(r, dst) += c * s(r, src);
  for (std::size_t k = 0; k < s.cols(); ++k) s(dst, k) += c * s(src, k);
  for (std::size_t r = 0; r < p.rows(); ++r) p(r, dst) += c * p(r, src);
}

}  // namespace

Diagonalization diagonalize(const RationalForm& q) {
  const std::size_t n = q.variables();
  Matrix<Rational> s(n, n, Rational(0));
  Matrix<Rational> p(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) s(i, j) = i == j ? q.b()(i, i) : Rational(q.b()(i, j) / 2);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (s(i, i) != 0) pivot = i;
    if (pivot == n) {
      for (std::size_t i = k; i < n && pivot == n; ++i)
        for (std::size_t j = i + 1; j < n && pivot == n; ++j)
          if (s(i, j) != 0) {
            congruence_add(s, p, i, j, Rational(1));
            pivot = i;
          }
      if (pivot == n) break;  // remaining block is zero
    }
    s.swap_rows(pivot, k);
    swap_columns(s, pivot, k);
    swap_columns(p, pivot, k);
    for (std::size_t j = k + 1; j < n; ++j)
      if (s(k, j) != 0) congruence_add(s, p, j, k, Rational(-s(k, j) / s(k, k)));
  }
  Diagonalization out{std::vector<Rational>(n), std::move(p)};
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = s(i, i);
  return out;
}

RationalForm diagonal_form(const std::vector<Rational>& d) {
  Matrix<Rational> b(d.size(), d.size(), Rational(0));
  for (std::size_t i = 0; i < d.size(); ++i) b(i, i) = d[i];
  return RationalForm(RationalField{}, std::move(b));
}

RationalForm ternary_form(const std::array<Rational, 6>& c) {
  Matrix<Rational> b(3, 3, Rational(0));
  b(0, 0) = c[0];
  b(0, 1) = b(1, 0) = c[1];
  b(0, 2) = b(2, 0) = c[2];
  b(1, 1) = c[3];
  b(1, 2) = b(2, 1) = c[4];
  b(2, 2) = c[5];
  return RationalForm(RationalField{}, std::move(b));
}

QuaternionAlgebra::QuaternionAlgebra(Rational u_, Rational v_) : u(std::move(u_)), v(std::move(v_)) {
  if (u == 0 || v == 0) throw DomainError("quaternion parameters must be nonzero");
}

Algebra<RationalField> QuaternionAlgebra::structure_constants() const {
  Algebra<RationalField> h{RationalField{}, 4, std::vector<Rational>(64, Rational(0))};
  auto set = [&](std::size_t a, std::size_t b, std::size_t k, const Rational& c) { h.constants[(a * 4 + b) * 4 + k] = c; };
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, u);
  set(1, 2, 3, 1);
  set(1, 3, 2, u);
  set(2, 1, 3, -1);
  set(2, 2, 0, v);
  set(2, 3, 1, -v);
  set(3, 1, 2, -u);
  set(3, 2, 1, v);
  set(3, 3, 0, -u * v);
  return h;
}

QuaternionAlgebra quaternion_from_ternary(const RationalForm& q) {
  if (q.variables() != 3) throw DomainError("quaternion extraction needs a ternary form");
  if (!is_smooth_quadric(q)) throw DomainError("quaternion extraction needs a smooth conic");
  const auto diag = diagonalize(q);
  const auto& d = diag.diagonal;
  QuaternionAlgebra out(-d[0] * d[1], -d[1] * d[2]);

  // 1, i, j, k -> 1, e0'e1', e1'e2', (e0'e1')(e1'e2') inside Cl(q)
  const auto cl = build_clifford(q);
  const auto& a = cl.algebra;
  std::array<Algebra<RationalField>::Element, 3> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    gens[i].assign(a.dim, Rational(0));
    for (std::size_t l = 0; l < 3; ++l) gens[i][std::size_t{1} << l] = diag.basis(l, i);
  }
  const auto ii = a.multiply(gens[0], gens[1]);
  const auto jj = a.multiply(gens[1], gens[2]);
  const std::array<Algebra<RationalField>::Element, 4> image{a.basis(0), ii, jj, a.multiply(ii, jj)};

  const auto h = out.structure_constants();
  bool ok = true;
  for (std::size_t x = 0; x < 4 && ok; ++x)
    for (std::size_t y = 0; y < 4 && ok; ++y) {
      Algebra<RationalField>::Element expected(a.dim, Rational(0));
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t m = 0; m < a.dim; ++m) expected[m] += h.constant(x, y, k) * image[k][m];
      ok = a.multiply(image[x], image[y]) == expected;
    }
  Matrix<Rational> span(4, a.dim, Rational(0));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t m = 0; m < a.dim; ++m) {
      if (std::popcount(m) % 2 != 0 && image[x][m] != 0) ok = false;
      span(x, m) = image[x][m];
    }
  if (!ok || rank(RationalField{}, span) != 4)
    throw std::logic_error("quaternion basis does not map isomorphically onto the even Clifford algebra");
  return out;
}

}  // namespace quivermod
