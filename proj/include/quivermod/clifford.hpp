#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quivermod/field.hpp"
#include "quivermod/linalg.hpp"

namespace quivermod {

/// Quadratic form Q(sum l_i e_i) = sum_{i <= j} b_ij l_i l_j, stored by its
/// symmetric b-matrix. The quadric it defines has dimension variables() - 2.
template <CoefficientField F>
class QuadraticFormB {
 public:
  using value_type = typename F::value_type;

  /// InputError unless b is square, nonempty and symmetric.
  QuadraticFormB(F field, Matrix<value_type> b) : field_(std::move(field)), b_(std::move(b)) {
    if (b_.rows() == 0 || b_.rows() != b_.cols()) throw InputError("b-matrix must be square and nonempty");
    if (b_.rows() > 16) throw CapacityError("at most 16 variables");
    for (std::size_t i = 0; i < b_.rows(); ++i)
      for (std::size_t j = i + 1; j < b_.cols(); ++j)
        if (b_(i, j) != b_(j, i)) throw InputError("b-matrix must be symmetric");
  }

  const F& field() const noexcept { return field_; }
  const Matrix<value_type>& b() const noexcept { return b_; }
  std::size_t variables() const noexcept { return b_.rows(); }
  std::int64_t quadric_dimension() const noexcept { return static_cast<std::int64_t>(b_.rows()) - 2; }

  /// Gram form of the polarization: b_ij off the diagonal, 2 b_ii on it.
  value_type phi(std::size_t i, std::size_t j) const { return i == j ? field_.add(b_(i, i), b_(i, i)) : b_(i, j); }
  Matrix<value_type> gram() const {
    Matrix<value_type> g(variables(), variables(), field_.zero());
    for (std::size_t i = 0; i < variables(); ++i)
      for (std::size_t j = 0; j < variables(); ++j) g(i, j) = phi(i, j);
    return g;
  }

  value_type evaluate(std::span<const value_type> v) const {
    check_length(v);
    auto s = field_.zero();
    for (std::size_t i = 0; i < variables(); ++i)
      for (std::size_t j = i; j < variables(); ++j)
        s = field_.add(s, field_.mul(b_(i, j), field_.mul(v[i], v[j])));
    return s;
  }
  value_type bilinear(std::span<const value_type> u, std::span<const value_type> v) const {
    check_length(u);
    check_length(v);
    auto s = field_.zero();
    for (std::size_t i = 0; i < variables(); ++i)
      for (std::size_t j = 0; j < variables(); ++j) s = field_.add(s, field_.mul(u[i], field_.mul(phi(i, j), v[j])));
    return s;
  }

 private:
  void check_length(std::span<const value_type> v) const {
    if (v.size() != variables()) throw InputError("vector length does not match the number of variables");
  }

  F field_;
  Matrix<value_type> b_;
};

/// sum_{i<r} l_i l_{i+r} + l_{n+1}^2 with r = floor((n+1)/2), in n+2 variables.
template <CoefficientField F>
QuadraticFormB<F> standard_form(const F& field, std::size_t n) {
  const std::size_t vars = n + 2;
  const std::size_t r = (n + 1) / 2;
  Matrix<typename F::value_type> b(vars, vars, field.zero());
  for (std::size_t i = 0; i < r; ++i) b(i, i + r) = b(i + r, i) = field.one();
  b(n + 1, n + 1) = field.one();
  return QuadraticFormB<F>(field, std::move(b));
}

/// Characteristic != 2: Phi nondegenerate. Characteristic 2 with an odd
/// number of variables: the radical of Phi is a line on which Q is nonzero.
template <CoefficientField F>
bool is_smooth_quadric(const QuadraticFormB<F>& q) {
  const auto& f = q.field();
  if (f.characteristic() != 2 || q.variables() % 2 == 0) return !f.is_zero(determinant(f, q.gram()));
  const auto radical = nullspace(f, q.gram());
  return radical.size() == 1 && !f.is_zero(q.evaluate(radical.front()));
}

/// Finite-dimensional algebra over F given by structure constants:
/// basis_i * basis_j = sum_k constant(i, j, k) basis_k.
template <CoefficientField F>
struct Algebra {
  using value_type = typename F::value_type;
  using Element = std::vector<value_type>;

  F field;
  std::size_t dim = 0;
  std::vector<value_type> constants;  // ((i * dim) + j) * dim + k

  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * dim + j) * dim + k];
  }
  Element basis(std::size_t i) const {
    Element e(dim, field.zero());
    e[i] = field.one();
    return e;
  }
  Element basis_product(std::size_t i, std::size_t j) const {
    const auto first = constants.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim);
    return Element(first, first + static_cast<std::ptrdiff_t>(dim));
  }
  Element multiply(const Element& x, const Element& y) const {
    Element out(dim, field.zero());
    for (std::size_t i = 0; i < dim; ++i) {
      if (field.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (field.is_zero(y[j])) continue;
        const auto c = field.mul(x[i], y[j]);
        for (std::size_t k = 0; k < dim; ++k)
          if (!field.is_zero(constant(i, j, k))) out[k] = field.add(out[k], field.mul(c, constant(i, j, k)));
      }
    }
    return out;
  }
};

/// Clifford algebra with basis e_S for S a subset of the variables, encoded
/// as a bitmask; e_S is the product of its generators in increasing order.
template <CoefficientField F>
struct CliffordAlgebra {
  Algebra<F> algebra;             ///< basis index = mask
  std::vector<std::uint32_t> even_masks;
  Algebra<F> even;                ///< basis index = position in even_masks
};

namespace detail {

template <CoefficientField F>
class CliffordBuilder {
 public:
  using value_type = typename F::value_type;
  using Element = std::vector<value_type>;

  explicit CliffordBuilder(const QuadraticFormB<F>& q)
      : q_(q), dim_(std::size_t{1} << q.variables()), memo_(dim_ * q.variables()), done_(dim_ * q.variables(), false) {}

  /// e_S * e_g as a vector in the monomial basis.
  const Element& times_generator(std::uint32_t mask, std::size_t g) {
    const std::size_t key = mask * q_.variables() + g;
    if (done_[key]) return memo_[key];
    const auto& f = q_.field();
    Element out(dim_, f.zero());
    if (mask == 0) {
      out[std::size_t{1} << g] = f.one();
    } else {
      const auto top = static_cast<std::size_t>(std::bit_width(mask) - 1);
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << top);
      if (top < g) {
        out[mask | (std::uint32_t{1} << g)] = f.one();
      } else if (top == g) {
        out[rest] = q_.b()(g, g);
      } else {
        // e_rest e_top e_g = phi(top, g) e_rest - (e_rest e_g) e_top
        out[rest] = q_.phi(top, g);
        const Element moved = times_generator(rest, g);
        for (std::size_t m = 0; m < dim_; ++m) {
          if (f.is_zero(moved[m])) continue;
          const Element& t = times_generator(static_cast<std::uint32_t>(m), top);
          for (std::size_t k = 0; k < dim_; ++k)
            if (!f.is_zero(t[k])) out[k] = f.sub(out[k], f.mul(moved[m], t[k]));
        }
      }
    }
    done_[key] = true;
    memo_[key] = std::move(out);
    return memo_[key];
  }

  Element monomial_product(std::uint32_t s, std::uint32_t t) {
    const auto& f = q_.field();
    Element acc(dim_, f.zero());
    acc[s] = f.one();
    for (std::size_t g = 0; g < q_.variables(); ++g) {
      if (!((t >> g) & 1U)) continue;
      Element next(dim_, f.zero());
      for (std::size_t m = 0; m < dim_; ++m) {
        if (f.is_zero(acc[m])) continue;
        const Element& p = times_generator(static_cast<std::uint32_t>(m), g);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!f.is_zero(p[k])) next[k] = f.add(next[k], f.mul(acc[m], p[k]));
      }
      acc = std::move(next);
    }
    return acc;
  }

 private:
  const QuadraticFormB<F>& q_;
  std::size_t dim_;
  std::vector<Element> memo_;
  std::vector<bool> done_;
};

}  // namespace detail

template <CoefficientField F>
CliffordAlgebra<F> build_clifford(const QuadraticFormB<F>& q) {
  if (q.variables() > 7) throw CapacityError("Clifford algebras are built for at most 7 variables");
  const auto& f = q.field();
  const std::size_t dim = std::size_t{1} << q.variables();
  detail::CliffordBuilder<F> builder(q);
  CliffordAlgebra<F> out{Algebra<F>{f, dim, {}}, {}, Algebra<F>{f, 0, {}}};
  out.algebra.constants.reserve(dim * dim * dim);
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      const auto p = builder.monomial_product(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t));
      out.algebra.constants.insert(out.algebra.constants.end(), p.begin(), p.end());
    }
  for (std::uint32_t m = 0; m < dim; ++m)
    if (std::popcount(m) % 2 == 0) out.even_masks.push_back(m);
  const std::size_t ed = out.even_masks.size();
  out.even.dim = ed;
  out.even.constants.reserve(ed * ed * ed);
  for (auto s : out.even_masks)
    for (auto t : out.even_masks)
      for (auto k : out.even_masks) out.even.constants.push_back(out.algebra.constant(s, t, k));
  return out;
}

/// The map A (x) A^op -> End(A), a (x) b -> (x -> a x b), is bijective.
/// CapacityError above dimension 64.
template <CoefficientField F>
bool is_azumaya_over_field(const Algebra<F>& alg) {
  const std::size_t d = alg.dim;
  if (d == 0) return false;
  if (d > 64) throw CapacityError("Azumaya test is limited to algebras of dimension <= 64");
  const auto& f = alg.field;
  // column (i, j): entries (k, l) = coefficient of basis_k in basis_i basis_l basis_j
  Matrix<typename F::value_type> m(d * d, d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      const auto left = alg.basis_product(i, l);
      for (std::size_t j = 0; j < d; ++j) {
        const auto prod = alg.multiply(left, alg.basis(j));
        for (std::size_t k = 0; k < d; ++k) m(k * d + l, i * d + j) = prod[k];
      }
    }
  if constexpr (std::same_as<F, RationalField>)
    return certified_rank(m) == d * d;
  else
    return rank(f, std::move(m)) == d * d;
}

}  // namespace quivermod
