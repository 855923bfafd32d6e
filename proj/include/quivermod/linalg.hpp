#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quivermod/field.hpp"

namespace quivermod {

/// Dense row-major matrix; no arithmetic of its own, see the free functions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <CoefficientField F>
std::vector<std::size_t> row_reduce(const F& field, Matrix<typename F::value_type>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && field.is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(pr, row);
    const auto inv = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!field.is_zero(m(row, c))) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <CoefficientField F>
std::size_t rank(const F& field, Matrix<typename F::value_type> m) {
  return row_reduce(field, m).size();
}

template <CoefficientField F>
typename F::value_type determinant(const F& field, Matrix<typename F::value_type> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  auto det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && field.is_zero(m(pr, col))) ++pr;
    if (pr == n) return field.zero();
    if (pr != col) {
      m.swap_rows(pr, col);
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const auto inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (field.is_zero(m(r, col))) continue;
      const auto factor = field.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(col, c)));
    }
  }
  return det;
}

/// Basis of {x : m x = 0}; the basis vector for free column j has a 1 at j
/// and 0 at every other free column.
template <CoefficientField F>
std::vector<std::vector<typename F::value_type>> nullspace(const F& field, Matrix<typename F::value_type> m) {
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename F::value_type> v(m.cols(), field.zero());
    v[j] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact rank over the rationals. Runs elimination modulo a large prime;
/// full rank there is a certificate, and a deficient result is certified by
/// lifting the modular kernel with rational reconstruction and checking it
/// over the integers. Falls back to rational elimination if no lift checks.
std::size_t certified_rank(const Matrix<Rational>& m);

/// Rational r/s with r = a (mod p), |r|, s <= sqrt(p / 2), if one exists.
std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& p);

}  // namespace quivermod
