#pragma once

// Sparse multivariate polynomials over Q, enough to expand the model
// identities symbolically.

#include <map>
#include <vector>

#include "quivermod/arith.hpp"

namespace quivermod::testing {

class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;  // exponents, no trailing zeros

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: implicit constants keep formulas readable
    if (c != 0) terms_[{}] = c;
  }
  static Polynomial variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    Polynomial p;
    p.terms_[m] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.accumulate(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.accumulate(m, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(std::max(m1.size(), m2.size()), 0);
        for (std::size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
        for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
        r.accumulate(m, c1 * c2);
      }
    return r;
  }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  void accumulate(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Monomial, Rational> terms_;
};

}  // namespace quivermod::testing
