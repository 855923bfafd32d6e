#include "quivermod/number_theory.hpp"

#include <set>
#include <stdexcept>

namespace quivermod {

Place Place::prime(const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw InputError("place must be a prime: " + p.get_str());
  return Place(p);
}

std::string Place::to_string() const { return is_real() ? "real" : p_.get_str(); }

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& value) {
  if (value == 0) throw DomainError("cannot factor zero");
  Integer n = abs(value);
  std::vector<std::pair<Integer, unsigned>> out;
  bool n_prime = mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e == 0) return;
    out.emplace_back(d, e);
    n_prime = mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
  };
  strip(2);
  const Integer limit = Integer(1) << 48;
  for (Integer d = 3; !n_prime && d * d <= n; d += 2) {
    if (d * d > limit) throw CapacityError("integer too large for trial division: " + value.get_str());
    strip(d);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// Square class representative of a nonzero rational: num * den.
Integer square_class(const Rational& q) { return q.get_num() * q.get_den(); }

unsigned valuation(Integer& n, const Integer& p) {
  unsigned e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++e;
  }
  return e;
}

unsigned mod8(const Integer& n) { return static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 8)); }

}  // namespace

int hilbert_symbol(const Rational& u, const Rational& v, const Place& place) {
  if (u == 0 || v == 0) throw DomainError("Hilbert symbol of zero");
  Integer a = square_class(u), b = square_class(v);
  if (place.is_real()) return a < 0 && b < 0 ? -1 : 1;
  const Integer& p = place.prime_number();
  const unsigned alpha = valuation(a, p), beta = valuation(b, p);
  if (p == 2) {
    const unsigned ra = mod8(a), rb = mod8(b);
    const unsigned ea = ra % 4 == 3, eb = rb % 4 == 3;
    const unsigned wa = ra == 3 || ra == 5, wb = rb == 3 || rb == 5;
    return (ea * eb + alpha * wb + beta * wa) % 2 == 0 ? 1 : -1;
  }
  int s = (alpha % 2 == 1 && beta % 2 == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) ? -1 : 1;
  if (beta % 2 == 1) s *= mpz_jacobi(a.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) s *= mpz_jacobi(b.get_mpz_t(), p.get_mpz_t());
  return s;
}

std::vector<Place> relevant_places(const Rational& u, const Rational& v) {
  if (u == 0 || v == 0) throw DomainError("Hilbert symbol of zero");
  std::set<Integer> primes{Integer(2)};
  for (const Integer* n : {&u.get_num(), &u.get_den(), &v.get_num(), &v.get_den()})
    for (const auto& [p, e] : factor_integer(*n)) primes.insert(p);
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

std::vector<HilbertSymbolEvaluation> hilbert_symbols(const Rational& u, const Rational& v) {
  std::vector<HilbertSymbolEvaluation> out;
  for (const auto& place : relevant_places(u, v)) out.push_back({place, hilbert_symbol(u, v, place)});
  return out;
}

bool quaternion_is_split(const QuaternionAlgebra& alg) {
  for (const auto& s : hilbert_symbols(alg.u, alg.v))
    if (s.value != 1) return false;
  return true;
}

namespace {

Integer squarefree_part(const Integer& n, Integer& root) {
  Integer core = sgn(n) < 0 ? -1 : 1;
  root = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) core *= p;
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
  }
  return core;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Nonzero (x, y, z) with a x^2 + b y^2 = c z^2, a, b, c > 0, within Holzer's bound.
std::optional<std::array<Integer, 3>> holzer_search(const Integer& a, const Integer& b, const Integer& c,
                                                    std::uint64_t max_search) {
  const Integer bx = isqrt(b * c), by = isqrt(a * c);
  if ((bx + 1) * (by + 1) > max_search) throw CapacityError("Holzer search box too large");
  for (Integer x = 0; x <= bx; ++x)
    for (Integer y = 0; y <= by; ++y) {
      if (x == 0 && y == 0) continue;
      const Integer t = a * x * x + b * y * y;
      if (!mpz_divisible_p(t.get_mpz_t(), c.get_mpz_t())) continue;
      const Integer w = t / c;
      if (mpz_perfect_square_p(w.get_mpz_t()) == 0) continue;
      return std::array<Integer, 3>{x, y, isqrt(w)};
    }
  return std::nullopt;
}

}  // namespace

ConicDecision conic_has_rational_point(const std::array<Rational, 6>& coefficients, std::uint64_t max_search) {
  const auto q = ternary_form(coefficients);
  if (determinant(RationalField{}, q.gram()) == 0) throw DomainError("degenerate conic");
  const auto quat = quaternion_from_ternary(q);
  ConicDecision out{quaternion_is_split(quat), quat, std::nullopt};
  if (!out.has_point) return out;

  // Diagonal coordinates w_i = scale_i * y_i, where sum a_i y_i^2 = 0 is the
  // squarefree, pairwise coprime Legendre form.
  const auto diag = diagonalize(q);
  std::array<Integer, 3> a;
  std::array<Rational, 3> scale;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& d = diag.diagonal[i];
    Integer root;
    a[i] = squarefree_part(square_class(d), root);
    scale[i] = make_rational(d.get_den(), root);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Integer g = gcd(a[i], a[j]);
        if (g == 1) continue;
        const std::size_t k = 3 - i - j;
        const Integer h = gcd(g, a[k]);
        a[i] /= g;
        a[j] /= g;
        a[k] = (a[k] / h) * (g / h);
        scale[i] /= g;
        scale[j] /= g;
        scale[k] /= h;
        changed = true;
      }
  }
  int negatives = 0;
  for (const auto& x : a) negatives += sgn(x) < 0;
  if (negatives == 0 || negatives == 3) throw std::logic_error("split conic without a real point");
  if (negatives == 2)
    for (auto& x : a) x = -x;
  std::size_t c = 0;
  while (sgn(a[c]) > 0) ++c;
  const std::size_t i = c == 0 ? 1 : 0, j = c == 2 ? 1 : 2;
  const auto found = holzer_search(a[i], a[j], -a[c], max_search);
  if (!found) throw std::logic_error("locally solvable conic without a point within the Holzer bound");

  std::array<Rational, 3> w;
  w[i] = scale[i] * Rational((*found)[0]);
  w[j] = scale[j] * Rational((*found)[1]);
  w[c] = scale[c] * Rational((*found)[2]);
  std::array<Rational, 3> v;
  for (std::size_t r = 0; r < 3; ++r) v[r] = diag.basis(r, 0) * w[0] + diag.basis(r, 1) * w[1] + diag.basis(r, 2) * w[2];
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::array<Integer, 3> pt;
  Integer g = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    pt[r] = v[r].get_num() * (den / v[r].get_den());
    g = gcd(g, pt[r]);
  }
  if (g == 0) throw std::logic_error("zero witness");
  for (auto& x : pt) x /= g;
  for (const auto& x : pt)
    if (x != 0) {
      if (sgn(x) < 0)
        for (auto& y : pt) y = -y;
      break;
    }
  const std::array<Rational, 3> check{Rational(pt[0]), Rational(pt[1]), Rational(pt[2])};
  if (q.evaluate(check) != 0) throw std::logic_error("witness does not lie on the conic");
  out.witness = pt;
  return out;
}

namespace {

CliffordInvariant invariant_of_conic(const ConicFiber& conic) {
  auto quat = quaternion_from_ternary(ternary_form(conic.coefficients));
  const bool split = quaternion_is_split(quat);
  return {std::move(quat), split};
}

}  // namespace

CliffordInvariant clifford_invariant_of_model_point(const L2Point& p) {
  if (!p.stable()) throw DomainError("L2 point with h = 0 is not a moduli point");
  return invariant_of_conic(l2_conic(p));
}

CliffordInvariant clifford_invariant_of_model_point(const K3Point& p) {
  if (!p.stable()) throw DomainError("K3 point with h = 0 is not a moduli point");
  return invariant_of_conic(k3_conic(p));
}

Integer hilbert_polynomial_quadric(std::uint64_t n, const Integer& t) {
  return binomial(t + n + 1, n + 1) - binomial(t + n - 1, n + 1);
}

}  // namespace quivermod
