#include "quivermod/quiver.hpp"

#include <istream>
#include <optional>
#include <sstream>

namespace quivermod {

Quiver::Quiver(std::size_t vertex_count) : n_(vertex_count), arrows_(vertex_count * vertex_count, 0) {
  if (vertex_count == 0) throw InputError("quiver needs at least one vertex");
}

Quiver::Quiver(std::size_t vertex_count, std::vector<std::int64_t> arrows_row_major)
    : n_(vertex_count), arrows_(std::move(arrows_row_major)) {
  if (vertex_count == 0) throw InputError("quiver needs at least one vertex");
  if (arrows_.size() != n_ * n_) throw InputError("arrow matrix must be vertex_count x vertex_count");
  for (auto a : arrows_)
    if (a < 0) throw InputError("negative arrow multiplicity");
}

Quiver Quiver::loop(std::int64_t m) {
  if (m < 0) throw InputError("negative loop count");
  return Quiver(1, {m});
}

Quiver Quiver::kronecker(std::int64_t m) {
  if (m < 0) throw InputError("negative arrow count");
  return Quiver(2, {0, m, 0, 0});
}

void Quiver::set_arrows(std::size_t i, std::size_t j, std::int64_t mult) {
  if (i >= n_ || j >= n_) throw InputError("vertex index out of range");
  if (mult < 0) throw InputError("negative arrow multiplicity");
  arrows_[i * n_ + j] = mult;
}

DimensionVector::DimensionVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto x : entries_)
    if (x < 0) throw InputError("dimension vector entries must be >= 0");
}

bool DimensionVector::is_zero() const noexcept {
  for (auto x : entries_)
    if (x != 0) return false;
  return true;
}

Integer DimensionVector::total() const {
  Integer s = 0;
  for (auto x : entries_) s += Integer(static_cast<long>(x));
  return s;
}

DimensionVector DimensionVector::operator+(const DimensionVector& other) const {
  if (size() != other.size()) throw InputError("dimension vector size mismatch");
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
  return DimensionVector(std::move(out));
}

DimensionVector DimensionVector::operator-(const DimensionVector& other) const {
  if (size() != other.size()) throw InputError("dimension vector size mismatch");
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = entries_[i] - other.entries_[i];
    if (out[i] < 0) throw DomainError("difference of dimension vectors is not a dimension vector");
  }
  return DimensionVector(std::move(out));
}

DimensionVector DimensionVector::scaled(std::int64_t k) const {
  if (k < 0) throw DomainError("negative scale factor");
  std::vector<std::int64_t> out(entries_);
  for (auto& x : out) x *= k;
  return DimensionVector(std::move(out));
}

Integer Stability::evaluate(const DimensionVector& d) const {
  if (d.size() != size()) throw InputError("stability and dimension vector size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += Integer(static_cast<long>(weights_[i])) * static_cast<long>(d[i]);
  return s;
}

void check_sized(const Quiver& q, const DimensionVector& d, std::string_view what) {
  if (d.size() != q.vertex_count())
    throw InputError(std::string(what) + " has " + std::to_string(d.size()) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
}

void check_sized(const Quiver& q, const Stability& theta) {
  if (theta.size() != q.vertex_count())
    throw InputError("stability has " + std::to_string(theta.size()) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
}

Integer euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  check_sized(q, d);
  check_sized(q, e);
  const std::size_t n = q.vertex_count();
  Integer s = 0;
  for (std::size_t i = 0; i < n; ++i) s += Integer(static_cast<long>(d[i])) * static_cast<long>(e[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = q.arrows(i, j);
      if (a == 0 || e[j] == 0) continue;
      s -= Integer(static_cast<long>(a)) * static_cast<long>(d[i]) * static_cast<long>(e[j]);
    }
  }
  return s;
}

Rational slope(const Stability& theta, const DimensionVector& d) {
  if (d.is_zero()) throw DomainError("slope of the zero dimension vector is undefined");
  return make_rational(theta.evaluate(d), d.total());
}

int compare_slopes(const Stability& theta, const DimensionVector& d, const DimensionVector& e) {
  if (d.is_zero() || e.is_zero()) throw DomainError("slope of the zero dimension vector is undefined");
  // totals are positive, so the cross-multiplied comparison preserves order
  const Integer lhs = theta.evaluate(d) * e.total();
  const Integer rhs = theta.evaluate(e) * d.total();
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

Integer gcd_of(const DimensionVector& d) {
  if (d.is_zero()) throw DomainError("gcd of the zero dimension vector is undefined");
  Integer g = 0;
  for (auto x : d.entries()) g = gcd(g, Integer(static_cast<long>(x)));
  return g;
}

std::vector<Integer> linearization_weights(const DimensionVector& d) {
  if (d.is_zero() || gcd_of(d) != 1)
    throw DomainError("linearization weights need gcd(d) = 1");
  std::vector<Integer> a(d.size(), 0);
  Integer g = 0;  // gcd of the entries processed so far; sum a_i d_i == g
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Integer di = static_cast<long>(d[i]);
    if (di == 0) continue;
    if (g == 0) {
      a[i] = 1;
      g = di;
      continue;
    }
    Integer g2, s, t;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), di.get_mpz_t());
    // general solution: s + k di/g2, t - k g/g2; pick t of least |t|, positive on ties
    const Integer step = g / g2;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), t.get_mpz_t(), step.get_mpz_t());  // t - k*step in [0, step)
    Integer t0 = t - k * step;
    Integer t1 = t0 - step;
    if (abs(t1) < abs(t0)) {
      t0 = t1;
      k += 1;
    }
    const Integer s0 = s + k * (di / g2);
    for (std::size_t j = 0; j < i; ++j) a[j] *= s0;
    a[i] = t0;
    g = g2;
  }
  return a;
}

Integer moduli_dimension(const Quiver& q, const DimensionVector& d) {
  if (d.is_zero()) throw DomainError("moduli dimension needs a nonzero dimension vector");
  return 1 - euler_form(q, d, d);
}

Integer framed_bundle_relative_dimension(const DimensionVector& d, const DimensionVector& n) {
  if (d.size() != n.size()) throw InputError("framing vector size mismatch");
  Integer dot = 0;
  for (std::size_t i = 0; i < d.size(); ++i) dot += Integer(static_cast<long>(n[i])) * static_cast<long>(d[i]);
  if (dot == 0) throw DomainError("n . d = 0: the framed bundle is empty");
  return dot - 1;
}

Quiver parse_quiver(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Quiver> q;
  auto fail = [&](const std::string& msg) {
    throw InputError("quiver line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "vertices") {
      long long k = 0;
      if (q) fail("duplicate 'vertices' line");
      if (!(ls >> k) || k < 1) fail("expected 'vertices <k>' with k >= 1");
      q.emplace(static_cast<std::size_t>(k));
    } else if (keyword == "arrow") {
      long long i = 0, j = 0, m = 0;
      if (!q) fail("'arrow' before 'vertices'");
      if (!(ls >> i >> j >> m)) fail("expected 'arrow <i> <j> <mult>'");
      if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= q->vertex_count() ||
          static_cast<std::size_t>(j) >= q->vertex_count())
        fail("vertex index out of range");
      if (m < 0) fail("negative multiplicity");
      q->set_arrows(static_cast<std::size_t>(i), static_cast<std::size_t>(j), m);
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!q) throw InputError("quiver text has no 'vertices' line");
  return *q;
}

Quiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_quiver(in);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices " << q.vertex_count() << '\n';
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      if (q.arrows(i, j) != 0) out << "arrow " << i << ' ' << j << ' ' << q.arrows(i, j) << '\n';
  return out.str();
}

DimensionVector parse_dimension_vector(std::string_view text) { return DimensionVector(parse_int_list(text)); }

Stability parse_stability(std::string_view text) { return Stability(parse_int_list(text)); }

std::string to_string(const DimensionVector& d) { return join(d.entries()); }

}  // namespace quivermod
