#include "quivermod/arith.hpp"

#include <cctype>
#include <limits>

namespace quivermod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text)) throw InputError("not an integer: '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw InputError("sign in denominator: '" + std::string(text) + "'");
  const Integer num = parse_integer(num_text);
  const Integer den = parse_integer(den_text);
  if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    auto field = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (field.empty()) throw InputError("empty field in list '" + std::string(text) + "'");
    out.emplace_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& f : split_list(text)) out.push_back(parse_rational(f));
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const auto& f : split_list(text)) {
    const Integer z = parse_integer(f);
    if (!z.fits_slong_p()) throw InputError("integer out of range: " + f);
    out.push_back(z.get_si());
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= top - i;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  return num / fact;  // exact: product of k consecutive integers
}

}  // namespace quivermod
