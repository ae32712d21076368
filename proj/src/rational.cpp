#include "csurg/rational.hpp"

#include <cctype>
#include <climits>

#include "csurg/errors.hpp"

namespace csurg {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw NumericError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("unexpected character '" + std::string(1, s[j]) + "' in '" +
                           std::string(whole) + "'",
                       j);
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty rational");
  Integer whole_part = 0;
  std::string_view frac = t;
  // n+p/q form: a '+' after the first character separates the integer part.
  if (auto plus = t.find('+', 1); plus != std::string_view::npos) {
    whole_part = parse_integer(t.substr(0, plus), text);
    frac = t.substr(plus + 1);
  }
  Rational r;
  if (auto slash = frac.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(frac.substr(0, slash), text);
    Integer q = parse_integer(frac.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = make_rational(p, q);
  } else {
    r = Rational(parse_integer(frac, text));
  }
  return r + whole_part;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("unterminated list '" + std::string(text) + "'");
    t = trim(t.substr(1, t.size() - 2));
  }
  std::vector<Integer> out;
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    out.push_back(parse_integer(t.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_integer_list(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].get_str();
  }
  return out + "]";
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw NumericError("integer " + z.get_str() + " does not fit in a machine word");
  return z.get_si();
}

}  // namespace csurg
