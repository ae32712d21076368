#include "csurg/cfrac.hpp"

#include <numeric>

#include "csurg/errors.hpp"

namespace csurg {

NegContFrac neg_cfrac(const Rational& r) {
  if (r >= -1)
    throw DomainError("negative continued fraction needs r < -1, got " + format_rational(r));
  NegContFrac out;
  out.value = r;
  Rational x = r;
  // Each step replaces x = -m/n by -n/k with k < n, so the loop runs at most
  // den(r) times.
  const Integer max_steps = r.get_den();
  for (Integer step = 0;; ++step) {
    if (step > max_steps) throw NumericError("continued fraction expansion failed to terminate");
    const Integer a = -ceil(Rational(-x));
    out.coeffs.push_back(a);
    if (is_integer(x)) break;
    x = 1 / (Rational(a) - x);
  }
  return out;
}

Rational eval_cfrac(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty coefficient list");
  Rational x(coeffs.back());
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    if (x == 0) throw NumericError("division by zero evaluating " + format_integer_list(coeffs));
    x = Rational(*it) - 1 / x;
  }
  return x;
}

Integer phi(const std::vector<Integer>& coeffs) {
  Integer out = 1;
  for (const Integer& a : coeffs) out *= abs(a + 1);
  return out;
}

Integer phi(const NegContFrac& f) { return phi(f.coeffs); }

SlopeVector parse_slopes(std::string_view text) {
  SlopeVector v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.slopes.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

Integer phi_vector(const SlopeVector& v) {
  Integer out = 1;
  for (const Rational& s : v.slopes) {
    if (s <= 0 || s >= 1) throw DomainError("phi_vector needs every slope in (0,1), got " + format_rational(s));
    out *= phi(neg_cfrac(Rational(-1 / s)));
  }
  return out;
}

CoeffStream CoeffStream::finite(std::vector<Integer> coeffs) {
  CoeffStream s;
  s.prefix_ = std::move(coeffs);
  return s;
}

CoeffStream CoeffStream::eventually_periodic(std::vector<Integer> prefix, std::vector<Integer> cycle) {
  if (cycle.empty()) throw DomainError("eventually periodic stream needs a nonempty cycle");
  CoeffStream s;
  s.prefix_ = std::move(prefix);
  s.cycle_ = std::move(cycle);
  return s;
}

CoeffStream CoeffStream::generated(Generator gen) {
  if (!gen) throw DomainError("empty coefficient generator");
  CoeffStream s;
  s.gen_ = std::move(gen);
  return s;
}

std::optional<Integer> CoeffStream::at(std::size_t i) const {
  if (gen_) return gen_(i);
  if (i < prefix_.size()) return prefix_[i];
  if (cycle_.empty()) return std::nullopt;
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

std::vector<Integer> CoeffStream::take(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto a = at(i);
    if (!a) throw DomainError("coefficient stream has only " + std::to_string(i) + " terms, need " + std::to_string(count));
    out.push_back(*a);
  }
  return out;
}

bool CoeffStream::same_as(const CoeffStream& other) const {
  if (is_generated() || other.is_generated())
    throw UndecidableError("generated coefficient streams cannot be compared");
  if (is_finite() || other.is_finite())
    return is_finite() && other.is_finite() && prefix_ == other.prefix_;
  const std::size_t horizon = std::max(prefix_.size(), other.prefix_.size()) + std::lcm(cycle_.size(), other.cycle_.size());
  for (std::size_t i = 0; i < horizon; ++i)
    if (*at(i) != *other.at(i)) return false;
  return true;
}

std::vector<Rational> convergents(const CoeffStream& stream, std::size_t n) {
  const auto coeffs = stream.take(n + 1);
  std::vector<Rational> out;
  out.reserve(n + 1);
  // P_i = a_i P_{i-1} - P_{i-2}, Q_i = a_i Q_{i-1} - Q_{i-2}.
  Integer p_prev2 = 0, p_prev = 1, q_prev2 = -1, q_prev = 0;
  for (const Integer& a : coeffs) {
    if (a > -2) throw DomainError("convergents need coefficients <= -2, got " + a.get_str());
    const Integer p = a * p_prev - p_prev2;
    const Integer q = a * q_prev - q_prev2;
    out.push_back(make_rational(p, q));
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

}  // namespace csurg
