#include "csurg/limits.hpp"

#include <algorithm>
#include <numeric>

#include "csurg/errors.hpp"
#include "csurg/legendrian.hpp"
#include "csurg/surgery.hpp"

namespace csurg {

std::int64_t SignTuple::menu_size(std::size_t i) const {
  const auto a = coeffs.at(i);
  if (!a) throw DomainError("coefficient stream ends before index " + std::to_string(i));
  if (*a > -2) throw DomainError("coefficient " + a->get_str() + " at index " + std::to_string(i) + " is not <= -2");
  return to_long(Integer(-(*a + 1)));
}

std::int64_t SignTuple::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i] == kMenuMax ? menu_size(i) : prefix[i];
  switch (tail) {
    case TailRule::ones: return 1;
    case TailRule::max: return menu_size(i);
    case TailRule::periodic: {
      if (pattern.empty()) throw DomainError("periodic tail needs a nonempty pattern");
      const std::int64_t v = pattern[(i - prefix.size()) % pattern.size()];
      return v == kMenuMax ? menu_size(i) : v;
    }
  }
  return 1;
}

std::vector<std::int64_t> SignTuple::truncate(std::size_t n) const {
  std::vector<std::int64_t> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(at(i));
  return out;
}

std::vector<Block> block_decomposition(const SignTuple& k, std::size_t n) {
  std::vector<Block> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::int64_t menu = k.menu_size(i);
    const std::int64_t ki = k.at(i);
    if (ki < 1 || ki > menu)
      throw DomainError("k_" + std::to_string(i) + " = " + std::to_string(ki) + " outside 1.." + std::to_string(menu));
    out.push_back({menu - 1, ki - 1});
  }
  return out;
}

std::vector<std::vector<int>> shuffle_normal_form(const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (const Block& b : blocks) {
    if (b.positives < 0 || b.positives > b.length) throw DomainError("block has more positive slices than its length");
    std::vector<int> signs(static_cast<std::size_t>(b.length), -1);
    std::fill_n(signs.begin(), b.positives, 1);
    out.push_back(std::move(signs));
  }
  return out;
}

Block block_class(const std::vector<int>& signs) {
  Block b;
  b.length = static_cast<std::int64_t>(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw DomainError("basic slice signs are +1 or -1");
    if (s == 1) ++b.positives;
  }
  return b;
}

std::vector<int> stabilization_to_slices(const std::vector<int>& stab_signs) {
  for (int s : stab_signs)
    if (s != 1 && s != -1) throw DomainError("stabilization signs are +1 or -1");
  return stab_signs;
}

IntMatrix gluing_matrix(const Integer& a) {
  IntMatrix m(2, 2);
  m(0, 1) = -1;
  m(1, 0) = 1;
  m(1, 1) = -a;
  return m;
}

Rational end_slope(const CoeffStream& coeffs, std::size_t n) {
  const auto a = coeffs.take(n + 1);
  // Running product P = phi_0 ... phi_i; only its second column is needed.
  Integer top = -1;          // P(0,1)
  Integer bottom = -a[0];    // P(1,1)
  Integer top_prev = 0;      // P(0,0)
  Integer bottom_prev = 1;   // P(1,0)
  for (std::size_t i = 1; i <= n; ++i) {
    // [c0 c1] * [[0,-1],[1,-a]] = [c1, -c0 - a c1]
    const Integer nt = -top_prev - a[i] * top;
    const Integer nb = -bottom_prev - a[i] * bottom;
    top_prev = top;
    bottom_prev = bottom;
    top = nt;
    bottom = nb;
  }
  return make_rational(bottom, top);
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::plus: return "+";
    case Sign::minus: return "-";
    case Sign::pm: return "+-";
  }
  return "?";
}

Sign sign_of(const SignTuple& k) {
  if (k.coeffs.is_finite()) throw DomainError("the sign of a tuple needs an infinite coefficient stream");
  if (k.tail == TailRule::ones) return Sign::minus;

  if (k.coeffs.is_generated()) {
    if (k.tail == TailRule::max) return Sign::plus;
    const bool all_ones = std::all_of(k.pattern.begin(), k.pattern.end(), [](std::int64_t v) { return v == 1; });
    if (all_ones) return Sign::minus;
    const bool all_max = std::all_of(k.pattern.begin(), k.pattern.end(), [](std::int64_t v) { return v == kMenuMax; });
    if (all_max) return Sign::plus;
    throw UndecidableError("sign of a mixed periodic tail on a generated coefficient stream");
  }

  // Eventually periodic coefficients: one joint period past both prefixes
  // decides everything.
  const std::size_t start = std::max(k.prefix.size(), k.coeffs.prefix().size());
  const std::size_t period =
      k.tail == TailRule::periodic ? std::lcm(k.pattern.size(), k.coeffs.cycle().size()) : k.coeffs.cycle().size();
  bool ones = true;
  bool max = true;
  for (std::size_t i = start; i < start + period; ++i) {
    const std::int64_t v = k.at(i);
    if (v != 1) ones = false;
    if (v != k.menu_size(i)) max = false;
  }
  if (ones) return Sign::minus;
  if (max) return Sign::plus;
  return Sign::pm;
}

bool properly_isotopic(const SignTuple& k, const SignTuple& k2) {
  if (!k.coeffs.same_as(k2.coeffs)) return false;
  return sign_of(k) == sign_of(k2);
}

bool truncation_consistency(const BraidWord& beta, const SignTuple& k, std::size_t n) {
  std::vector<Block> blocks;
  try {
    blocks = block_decomposition(k, n);
  } catch (const DomainError&) {
    return false;
  }
  const std::vector<Integer> a = k.coeffs.take(n + 1);
  const Rational convergent = eval_cfrac(a);
  if (neg_cfrac(convergent).coeffs != a) return false;

  const SlopeVector v{{Rational(-1 / convergent)}};
  const WeinsteinEnumeration e = enumerate_weinstein(beta, v);
  if (e.menu_sizes().size() != n + 1) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (e.menu_sizes()[i] != block_class_count(blocks[i].length)) return false;
  if (e.count() != phi(a)) return false;

  const std::vector<std::int64_t> kn = k.truncate(n);
  const WeinsteinDiagram w = e.at(e.index_of_tuple(kn));
  if (!validate_weinstein(w)) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (w.rotation_tuple[i] != to_long(a[i]) + 2 * kn[i]) return false;
  return true;
}

}  // namespace csurg
