#include "csurg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "csurg/errors.hpp"

namespace csurg {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw DomainError("a braid needs at least 2 strands, got " + std::to_string(strands_));
  for (const Letter& l : letters_) {
    if (l.generator < 1 || l.generator > strands_ - 1)
      throw DomainError("generator s" + std::to_string(l.generator) + " out of range for B" +
                        std::to_string(strands_));
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

std::int64_t BraidWord::positive_count() const {
  return std::count_if(letters_.begin(), letters_.end(), [](const Letter& l) { return l.sign > 0; });
}

std::int64_t BraidWord::negative_count() const {
  return static_cast<std::int64_t>(letters_.size()) - positive_count();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_ws(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back({s.substr(i, j - i), i});
    i = j;
  }
  return out;
}

// Parses a (possibly signed) decimal integer occupying all of `s`.
bool parse_int(std::string_view s, long long& out, bool allow_sign) {
  if (s.empty()) return false;
  if (!allow_sign && (s[0] == '-' || s[0] == '+')) return false;
  std::string_view digits = s;
  if (digits[0] == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("missing strand header B<m>", 0);
  const Token& head = tokens.front();
  long long strands = 0;
  if (head.text.size() < 2 || head.text[0] != 'B' || !parse_int(head.text.substr(1), strands, false))
    throw ParseError("missing strand header B<m>, found '" + std::string(head.text) + "'", head.offset);
  if (strands < 2 || strands > std::numeric_limits<int>::max())
    throw ParseError("strand count must be at least 2", head.offset);

  std::vector<Letter> letters;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    const Token& tok = tokens[t];
    if (tok.text[0] != 's')
      throw ParseError("malformed token '" + std::string(tok.text) + "'", tok.offset);
    std::string_view body = tok.text.substr(1);
    std::string_view gen_text = body;
    std::string_view exp_text;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      gen_text = body.substr(0, caret);
      exp_text = body.substr(caret + 1);
      if (exp_text.empty())
        throw ParseError("missing exponent in '" + std::string(tok.text) + "'", tok.offset + 1 + caret);
    }
    long long gen = 0;
    if (!parse_int(gen_text, gen, false))
      throw ParseError("malformed generator in '" + std::string(tok.text) + "'", tok.offset + 1);
    if (gen < 1 || gen > strands - 1)
      throw ParseError("generator index " + std::to_string(gen) + " out of range for B" +
                           std::to_string(strands) + " (valid 1.." + std::to_string(strands - 1) + ")",
                       tok.offset + 1);
    long long exponent = 1;
    if (!exp_text.empty()) {
      if (!parse_int(exp_text, exponent, true))
        throw ParseError("malformed exponent in '" + std::string(tok.text) + "'",
                         tok.offset + tok.text.find('^') + 1);
      if (exponent == 0)
        throw ParseError("zero exponent in '" + std::string(tok.text) + "'", tok.offset + tok.text.find('^') + 1);
    }
    const int sign = exponent > 0 ? 1 : -1;
    for (long long e = 0; e < std::llabs(exponent); ++e) letters.push_back({static_cast<int>(gen), sign});
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands());
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long e = static_cast<long long>(j - i) * ls[i].sign;
    out += " s" + std::to_string(ls[i].generator);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands())
    throw DomainError("strand-count mismatch: B" + std::to_string(lhs.strands()) + " vs B" +
                      std::to_string(rhs.strands()));
  std::vector<Letter> letters = lhs.letters();
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return BraidWord(lhs.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, std::int64_t k) {
  const BraidWord base = k < 0 ? inverse(w) : w;
  const std::uint64_t reps = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  std::vector<Letter> letters;
  letters.reserve(base.length() * reps);
  for (std::uint64_t r = 0; r < reps; ++r)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord garside(int strands) {
  if (strands < 2) throw DomainError("garside element needs m >= 2");
  std::vector<Letter> letters;
  for (int top = strands - 1; top >= 1; --top)
    for (int g = 1; g <= top; ++g) letters.push_back({g, 1});
  return BraidWord(strands, std::move(letters));
}

BraidWord delta_squared_times(const BraidWord& beta, std::int64_t l) {
  return compose(power(garside(beta.strands()), 2 * l), beta);
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord example_braid(std::int64_t k) {
  if (k < 0) throw DomainError("example braid needs k >= 0");
  std::vector<Letter> letters(static_cast<std::size_t>(2 * k + 1), Letter{1, 1});
  letters.push_back({2, -1});
  return BraidWord(3, std::move(letters));
}

ComponentPartition permutation(const BraidWord& w) {
  const int m = w.strands();
  std::vector<int> at(m);  // position -> strand
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& l : w.letters()) std::swap(at[l.generator - 1], at[l.generator]);

  ComponentPartition parts;
  parts.permutation.assign(m, 0);
  for (int pos = 0; pos < m; ++pos) parts.permutation[at[pos]] = pos;

  parts.component_of.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (parts.component_of[s] >= 0) continue;
    const int id = parts.component_count();
    int len = 0;
    for (int t = s; parts.component_of[t] < 0; t = parts.permutation[t]) {
      parts.component_of[t] = id;
      ++len;
    }
    parts.cycle_type.push_back(len);
  }
  return parts;
}

CrossingStats crossing_stats(const BraidWord& w) { return crossing_stats(w, permutation(w)); }

CrossingStats crossing_stats(const BraidWord& w, const ComponentPartition& parts) {
  const int m = w.strands();
  const std::size_t l = parts.cycle_type.size();
  CrossingStats st;
  st.component_plus.assign(l, 0);
  st.component_minus.assign(l, 0);
  const std::vector<std::vector<std::int64_t>> zero(l, std::vector<std::int64_t>(l, 0));
  st.inter_crossings = st.inter_signed = st.inter_negative = zero;

  std::vector<int> at(m);
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& letter : w.letters()) {
    const int g = letter.generator - 1;
    const int ca = parts.component_of[at[g]];
    const int cb = parts.component_of[at[g + 1]];
    (letter.sign > 0 ? st.c_plus : st.c_minus) += 1;
    if (ca == cb) {
      (letter.sign > 0 ? st.component_plus : st.component_minus)[ca] += 1;
    } else {
      st.inter_crossings[ca][cb] += 1;
      st.inter_crossings[cb][ca] += 1;
      st.inter_signed[ca][cb] += letter.sign;
      st.inter_signed[cb][ca] += letter.sign;
      if (letter.sign < 0) {
        st.inter_negative[ca][cb] += 1;
        st.inter_negative[cb][ca] += 1;
      }
    }
    std::swap(at[g], at[g + 1]);
  }

  st.d_minus.assign(l, 0);
  st.linking = zero;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      st.d_minus[i] += st.inter_negative[i][j];
      if (i == j) continue;
      // Kept exact until the integrality assertion; an odd signed sum means
      // crossings were attributed to the wrong pair.
      const Rational lk = make_rational(st.inter_signed[i][j], 2);
      if (!is_integer(lk))
        throw NumericError("non-integral linking number " + format_rational(lk) + " between components " +
                           std::to_string(i + 1) + " and " + std::to_string(j + 1));
      st.linking[i][j] = to_long(lk.get_num());
    }
  }
  st.axis_linking.assign(parts.cycle_type.begin(), parts.cycle_type.end());
  return st;
}

bool HypothesisReport::all_components_pass() const {
  return std::all_of(per_component_cond.begin(), per_component_cond.end(), [](bool b) { return b; });
}

HypothesisReport check_hypothesis(const BraidWord& w, bool hyperbolic_asserted) {
  const auto parts = permutation(w);
  const auto st = crossing_stats(w, parts);
  const std::int64_t m = w.strands();
  HypothesisReport rep;
  rep.is_knot = parts.is_knot();
  rep.tb_margin = st.c_plus - 2 * st.c_minus - m;
  rep.cond_tb = rep.tb_margin >= 1;
  rep.cond_parity = ((st.c_plus + st.c_minus) - (m + 1)) % 2 == 0;
  for (int i = 0; i < parts.component_count(); ++i) {
    const std::int64_t margin =
        st.component_plus[i] - 2 * st.component_minus[i] - st.d_minus[i] - parts.cycle_type[i];
    rep.per_component_margin.push_back(margin);
    rep.per_component_cond.push_back(margin >= 1);
  }
  rep.hyperbolicity = hyperbolic_asserted ? Hyperbolicity::asserted : Hyperbolicity::unknown;
  return rep;
}

bool square_knot_recipe(const BraidWord& w) {
  const int m = w.strands();
  if (m % 2 == 0) return false;
  const auto parts = permutation(w);
  // Walk the cycle of strand 0 under the squared permutation.
  int len = 0;
  int s = 0;
  do {
    s = parts.permutation[parts.permutation[s]];
    ++len;
  } while (s != 0);
  return len == m;
}

}  // namespace csurg
