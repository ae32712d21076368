#include <doctest.h>

#include <map>
#include <random>

#include "csurg/braid.hpp"
#include "csurg/errors.hpp"
#include "oracles.hpp"

using namespace csurg;

namespace {

BraidWord B(const char* text) { return parse_braid(text); }

bool has_handle_free_form(const BraidWord& w) {
  // A handle-free word uses its lowest generator with a single sign.
  int lowest = w.strands();
  for (const auto& l : w.letters()) lowest = std::min(lowest, l.generator);
  int sign = 0;
  for (const auto& l : w.letters()) {
    if (l.generator != lowest) continue;
    if (sign != 0 && sign != l.sign) return false;
    sign = l.sign;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_braid examples") {
  const BraidWord w = B("B3 s1^3 s2^-1");
  CHECK(w.length() == 4);
  CHECK(w.positive_count() == 3);
  CHECK(w.negative_count() == 1);
  CHECK(B("B2").empty());
  CHECK(B("B2").strands() == 2);
}

TEST_CASE("parse_braid errors carry positions") {
  CHECK_THROWS_AS(B("B3 s3"), ParseError);
  try {
    B("B3 s1 s3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(B("s1 s2"), ParseError);
  CHECK_THROWS_AS(B("B3 s1^0"), ParseError);
  CHECK_THROWS_AS(B("B3 t1"), ParseError);
  CHECK_THROWS_AS(B("B3 s1^"), ParseError);
  CHECK_THROWS_AS(B("B1"), ParseError);
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w = oracle::random_word(rng, 2 + i % 5, i % 30);
    CHECK(parse_braid(format_braid(w)) == w);
  }
  CHECK(format_braid(B("B3 s1 s1 s1 s2^-1")) == "B3 s1^3 s2^-1");
  CHECK(format_braid(B("B2")) == "B2");
}

TEST_CASE("permutation examples") {
  const auto p = permutation(B("B3 s1^3 s2^-1"));
  CHECK(p.component_count() == 1);
  CHECK(p.cycle_type == std::vector<int>{3});
  CHECK(permutation(B("B4")).component_count() == 4);
  const auto hopf = permutation(B("B2 s1^2"));
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.permutation == std::vector<int>{0, 1});
}

TEST_CASE("permutation agrees with a bead simulation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const BraidWord w = oracle::random_word(rng, 2 + i % 6, i % 25);
    const auto p = permutation(w);
    const auto dest = oracle::strand_destinations(w);
    CHECK(p.permutation == dest);
    CHECK(p.cycle_type == oracle::cycle_lengths(dest));
    int total = 0;
    for (int m : p.cycle_type) total += m;
    CHECK(total == w.strands());
    // Components are numbered by smallest strand.
    int next = 0;
    for (std::size_t s = 0; s < p.component_of.size(); ++s) {
      if (p.component_of[s] == next) ++next;
      CHECK(p.component_of[s] < next);
    }
  }
}

TEST_CASE("crossing stats examples") {
  const auto hopf = crossing_stats(B("B2 s1^2"));
  CHECK(hopf.component_plus == std::vector<std::int64_t>{0, 0});
  CHECK(hopf.component_minus == std::vector<std::int64_t>{0, 0});
  CHECK(hopf.inter_crossings[0][1] == 2);
  CHECK(hopf.linking[0][1] == 1);
  CHECK(hopf.linking[1][0] == 1);

  const auto t = crossing_stats(B("B3 s1^3 s2^-1"));
  CHECK(t.component_plus == std::vector<std::int64_t>{3});
  CHECK(t.component_minus == std::vector<std::int64_t>{1});
  CHECK(t.d_minus == std::vector<std::int64_t>{0});

  const auto link = crossing_stats(B("B4 s1^5 s3^4 s2 s2"));
  const auto parts = permutation(B("B4 s1^5 s3^4 s2 s2"));
  for (std::size_t i = 0; i < parts.cycle_type.size(); ++i) CHECK(link.axis_linking[i] == parts.cycle_type[i]);
}

TEST_CASE("crossing stats against an independent count") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const BraidWord w = oracle::random_word(rng, 2 + iter % 5, iter % 40);
    const auto dest = oracle::strand_destinations(w);
    // Component label per strand: smallest strand in its cycle, renumbered.
    std::vector<int> root(dest.size());
    for (std::size_t s = 0; s < dest.size(); ++s) {
      std::size_t x = s, best = s;
      do {
        x = static_cast<std::size_t>(dest[x]);
        best = std::min(best, x);
      } while (x != s);
      root[s] = static_cast<int>(best);
    }
    std::map<int, int> label;
    for (std::size_t s = 0; s < dest.size(); ++s)
      if (!label.count(root[s])) label.emplace(root[s], static_cast<int>(label.size()));
    const std::size_t ell = label.size();

    std::vector<int> bead(dest.size());
    std::iota(bead.begin(), bead.end(), 0);
    std::vector<std::vector<std::int64_t>> signed_sum(ell, std::vector<std::int64_t>(ell, 0));
    std::vector<std::int64_t> plus(ell, 0), minus(ell, 0);
    for (const auto& l : w.letters()) {
      const int a = label[root[bead[l.generator - 1]]];
      const int b = label[root[bead[l.generator]]];
      if (a == b)
        (l.sign > 0 ? plus : minus)[a]++;
      else {
        signed_sum[a][b] += l.sign;
        signed_sum[b][a] += l.sign;
      }
      std::swap(bead[l.generator - 1], bead[l.generator]);
    }

    const auto st = crossing_stats(w);
    CHECK(st.c_plus + st.c_minus == static_cast<std::int64_t>(w.length()));
    CHECK(st.component_plus == plus);
    CHECK(st.component_minus == minus);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < ell; ++i) {
      total += st.component_plus[i] + st.component_minus[i];
      for (std::size_t j = 0; j < ell; ++j) {
        CHECK(signed_sum[i][j] % 2 == 0);
        CHECK(st.linking[i][j] == signed_sum[i][j] / 2);
        CHECK(st.linking[i][j] == st.linking[j][i]);
        if (i < j) total += st.inter_crossings[i][j];
      }
      std::int64_t d = 0;
      for (std::size_t j = 0; j < ell; ++j) d += st.inter_negative[i][j];
      CHECK(st.d_minus[i] == d);
    }
    CHECK(total == static_cast<std::int64_t>(w.length()));
  }
}

TEST_CASE("doubling a pure braid doubles linking") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    BraidWord w = oracle::random_word(rng, 4, 12);
    // Make it pure by appending the inverse permutation as positive letters
    // chosen by bubble sort.
    auto dest = oracle::strand_destinations(w);
    std::vector<int> bead(4);
    for (int s = 0; s < 4; ++s) bead[dest[s]] = s;
    std::vector<Letter> extra;
    for (int pass = 0; pass < 4; ++pass)
      for (int i = 0; i + 1 < 4; ++i)
        if (bead[i] > bead[i + 1]) {
          std::swap(bead[i], bead[i + 1]);
          extra.push_back({i + 1, 1});
        }
    const BraidWord pure = compose(w, BraidWord(4, extra));
    REQUIRE(permutation(pure).component_count() == 4);
    const auto once = crossing_stats(pure);
    const auto twice = crossing_stats(power(pure, 2));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(twice.inter_signed[i][j] == 2 * once.inter_signed[i][j]);
  }
}

TEST_CASE("garside") {
  CHECK(garside(3) == B("B3 s1 s2 s1"));
  CHECK(garside(2) == B("B2 s1"));
  CHECK(garside(4).length() == 6);
  CHECK(garside(4).negative_count() == 0);
  CHECK_THROWS_AS(garside(1), DomainError);
}

TEST_CASE("compose, power, inverse") {
  CHECK(power(B("B2 s1"), 2) == B("B2 s1 s1"));
  CHECK(power(B("B3 s1 s2^-1"), -1) == B("B3 s2 s1^-1"));
  CHECK(power(B("B3 s1"), 0).empty());
  CHECK_THROWS_AS(compose(B("B2 s1"), B("B3 s1")), DomainError);
  const BraidWord w = B("B4 s1 s3^-2 s2");
  CHECK(free_reduce(compose(w, inverse(w))).empty());
  const BraidWord d = delta_squared_times(B("B3 s1^7 s2^-1"), 2);
  CHECK(d.length() == 8 + 2 * 2 * 3);
}

TEST_CASE("delta squared adds m(m-1) positive crossings") {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 6; ++m) {
    const BraidWord w = oracle::random_word(rng, m, 15);
    const auto before = crossing_stats(w);
    const auto after = crossing_stats(compose(power(garside(m), 2), w));
    CHECK(after.c_plus == before.c_plus + m * (m - 1));
    CHECK(after.c_minus == before.c_minus);
  }
}

TEST_CASE("handle reduction examples") {
  CHECK(is_trivial(compose(B("B3 s1 s2 s1"), inverse(B("B3 s2 s1 s2")))));
  for (int m = 2; m <= 5; ++m) {
    const BraidWord d2 = power(garside(m), 2);
    for (int g = 1; g < m; ++g) {
      const BraidWord s(m, {{g, 1}});
      CHECK(is_trivial(compose(compose(compose(d2, s), inverse(d2)), inverse(s))));
    }
  }
  CHECK_FALSE(is_trivial(B("B3 s1^3 s2^-1")));
  CHECK(is_sigma_positive(B("B3 s2^-1 s1 s2")));
  CHECK(is_sigma_negative(B("B3 s1^-1 s2^5")));
}

TEST_CASE("handle reduction preserves the braid") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 250; ++iter) {
    const int m = 3 + iter % 2;
    const BraidWord w = oracle::random_word(rng, m, 4 + iter % 14);
    const BraidWord r = handle_reduce(w);
    CHECK(oracle::burau(r) == oracle::burau(w));
    CHECK(permutation(r).permutation == permutation(w).permutation);
    CHECK(r.exponent_sum() == w.exponent_sum());
    CHECK(has_handle_free_form(r));
  }
}

TEST_CASE("word problem agrees with the faithful Burau image on B3") {
  std::mt19937_64 rng(31);
  const auto id = oracle::identity(3);
  int trivial_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    // Half the samples are w * (w with a relation inserted)^{-1}.
    BraidWord w = oracle::random_word(rng, 3, 3 + iter % 9);
    if (iter % 2 == 0) {
      std::vector<Letter> l = w.letters();
      const std::size_t at = l.size() / 2;
      const std::vector<Letter> rel{{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}};
      l.insert(l.begin() + static_cast<long>(at), rel.begin(), rel.end());
      w = compose(w, inverse(BraidWord(3, l)));
    }
    const bool trivial = is_trivial(w);
    CHECK(trivial == (oracle::burau(w) == id));
    trivial_seen += trivial;
  }
  CHECK(trivial_seen >= 200);
}

TEST_CASE("Dehornoy order is total on nontrivial braids") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 200; ++iter) {
    const BraidWord w = oracle::random_word(rng, 3 + iter % 3, 2 + iter % 10);
    if (is_trivial(w)) continue;
    CHECK(is_sigma_positive(w) != is_sigma_positive(inverse(w)));
    CHECK(is_sigma_positive(w) == is_sigma_negative(inverse(w)));
  }
}

TEST_CASE("dehornoy floor probe") {
  CHECK(dehornoy_floor_at_least(power(garside(3), 6), 3));
  CHECK_FALSE(dehornoy_floor_at_least(B("B2 s1"), 1));
  CHECK(dehornoy_floor_at_least(B("B3 s1^-4"), 0));
  CHECK(dehornoy_floor_at_least(power(garside(3), 8), 3));
  CHECK_FALSE(dehornoy_floor_at_least(power(garside(3), 4), 3));
  CHECK_THROWS_AS(dehornoy_floor_at_least(B("B2 s1"), -1), DomainError);
}

TEST_CASE("budget is enforced") {
  HandleReductionOptions tight;
  tight.step_cap = 1;
  const BraidWord d2 = power(garside(4), 2);
  const BraidWord hard = compose(compose(compose(d2, B("B4 s1")), inverse(d2)), B("B4 s1^-1"));
  CHECK_THROWS_AS(handle_reduce(hard, tight), BudgetExceeded);
  CHECK(is_trivial(hard));
  CHECK(handle_reduction_budget(3, {}) == 128);
  CHECK(handle_reduction_budget(100, {}) == HandleReductionOptions{}.step_cap);
}

TEST_CASE("hypothesis checks") {
  // c+ = 7, c- = 1, m = 3.
  const auto h = check_hypothesis(B("B3 s1^7 s2^-1"), false);
  CHECK(h.is_knot);
  CHECK(h.cond_tb);
  CHECK(h.tb_margin == 2);
  CHECK(h.cond_parity);
  CHECK(h.hyperbolicity == Hyperbolicity::unknown);

  const auto torus = check_hypothesis(B("B3 s1^3 s2^-1"), true);
  CHECK_FALSE(torus.cond_tb);
  CHECK(torus.tb_margin == -2);
  CHECK(torus.hyperbolicity == Hyperbolicity::asserted);

  const auto s5 = check_hypothesis(B("B2 s1^5"), false);
  CHECK(s5.is_knot);
  CHECK(s5.tb_margin == 3);
  CHECK(s5.cond_parity);

  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const BraidWord w = oracle::random_word(rng, 3, 9);
    const auto r = check_hypothesis(w, false);
    if (r.is_knot) CHECK(r.per_component_cond.at(0) == r.cond_tb);
  }
}

TEST_CASE("square knot recipe") {
  CHECK(square_knot_recipe(B("B3 s1 s2")));
  CHECK_FALSE(square_knot_recipe(B("B4 s1 s2 s3")));
  CHECK_FALSE(square_knot_recipe(B("B3 s1")));
}

TEST_CASE("example braid") {
  CHECK(example_braid(1) == B("B3 s1^3 s2^-1"));
  CHECK(example_braid(0) == B("B3 s1 s2^-1"));
  CHECK(example_braid(2) == B("B3 s1^5 s2^-1"));
  CHECK_THROWS_AS(example_braid(-1), DomainError);
}

TEST_CASE("example braid conjugation identity") {
  const BraidWord gamma = B("B3 s2 s1^2 s2");
  for (int k = 1; k <= 2; ++k) {
    const BraidWord lhs = delta_squared_times(example_braid(k), 1);
    std::vector<Letter> mid(static_cast<std::size_t>(2 * k + 5), Letter{1, 1});
    mid.push_back({2, 1});
    const BraidWord rhs = compose(compose(gamma, BraidWord(3, mid)), inverse(gamma));
    CHECK(is_trivial(compose(lhs, inverse(rhs))));
  }
}
