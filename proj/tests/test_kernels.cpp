#include <doctest.h>

#include <random>

#include "csurg/errors.hpp"
#include "csurg/kernels.hpp"

using namespace csurg;

namespace {

const BraidWord kKnot = parse_braid("B3 s1^7 s2^-1");

bool same(const WeinsteinDiagram& a, const WeinsteinDiagram& b) {
  return a.legendrian == b.legendrian && a.rotation_tuple == b.rotation_tuple &&
         linking_matrix(a.base) == linking_matrix(b.base);
}

}  // namespace

TEST_CASE("thread count is positive") { CHECK(max_threads() >= 1); }

TEST_CASE("serial and parallel batches agree") {
  const auto e = enumerate_weinstein(kKnot, SlopeVector{{Rational(7, 61)}});
  const auto n = e.count().get_ui();
  REQUIRE(n > 20);
  const auto ts = theta_batch(e, 0, n, Exec::serial);
  const auto tp = theta_batch(e, 0, n, Exec::parallel);
  CHECK(ts == tp);
  const auto rs = rotation_tuple_batch(e, 3, n - 3, Exec::serial);
  const auto rp = rotation_tuple_batch(e, 3, n - 3, Exec::parallel);
  CHECK(rs == rp);
  const auto ws = weinstein_batch(e, 0, n, Exec::serial);
  const auto wp = weinstein_batch(e, 0, n, Exec::parallel);
  REQUIRE(ws.size() == wp.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    CHECK(same(ws[i], wp[i]));
    CHECK(same(ws[i], e.at(static_cast<std::uint64_t>(i))));
    CHECK(ts[i] == theta(ws[i]));
  }
  for (std::size_t i = 0; i + 3 < n; ++i) CHECK(rs[i] == ws[i + 3].rotation_tuple);
}

TEST_CASE("expanded determinants agree across execution modes") {
  std::mt19937_64 rng(137);
  std::uniform_int_distribution<long> d(1, 50);
  std::vector<SlopeVector> vs;
  for (int i = 0; i < 300; ++i) {
    Rational r(d(rng), d(rng));
    r.canonicalize();
    vs.push_back(SlopeVector{{r}});
  }
  const auto s = expanded_determinants(kKnot, vs, Exec::serial);
  const auto p = expanded_determinants(kKnot, vs, Exec::parallel);
  CHECK(s == p);
  for (std::size_t i = 0; i < vs.size(); ++i) CHECK(abs(s[i]) == abs(Integer(vs[i].slopes[0].get_num())));
}

TEST_CASE("batch errors propagate") {
  const auto e = enumerate_weinstein(kKnot, SlopeVector{{Rational(1, 5)}});
  CHECK_THROWS_AS(theta_batch(e, 2, 5, Exec::parallel), DomainError);
  CHECK_THROWS_AS(theta_batch(e, 2, 5, Exec::serial), DomainError);
  CHECK(theta_batch(e, 4, 0, Exec::parallel).empty());
  std::vector<SlopeVector> bad{SlopeVector{{Rational(1, 2)}}, SlopeVector{{Rational(-1, 2)}}};
  CHECK_THROWS_AS(expanded_determinants(kKnot, bad, Exec::parallel), DomainError);
}
