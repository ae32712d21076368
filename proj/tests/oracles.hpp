#pragma once
// Reference computations used only by tests. They deliberately take a
// different route from the library code they check.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "csurg/braid.hpp"
#include "csurg/matrix.hpp"

namespace oracle {

using csurg::Integer;
using csurg::Rational;

using QMat = std::vector<std::vector<Rational>>;

inline QMat identity(int n) {
  QMat m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat multiply(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Unreduced Burau matrix at a fixed rational t. Faithful on B_3.
inline QMat burau(const csurg::BraidWord& w, const Rational& t = Rational(3, 7)) {
  const int m = w.strands();
  QMat acc = identity(m);
  for (const auto& l : w.letters()) {
    QMat g = identity(m);
    const auto i = static_cast<std::size_t>(l.generator - 1);
    if (l.sign > 0) {
      g[i][i] = 1 - t;
      g[i][i + 1] = t;
      g[i + 1][i] = 1;
      g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0;
      g[i][i + 1] = 1;
      g[i + 1][i] = 1 / t;
      g[i + 1][i + 1] = 1 - 1 / t;
    }
    acc = multiply(acc, g);
  }
  return acc;
}

/// Final position of each strand, by swapping labels on a line of beads.
inline std::vector<int> strand_destinations(const csurg::BraidWord& w) {
  std::vector<int> bead(static_cast<std::size_t>(w.strands()));
  std::iota(bead.begin(), bead.end(), 0);  // bead[position] = strand
  for (const auto& l : w.letters()) std::swap(bead[l.generator - 1], bead[l.generator]);
  std::vector<int> dest(bead.size());
  for (std::size_t pos = 0; pos < bead.size(); ++pos) dest[bead[pos]] = static_cast<int>(pos);
  return dest;
}

/// Cycle lengths of a permutation, listed by smallest element.
inline std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

inline csurg::BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<csurg::Letter> letters;
  for (int i = 0; i < length; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return csurg::BraidWord(strands, std::move(letters));
}

/// Laplace expansion along the first row.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline std::vector<std::vector<Integer>> rows(const csurg::IntMatrix& a) {
  std::vector<std::vector<Integer>> out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

inline Integer laplace_det(const csurg::IntMatrix& a) { return laplace_det(rows(a)); }

/// Jacobi's rule: with all leading principal minors D_1..D_n nonzero, the
/// number of negative eigenvalues equals the sign changes in 1, D_1, ..., D_n.
/// Returns false when some leading minor vanishes.
inline bool jacobi_signature(const csurg::IntMatrix& a, long& sig) {
  const std::size_t n = a.rows();
  Integer prev = 1;
  long negatives = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Integer>> lead(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a(i, j);
    const Integer d = laplace_det(lead);
    if (d == 0) return false;
    if (sgn(d) != sgn(prev)) ++negatives;
    prev = d;
  }
  sig = static_cast<long>(n) - 2 * negatives;
  return true;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, with
/// D_k the gcd of all k x k minors. Zero factors mark the free part.
inline std::vector<Integer> determinantal_invariant_factors(const csurg::IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Integer> big_d(n + 1, Integer(0));
  big_d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    // Enumerate row and column subsets of size k with bitmasks.
    for (unsigned rmask = 0; rmask < (1u << n); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (unsigned cmask = 0; cmask < (1u << n); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        std::vector<std::vector<Integer>> sub;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(rmask >> i & 1u)) continue;
          std::vector<Integer> row;
          for (std::size_t j = 0; j < n; ++j)
            if (cmask >> j & 1u) row.push_back(a(i, j));
          sub.push_back(std::move(row));
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(laplace_det(sub))).get_mpz_t());
      }
    }
    big_d[k] = g;
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(big_d[k] == 0 ? Integer(0) : Integer(big_d[k] / big_d[k - 1]));
  return out;
}

/// a_0 - 1/(a_1 - 1/(... - 1/a_k)) evaluated front to back through the
/// matrix product of [[a_i, -1], [1, 0]].
inline Rational forward_eval(const std::vector<Integer>& a) {
  // p, q: first column of the running product; pp, qq: minus its second column.
  Integer p = 1, q = 0, pp = 0, qq = -1;
  for (const Integer& x : a) {
    const Integer np = x * p - pp;
    const Integer nq = x * q - qq;
    pp = p;
    qq = q;
    p = np;
    q = nq;
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace oracle
