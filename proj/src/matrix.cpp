#include "csurg/matrix.hpp"

#include <algorithm>
#include <utility>

#include "csurg/errors.hpp"

namespace csurg {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DomainError(std::string(what) + " needs a square matrix");
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      swap_rows(a, k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::elementary_divisors() const {
  std::vector<Integer> out;
  for (const Integer& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  require_square(m, "smith_normal_form");
  IntMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    while (true) {
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == n) break;  // trailing block is zero
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < n; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) a(t, j) += a(bad, j);
    }
  }
  SmithForm out;
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal.push_back(abs(a(i, i)));
    if (a(i, i) == 0) ++out.free_rank;
  }
  std::stable_partition(out.diagonal.begin(), out.diagonal.end(), [](const Integer& d) { return d != 0; });
  return out;
}

long signature(const IntMatrix& m) {
  require_square(m, "signature");
  if (!m.is_symmetric()) throw DomainError("signature needs a symmetric matrix");
  const std::size_t n = m.rows();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);

  auto swap_both = [&](std::size_t p, std::size_t q) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(q, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
  };

  long sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // No nonzero diagonal entry left: find a(i, j) != 0 and add row/col j
      // to row/col i, making a(i, i) = 2 a(i, j) + a(j, j) = 2 a(i, j).
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    swap_both(k, piv);
    const Rational pivot = a(k, k);
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return sig;
}

namespace {

// Gauss-Jordan over Q on [m | rhs]; returns the transformed right-hand block.
RationalMatrix gauss_jordan(const IntMatrix& m, RationalMatrix rhs) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw NumericError("singular linking matrix");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(k, c), rhs(piv, c));
    }
    const Rational inv = 1 / a(k, k);
    for (std::size_t c = 0; c < n; ++c) a(k, c) *= inv;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(k, c) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(i, c) -= f * rhs(k, c);
    }
  }
  return rhs;
}

}  // namespace

std::vector<Rational> solve(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side has the wrong length");
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const RationalMatrix x = gauss_jordan(m, std::move(rhs));
  std::vector<Rational> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
  return out;
}

RationalMatrix inverse(const IntMatrix& m) {
  RationalMatrix id(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) id(i, i) = 1;
  return gauss_jordan(m, std::move(id));
}

Rational quadratic_form(const RationalMatrix& a, const std::vector<Integer>& x) {
  if (a.rows() != x.size() || a.cols() != x.size()) throw DomainError("quadratic form dimension mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) row += a(i, j) * x[j];
    out += row * x[i];
  }
  return out;
}

}  // namespace csurg
