#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// Terminating negative (Hirzebruch-Jung) continued fraction
///   a_0 - 1/(a_1 - 1/(... - 1/a_k)),  every a_i <= -2.
struct NegContFrac {
  std::vector<Integer> coeffs;
  Rational value;
};

/// Ceiling algorithm: a_i = -ceil(-r_i), r_{i+1} = 1/(a_i - r_i), stopping at
/// an integer. Requires r < -1.
NegContFrac neg_cfrac(const Rational& r);

/// Back substitution. Throws NumericError on division by zero and
/// DomainError on an empty list.
Rational eval_cfrac(const std::vector<Integer>& coeffs);

/// |a_0 + 1| |a_1 + 1| ... |a_k + 1|.
Integer phi(const NegContFrac& f);
Integer phi(const std::vector<Integer>& coeffs);

/// Per-component surgery slopes p_i/q_i (GMP keeps them canonical: lowest
/// terms, q_i > 0).
struct SlopeVector {
  std::vector<Rational> slopes;
};

/// Parses `p/q,p/q,...`; each entry also accepts the `n+p/q` form.
SlopeVector parse_slopes(std::string_view text);

/// Product of phi(neg_cfrac(-q_i/p_i)); every slope must lie in (0,1).
Integer phi_vector(const SlopeVector& v);

/// A coefficient stream a_0, a_1, ... . Either eventually periodic
/// (`prefix` then `cycle` repeated forever; an empty cycle makes the stream
/// finite) or produced by a caller-supplied generator. Only eventually
/// periodic streams support equality tests.
class CoeffStream {
 public:
  using Generator = std::function<Integer(std::size_t)>;

  static CoeffStream finite(std::vector<Integer> coeffs);
  static CoeffStream eventually_periodic(std::vector<Integer> prefix, std::vector<Integer> cycle);
  static CoeffStream generated(Generator gen);

  /// Coefficient i, or nullopt past the end of a finite stream.
  std::optional<Integer> at(std::size_t i) const;
  /// First `count` coefficients; throws DomainError if the stream is shorter.
  std::vector<Integer> take(std::size_t count) const;

  bool is_finite() const { return !gen_ && cycle_.empty(); }
  bool is_eventually_periodic() const { return !gen_ && !cycle_.empty(); }
  bool is_generated() const { return static_cast<bool>(gen_); }
  const std::vector<Integer>& prefix() const { return prefix_; }
  const std::vector<Integer>& cycle() const { return cycle_; }

  /// Exact comparison for finite / eventually periodic streams; throws
  /// UndecidableError when either side is generated.
  bool same_as(const CoeffStream& other) const;

 private:
  std::vector<Integer> prefix_;
  std::vector<Integer> cycle_;
  Generator gen_;
};

/// Values of [a_0], [a_0,a_1], ..., [a_0,...,a_n].
std::vector<Rational> convergents(const CoeffStream& stream, std::size_t n);

}  // namespace csurg
