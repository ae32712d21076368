#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace csurg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const Integer& p, const Integer& q);

/// Floor and ceiling of an exact rational.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Parses `p/q`, `p`, or `n+p/q` (optional leading sign on p and n).
Rational parse_rational(std::string_view text);

/// Canonical `p/q` string, always with an explicit denominator.
std::string format_rational(const Rational& r);

/// Parses a bracketed comma-separated integer list such as `[-3,-2]`.
/// Brackets are optional.
std::vector<Integer> parse_integer_list(std::string_view text);
std::string format_integer_list(const std::vector<Integer>& values);

/// Narrowing conversion that throws NumericError when the value does not fit.
long to_long(const Integer& z);

}  // namespace csurg
