#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csurg/serialize.hpp"

namespace csurg::cli {

enum class OutputFormat { json, table };

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kParseError = 2, kHypothesisError = 3, kNumericError = 4 };

using Emit = std::function<void(const Json&)>;

struct AnalyzeArgs {
  std::string braid;
  bool assert_hyperbolic = false;
  Json echo() const;
};

struct CfracArgs {
  std::optional<std::string> value;        ///< r < -1
  std::optional<std::string> eval;         ///< coefficient list
  std::optional<std::string> slopes;       ///< slope vector for phi_vector
  std::optional<std::string> prefix;       ///< stream prefix for convergents
  std::optional<std::string> cycle;        ///< stream cycle for convergents
  std::optional<std::int64_t> convergents; ///< n
  Json echo() const;
};

struct SurgeryArgs {
  std::string braid;
  std::string slopes;
  std::optional<std::string> axis;   ///< axis framing
  std::optional<std::string> twist;  ///< "u,t" with u 1-based
  std::string expand = "meridian";   ///< meridian | chain | parallel
  Json echo() const;
};

struct EnumerateArgs {
  std::string braid;
  std::string slopes;
  bool count_only = false;
  std::optional<std::string> isom_order;
  std::optional<std::uint64_t> limit;
  Json echo() const;
};

struct ThetaArgs {
  std::string braid;
  std::string slopes;
  std::optional<std::string> tuple;  ///< menu picks k_i, 1-based
  bool all = false;
  Json echo() const;
};

struct LimitsArgs {
  std::string prefix_coeffs;
  std::string cycle_coeffs;
  std::string k_prefix;
  std::string tail = "ones";  ///< ones | max | periodic:<list>
  std::int64_t n = 0;
  std::optional<std::string> braid;
  std::optional<std::string> other_k_prefix;
  std::optional<std::string> other_tail;
  std::optional<std::string> other_prefix_coeffs;
  std::optional<std::string> other_cycle_coeffs;
  Json echo() const;
};

struct FamilyArgs {
  std::string kind;  ///< delta2l | power | example420 | lspace
  std::optional<std::string> braid;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> m;
  Json echo() const;
};

Json analyze(const AnalyzeArgs& a);
Json cfrac(const CfracArgs& a);
Json surgery(const SurgeryArgs& a);
/// Emits a header object and then one object per diagram, in rotation-tuple
/// order.
void enumerate(const EnumerateArgs& a, const Emit& emit);
Json theta(const ThetaArgs& a);
Json limits(const LimitsArgs& a);
Json family(const FamilyArgs& a);

/// Runs `body`, stamping the first emitted object with schema, command and
/// inputs_echo. Library exceptions become an error object and an exit code.
int run(const std::string& command, const Json& echo, OutputFormat format, std::ostream& out, std::ostream& err,
        const std::function<void(const Emit&)>& body);

/// Positive slopes only; parses `p/q,n+p/q,...`.
SlopeVector parse_positive_slopes(const std::string& text);

/// Tuple entries: positive integers or `max`.
std::vector<std::int64_t> parse_tuple_entries(const std::string& text);

}  // namespace csurg::cli
