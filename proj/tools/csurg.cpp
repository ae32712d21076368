// csurg: command-line front end. Every subcommand prints JSON (one object, or
// JSON lines for `enumerate`) and exits 0, 2 (parse/domain), 3 (hypothesis)
// or 4 (numeric precondition).

#include <CLI11.hpp>

#include <iostream>

#include "csurg/commands.hpp"

namespace cli = csurg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact surgery, Legendrian and limit bookkeeping for braid closures", "csurg"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  cli::AnalyzeArgs analyze;
  auto* sc_analyze = app.add_subcommand("analyze", "Components, crossing statistics, hypothesis checks");
  sc_analyze->add_option("braid", analyze.braid, "Braid word, e.g. \"B3 s1^7 s2^-1\"")->required();
  sc_analyze->add_flag("--assert-hyperbolic", analyze.assert_hyperbolic, "Record the closure as hyperbolic");

  cli::CfracArgs cfrac;
  auto* sc_cfrac = app.add_subcommand("cfrac", "Negative continued fractions and Phi");
  sc_cfrac->add_option("--value", cfrac.value, "Expand a rational r < -1");
  sc_cfrac->add_option("--eval", cfrac.eval, "Evaluate a coefficient list such as [-3,-2]");
  sc_cfrac->add_option("--slopes", cfrac.slopes, "Phi of a slope vector p/q,...");
  sc_cfrac->add_option("--convergents", cfrac.convergents, "Convergents 0..n of --prefix/--cycle");
  sc_cfrac->add_option("--prefix", cfrac.prefix, "Stream prefix");
  sc_cfrac->add_option("--cycle", cfrac.cycle, "Repeating part of the stream");

  cli::SurgeryArgs surgery;
  auto* sc_surgery = app.add_subcommand("surgery", "Surgery diagram, integral expansion and homology");
  sc_surgery->add_option("braid", surgery.braid, "Braid word")->required();
  sc_surgery->add_option("--slopes", surgery.slopes, "One slope per closure component")->required();
  sc_surgery->add_option("--axis", surgery.axis, "Add the braid axis with this framing");
  sc_surgery->add_option("--twist", surgery.twist, "Rolfsen twist u,t about component u (1-based)");
  sc_surgery->add_option("--expand", surgery.expand, "meridian | chain | parallel")
      ->check(CLI::IsMember({"meridian", "chain", "parallel"}));

  cli::EnumerateArgs enumerate;
  std::uint64_t limit = 0;
  auto* sc_enumerate = app.add_subcommand("enumerate", "Weinstein diagrams over the unknot menus");
  sc_enumerate->add_option("braid", enumerate.braid, "Braid word")->required();
  sc_enumerate->add_option("--slopes", enumerate.slopes, "One slope per closure component")->required();
  sc_enumerate->add_flag("--count-only", enumerate.count_only, "Print the count without listing diagrams");
  sc_enumerate->add_option("--isom-order", enumerate.isom_order, "|Isom| of the complement, for ceil(count/c)");
  auto* limit_opt = sc_enumerate->add_option("--limit", limit, "Stop after this many diagrams");

  cli::ThetaArgs theta;
  auto* sc_theta = app.add_subcommand("theta", "c1^2, chi, sigma and theta of enumerated diagrams");
  sc_theta->add_option("braid", theta.braid, "Braid word")->required();
  sc_theta->add_option("--slopes", theta.slopes, "One slope per closure component")->required();
  sc_theta->add_option("--tuple", theta.tuple, "Menu choices k_i (1-based), comma separated");
  sc_theta->add_flag("--all", theta.all, "Every diagram, grouped by theta");

  cli::LimitsArgs limits;
  auto* sc_limits = app.add_subcommand("limits", "Blocks, end slopes, signs and proper isotopy");
  sc_limits->add_option("--prefix-coeffs", limits.prefix_coeffs, "Coefficient prefix");
  sc_limits->add_option("--cycle-coeffs", limits.cycle_coeffs, "Repeating coefficients (empty: finite)");
  sc_limits->add_option("--k-prefix", limits.k_prefix, "Tuple prefix; entries are integers or max");
  sc_limits->add_option("--tail", limits.tail, "ones | max | periodic:<entries>");
  sc_limits->add_option("--n", limits.n, "Truncation level")->required();
  sc_limits->add_option("--braid", limits.braid, "Braid for the truncation consistency check");
  sc_limits->add_option("--other-k-prefix", limits.other_k_prefix, "Second tuple prefix");
  sc_limits->add_option("--other-tail", limits.other_tail, "Second tuple tail");
  sc_limits->add_option("--other-prefix-coeffs", limits.other_prefix_coeffs, "Second coefficient prefix");
  sc_limits->add_option("--other-cycle-coeffs", limits.other_cycle_coeffs, "Second repeating coefficients");

  cli::FamilyArgs family;
  auto* sc_family = app.add_subcommand("family", "Braid families and the L-space diagram");
  sc_family->add_option("kind", family.kind, "delta2l | power | example420 | lspace")->required();
  sc_family->add_option("--braid", family.braid, "Base braid");
  sc_family->add_option("--k", family.k, "k");
  sc_family->add_option("--l", family.l, "l");
  sc_family->add_option("--m", family.m, "Strand count (lspace without --braid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseError;
  }

  const auto fmt = format == "table" ? cli::OutputFormat::table : cli::OutputFormat::json;
  auto single = [&](const std::string& name, const nlohmann::json& echo, auto fn) {
    return cli::run(name, echo, fmt, std::cout, std::cerr, [&](const cli::Emit& emit) { emit(fn()); });
  };

  if (*sc_analyze) return single("analyze", analyze.echo(), [&] { return cli::analyze(analyze); });
  if (*sc_cfrac) return single("cfrac", cfrac.echo(), [&] { return cli::cfrac(cfrac); });
  if (*sc_surgery) return single("surgery", surgery.echo(), [&] { return cli::surgery(surgery); });
  if (*sc_theta) return single("theta", theta.echo(), [&] { return cli::theta(theta); });
  if (*sc_limits) return single("limits", limits.echo(), [&] { return cli::limits(limits); });
  if (*sc_family) return single("family", family.echo(), [&] { return cli::family(family); });
  if (*sc_enumerate) {
    if (limit_opt->count() > 0) enumerate.limit = limit;
    return cli::run("enumerate", enumerate.echo(), fmt, std::cout, std::cerr,
                    [&](const cli::Emit& emit) { cli::enumerate(enumerate, emit); });
  }
  return cli::kParseError;
}
