#include "csurg/commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "csurg/errors.hpp"
#include "csurg/kernels.hpp"

namespace csurg::cli {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing parameter --") + name);
  return *v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<Integer> parse_coeffs(const std::string& text) {
  if (trim(text).empty() || trim(text) == "[]") return {};
  return parse_integer_list(text);
}

CoeffStream make_stream(const std::string& prefix, const std::string& cycle) {
  auto p = parse_coeffs(prefix);
  auto c = parse_coeffs(cycle);
  for (const auto* v : {&p, &c})
    for (const Integer& a : *v)
      if (a > -2) throw DomainError("coefficients must be <= -2, got " + a.get_str());
  if (c.empty()) return CoeffStream::finite(std::move(p));
  return CoeffStream::eventually_periodic(std::move(p), std::move(c));
}

SignTuple build_sign_tuple(CoeffStream coeffs, const std::string& k_prefix, const std::string& tail) {
  SignTuple k;
  k.coeffs = std::move(coeffs);
  k.prefix = trim(k_prefix).empty() ? std::vector<std::int64_t>{} : parse_tuple_entries(k_prefix);
  const std::string t = trim(tail);
  if (t == "ones") {
    k.tail = TailRule::ones;
  } else if (t == "max") {
    k.tail = TailRule::max;
  } else if (t.rfind("periodic:", 0) == 0) {
    k.tail = TailRule::periodic;
    k.pattern = parse_tuple_entries(t.substr(9));
  } else {
    throw ParseError("tail must be ones, max or periodic:<entries>, got '" + t + "'");
  }
  return k;
}

std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

Json tuple_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

void write_table(std::ostream& out, const Json& j) {
  if (!j.is_object()) {
    out << j.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    out << key << std::string(width - key.size() + 2, ' ');
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace

SlopeVector parse_positive_slopes(const std::string& text) {
  SlopeVector v = parse_slopes(text);
  for (const Rational& r : v.slopes)
    if (r <= 0)
      throw DomainError("slope " + format_rational(r) +
                        " rejected: slopes must be positive (the integral expansion r = n + p/q needs r > 0)");
  return v;
}

std::vector<std::int64_t> parse_tuple_entries(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') body.erase(0, 1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string tok = trim(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (tok == "max") {
      out.push_back(kMenuMax);
    } else {
      const Rational r = parse_rational(tok);
      if (!is_integer(r) || r < 1) throw ParseError("tuple entry '" + tok + "' is not a positive integer or max", start);
      out.push_back(to_long(r.get_num()));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

Json AnalyzeArgs::echo() const { return {{"braid", braid}, {"assert_hyperbolic", assert_hyperbolic}}; }

Json analyze(const AnalyzeArgs& a) {
  const BraidWord w = parse_braid(a.braid);
  const ComponentPartition parts = permutation(w);
  Json out;
  out["braid"] = to_json(w);
  out["components"] = to_json(parts);
  out["crossing_stats"] = to_json(crossing_stats(w, parts));
  out["hypothesis"] = to_json(check_hypothesis(w, a.assert_hyperbolic));
  out["square_knot_recipe"] = square_knot_recipe(w);
  Json fronts = Json::array();
  for (const auto& c : link_front_stats(w)) fronts.push_back(to_json(c));
  out["legendrian_fronts"] = std::move(fronts);
  Json probes;
  for (int d = 1; d <= 3; ++d) {
    try {
      probes[std::to_string(d)] = dehornoy_floor_at_least(w, d);
    } catch (const BudgetExceeded&) {
      probes[std::to_string(d)] = "budget_exceeded";
    }
  }
  out["dehornoy_floor_at_least"] = std::move(probes);
  return out;
}

Json CfracArgs::echo() const {
  return {{"value", opt(value)},   {"eval", opt(eval)},   {"slopes", opt(slopes)},
          {"prefix", opt(prefix)}, {"cycle", opt(cycle)}, {"convergents", opt(convergents)}};
}

Json cfrac(const CfracArgs& a) {
  const int modes = static_cast<int>(a.value.has_value()) + static_cast<int>(a.eval.has_value()) +
                    static_cast<int>(a.slopes.has_value()) + static_cast<int>(a.convergents.has_value());
  if (modes != 1) throw DomainError("cfrac needs exactly one of --value, --eval, --slopes, --convergents");
  Json out;
  if (a.value) {
    const NegContFrac f = neg_cfrac(parse_rational(*a.value));
    out["value"] = rational_json(f.value);
    out["coeffs"] = to_json(f.coeffs);
    out["phi"] = to_json(phi(f));
    out["round_trip"] = eval_cfrac(f.coeffs) == f.value;
  } else if (a.eval) {
    const auto coeffs = parse_integer_list(*a.eval);
    out["coeffs"] = to_json(coeffs);
    out["value"] = rational_json(eval_cfrac(coeffs));
  } else if (a.slopes) {
    const SlopeVector v = parse_positive_slopes(*a.slopes);
    Json per = Json::array();
    for (const Rational& s : v.slopes) {
      if (s >= 1) throw DomainError("phi_vector needs every slope in (0,1), got " + format_rational(s));
      const NegContFrac f = neg_cfrac(Rational(-1 / s));
      per.push_back({{"slope", rational_json(s)}, {"coeffs", to_json(f.coeffs)}, {"phi", to_json(phi(f))}});
    }
    out["slopes"] = std::move(per);
    out["phi_vector"] = to_json(phi_vector(v));
  } else {
    if (*a.convergents < 0) throw DomainError("--convergents needs n >= 0");
    const CoeffStream s = make_stream(a.prefix.value_or(""), a.cycle.value_or(""));
    const auto n = static_cast<std::size_t>(*a.convergents);
    Json conv = Json::array();
    Json phis = Json::array();
    const auto values = convergents(s, n);
    const auto coeffs = s.take(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      conv.push_back(rational_json(values[i]));
      phis.push_back(to_json(phi(std::vector<Integer>(coeffs.begin(), coeffs.begin() + static_cast<long>(i) + 1))));
    }
    out["coeffs"] = to_json(coeffs);
    out["convergents"] = std::move(conv);
    out["phi"] = std::move(phis);
  }
  return out;
}

Json SurgeryArgs::echo() const {
  return {{"braid", braid}, {"slopes", slopes}, {"axis", opt(axis)}, {"twist", opt(twist)}, {"expand", expand}};
}

Json surgery(const SurgeryArgs& a) {
  const BraidWord w = parse_braid(a.braid);
  SurgeryDiagram d = rational_surgery(w, parse_positive_slopes(a.slopes));
  if (a.axis) add_axis(d, Framing(parse_rational(*a.axis)));
  Json out;
  out["diagram"] = to_json(d);
  if (a.twist) {
    const auto parts = parse_integer_list(*a.twist);
    if (parts.size() != 2) throw ParseError("--twist expects u,t");
    const long u = to_long(parts[0]);
    if (u < 1 || static_cast<std::size_t>(u) > d.size()) throw DomainError("--twist component out of range");
    d = rolfsen_twist(d, static_cast<std::size_t>(u - 1), to_long(parts[1]));
    out["twisted"] = to_json(d);
  }
  SurgeryDiagram expanded = d;
  if (!d.is_integral()) {
    if (a.expand == "meridian")
      expanded = slam_dunk_expand(d);
    else if (a.expand == "chain")
      expanded = chain_expand(d);
    else if (a.expand == "parallel")
      expanded = parallel_meridian_expand(d);
    else
      throw DomainError("--expand must be meridian, chain or parallel");
  }
  out["expanded"] = to_json(expanded);
  out["homology"] = to_json(homology(expanded));
  return out;
}

Json EnumerateArgs::echo() const {
  return {{"braid", braid},
          {"slopes", slopes},
          {"count_only", count_only},
          {"isom_order", opt(isom_order)},
          {"limit", opt(limit)}};
}

void enumerate(const EnumerateArgs& a, const Emit& emit) {
  const BraidWord w = parse_braid(a.braid);
  const WeinsteinEnumeration e = enumerate_weinstein(w, parse_positive_slopes(a.slopes));
  Json header;
  header["count"] = to_json(e.count());
  header["menu_sizes"] = e.menu_sizes();
  if (a.isom_order) {
    const Rational c = parse_rational(*a.isom_order);
    if (!is_integer(c)) throw DomainError("--isom-order must be an integer");
    header["contactomorphism_lower_bound"] = to_json(contactomorphism_lower_bound(e.count(), c.get_num()));
  }
  if (a.count_only) {
    emit(header);
    return;
  }
  header["base"] = to_json(e.base());
  Integer total = e.count();
  if (a.limit && total > static_cast<unsigned long>(*a.limit)) total = static_cast<unsigned long>(*a.limit);
  if (!total.fits_ulong_p()) throw DomainError("enumeration too large to stream; pass --limit or --count-only");
  const auto n = total.get_ui();
  header["emitted"] = n;
  emit(header);

  constexpr std::uint64_t chunk = 1024;
  for (std::uint64_t first = 0; first < n; first += chunk) {
    const std::uint64_t count = std::min<std::uint64_t>(chunk, n - first);
    const auto batch = weinstein_batch(e, first, count, Exec::parallel);
    for (std::uint64_t i = 0; i < count; ++i) {
      const WeinsteinDiagram& d = batch[i];
      Json line = {{"index", first + i}, {"rotation_tuple", tuple_json(d.rotation_tuple)}};
      Json tb = Json::array(), rot = Json::array(), sp = Json::array(), sn = Json::array();
      for (const auto& c : d.legendrian) {
        tb.push_back(c.tb);
        rot.push_back(c.rot);
        sp.push_back(c.stab_pos);
        sn.push_back(c.stab_neg);
      }
      line["tb"] = std::move(tb);
      line["rot"] = std::move(rot);
      line["stab_pos"] = std::move(sp);
      line["stab_neg"] = std::move(sn);
      line["valid"] = validate_weinstein(d);
      emit(line);
    }
  }
}

Json ThetaArgs::echo() const {
  return {{"braid", braid}, {"slopes", slopes}, {"tuple", opt(tuple)}, {"all", all}};
}

Json theta(const ThetaArgs& a) {
  if (a.all == a.tuple.has_value()) throw DomainError("theta needs exactly one of --tuple or --all");
  const BraidWord w = parse_braid(a.braid);
  const WeinsteinEnumeration e = enumerate_weinstein(w, parse_positive_slopes(a.slopes));
  Json out;
  if (a.tuple) {
    std::vector<std::int64_t> k;
    if (!trim(*a.tuple).empty() && trim(*a.tuple) != "[]") k = parse_tuple_entries(*a.tuple);
    const WeinsteinDiagram d = e.at(e.index_of_tuple(k));
    out["tuple"] = tuple_json(k);
    out["rotation_tuple"] = tuple_json(d.rotation_tuple);
    out["c1_pairing"] = c1_pairing(d);
    out["theta"] = to_json(csurg::theta(d));
    return out;
  }
  if (!e.count().fits_ulong_p() || e.count() > 1'000'000UL)
    throw DomainError("--all is limited to 10^6 diagrams");
  const auto n = e.count().get_ui();
  const auto reports = theta_batch(e, 0, n, Exec::parallel);
  const auto tuples = rotation_tuple_batch(e, 0, n, Exec::parallel);
  Json rows = Json::array();
  std::map<Rational, std::uint64_t> groups;
  for (std::uint64_t i = 0; i < n; ++i) {
    rows.push_back({{"rotation_tuple", tuple_json(tuples[i])}, {"theta", to_json(reports[i])}});
    ++groups[reports[i].theta];
  }
  Json g = Json::array();
  for (const auto& [value, count] : groups) g.push_back({{"theta", rational_json(value)}, {"count", count}});
  out["reports"] = std::move(rows);
  out["groups"] = std::move(g);
  return out;
}

Json LimitsArgs::echo() const {
  return {{"prefix_coeffs", prefix_coeffs},
          {"cycle_coeffs", cycle_coeffs},
          {"k_prefix", k_prefix},
          {"tail", tail},
          {"n", n},
          {"braid", opt(braid)},
          {"other_k_prefix", opt(other_k_prefix)},
          {"other_tail", opt(other_tail)},
          {"other_prefix_coeffs", opt(other_prefix_coeffs)},
          {"other_cycle_coeffs", opt(other_cycle_coeffs)}};
}

Json limits(const LimitsArgs& a) {
  if (a.n < 0) throw DomainError("--n must be >= 0");
  const auto n = static_cast<std::size_t>(a.n);
  const SignTuple k = build_sign_tuple(make_stream(a.prefix_coeffs, a.cycle_coeffs), a.k_prefix, a.tail);
  const auto blocks = block_decomposition(k, n);
  Json out;
  out["tuple"] = to_json(k);
  out["truncated_tuple"] = tuple_json(k.truncate(n));
  out["coeffs"] = to_json(k.coeffs.take(n + 1));
  Json jb = Json::array();
  const auto normal = shuffle_normal_form(blocks);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    jb.push_back({{"length", blocks[i].length},
                  {"positives", blocks[i].positives},
                  {"classes", block_class_count(blocks[i].length)},
                  {"normal_form", sign_string(normal[i])},
                  {"gluing_matrix", to_json(gluing_matrix(*k.coeffs.at(i)))}});
  out["blocks"] = std::move(jb);
  Json slopes = Json::array();
  for (std::size_t i = 0; i <= n; ++i) slopes.push_back(rational_json(end_slope(k.coeffs, i)));
  out["end_slopes"] = std::move(slopes);
  if (!k.coeffs.is_finite()) out["sign"] = to_string(sign_of(k));
  if (a.braid) out["truncation_consistency"] = truncation_consistency(parse_braid(*a.braid), k, n);
  if (a.other_k_prefix || a.other_tail || a.other_prefix_coeffs || a.other_cycle_coeffs) {
    const CoeffStream other_coeffs =
        (a.other_prefix_coeffs || a.other_cycle_coeffs)
            ? make_stream(a.other_prefix_coeffs.value_or(""), a.other_cycle_coeffs.value_or(""))
            : k.coeffs;
    const SignTuple k2 = build_sign_tuple(other_coeffs, a.other_k_prefix.value_or(""), a.other_tail.value_or("ones"));
    out["other_tuple"] = to_json(k2);
    out["other_sign"] = to_string(sign_of(k2));
    out["properly_isotopic"] = properly_isotopic(k, k2);
  }
  return out;
}

Json FamilyArgs::echo() const {
  return {{"kind", kind}, {"braid", opt(braid)}, {"k", opt(k)}, {"l", opt(l)}, {"m", opt(m)}};
}

namespace {

BraidWord require_braid(const std::optional<std::string>& text) {
  if (!text) throw DomainError("missing parameter --braid");
  return parse_braid(*text);
}

// s1 s2 ... s_{m-1}: its closure is the unknot, a knot on m strands.
BraidWord cycle_braid(std::int64_t m) {
  if (m < 2) throw DomainError("--m must be >= 2");
  std::vector<Letter> letters;
  for (int g = 1; g < m; ++g) letters.push_back({g, 1});
  return BraidWord(static_cast<int>(m), std::move(letters));
}

}  // namespace

Json family(const FamilyArgs& a) {
  Json out;
  if (a.kind == "delta2l") {
    out["braid"] = to_json(delta_squared_times(require_braid(a.braid), require(a.l, "l")));
  } else if (a.kind == "power") {
    out["braid"] = to_json(power(require_braid(a.braid), require(a.k, "k")));
  } else if (a.kind == "example420") {
    out["braid"] = to_json(example_braid(require(a.k, "k")));
  } else if (a.kind == "lspace") {
    const BraidWord b = a.braid ? parse_braid(*a.braid) : cycle_braid(require(a.m, "m"));
    const LSpaceFamily f = lspace_family_diagram(b, require(a.k, "k"), require(a.l, "l"));
    out["braid"] = to_json(b);
    out["diagram"] = to_json(f.diagram);
    out["homology"] = to_json(f.homology);
    out["base_order"] = to_json(f.base_order);
    out["order"] = to_json(f.order);
    out["next_order"] = to_json(f.next_order);
    out["additivity_check"] = f.additivity_check;
  } else {
    throw DomainError("family kind must be delta2l, power, example420 or lspace");
  }
  return out;
}

// ---------------------------------------------------------------------------

int run(const std::string& command, const Json& echo, OutputFormat format, std::ostream& out, std::ostream& err,
        const std::function<void(const Emit&)>& body) {
  bool first = true;
  auto write = [&](Json j) {
    if (first) {
      j["schema"] = 1;
      j["command"] = command;
      j["inputs_echo"] = echo;
      first = false;
      if (format == OutputFormat::table) {
        write_table(out, j);
        return;
      }
    }
    out << j.dump() << '\n';
  };

  auto fail = [&](const char* type, const std::string& message, int code, std::optional<std::size_t> pos) {
    Json e = {{"type", type}, {"message", message}};
    if (pos && *pos != std::string::npos) e["position"] = *pos;
    err << "csurg " << command << ": " << message << '\n';
    if (first) {
      write(Json{{"error", e}});
    } else {
      out << Json{{"error", e}}.dump() << '\n';
    }
    return code;
  };

  try {
    body(write);
    return kOk;
  } catch (const ParseError& e) {
    return fail("parse_error", e.what(), kParseError, e.position());
  } catch (const DomainError& e) {
    return fail("domain_error", e.what(), kParseError, std::nullopt);
  } catch (const UndecidableError& e) {
    return fail("undecidable", e.what(), kParseError, std::nullopt);
  } catch (const HypothesisError& e) {
    return fail("hypothesis_violation", e.what(), kHypothesisError, std::nullopt);
  } catch (const NumericError& e) {
    return fail("numeric_precondition", e.what(), kNumericError, std::nullopt);
  } catch (const BudgetExceeded& e) {
    return fail("budget_exceeded", e.what(), kNumericError, std::nullopt);
  }
}

}  // namespace csurg::cli
