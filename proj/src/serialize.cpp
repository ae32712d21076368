#include "csurg/serialize.hpp"

#include "csurg/errors.hpp"

namespace csurg {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json rational_json(const Rational& r) { return format_rational(r); }

Json to_json(const BraidWord& w) {
  return {{"text", format_braid(w)},
          {"strands", w.strands()},
          {"length", w.length()},
          {"c_plus", w.positive_count()},
          {"c_minus", w.negative_count()}};
}

namespace {

Json one_based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

}  // namespace

Json to_json(const ComponentPartition& p) {
  return {{"permutation", one_based(p.permutation)},
          {"component_of", one_based(p.component_of)},
          {"cycle_type", p.cycle_type},
          {"count", p.component_count()},
          {"is_knot", p.is_knot()}};
}

Json to_json(const CrossingStats& s) {
  return {{"c_plus", s.c_plus},
          {"c_minus", s.c_minus},
          {"component_plus", s.component_plus},
          {"component_minus", s.component_minus},
          {"inter_negative", s.inter_negative},
          {"d_minus", s.d_minus},
          {"linking", s.linking},
          {"axis_linking", s.axis_linking}};
}

Json to_json(const HypothesisReport& h) {
  return {{"is_knot", h.is_knot},
          {"cond_tb", h.cond_tb},
          {"tb_margin", h.tb_margin},
          {"cond_parity", h.cond_parity},
          {"per_component_cond", h.per_component_cond},
          {"per_component_margin", h.per_component_margin},
          {"hyperbolicity", h.hyperbolicity == Hyperbolicity::asserted ? "asserted" : "unknown"}};
}

Json to_json(const LegendrianComponent& c) {
  return {{"tb", c.tb}, {"rot", c.rot}, {"cusps", c.cusps}, {"stab_pos", c.stab_pos}, {"stab_neg", c.stab_neg}};
}

Json to_json(const SurgeryDiagram& d) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const SurgeryComponent& c = d[i];
    Json jc = {{"id", i + 1}, {"kind", to_string(c.kind)}, {"framing", format_framing(c.framing)}};
    jc["parent"] = c.parent >= 0 ? Json(c.parent + 1) : Json(nullptr);
    if (c.kind == ComponentKind::braid) jc["braid_component"] = c.braid_index + 1;
    if (c.kind == ComponentKind::chain) jc["depth"] = c.depth;
    comps.push_back(std::move(jc));
  }
  IntMatrix lk(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) lk(i, j) = d.linking(i, j);
  Json out = {{"braid", format_braid(d.braid())}, {"components", std::move(comps)}, {"linking", to_json(lk)}};
  out["integral"] = d.is_integral();
  if (d.is_integral()) out["linking_matrix"] = to_json(linking_matrix(d));
  return out;
}

Json to_json(const HomologyReport& h) {
  return {{"det", to_json(h.det)},
          {"h1_order", to_json(h.h1_order)},
          {"elementary_divisors", to_json(h.elementary_divisors)},
          {"free_rank", h.free_rank},
          {"signature", h.signature},
          {"euler_char", h.euler_char}};
}

Json to_json(const WeinsteinDiagram& w) {
  Json out = to_json(w.base);
  Json tb = Json::array(), rot = Json::array(), sp = Json::array(), sn = Json::array();
  for (const auto& c : w.legendrian) {
    tb.push_back(c.tb);
    rot.push_back(c.rot);
    sp.push_back(c.stab_pos);
    sn.push_back(c.stab_neg);
  }
  out["tb"] = std::move(tb);
  out["rot"] = std::move(rot);
  out["stab_pos"] = std::move(sp);
  out["stab_neg"] = std::move(sn);
  out["rotation_tuple"] = w.rotation_tuple;
  out["valid"] = validate_weinstein(w);
  return out;
}

Json to_json(const ThetaReport& t) {
  return {{"c1_squared", rational_json(t.c1_squared)},
          {"chi", t.chi},
          {"sigma", t.sigma},
          {"theta", rational_json(t.theta)},
          {"complete_invariant", t.complete_invariant}};
}

namespace {

Json tuple_entries(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (std::int64_t x : v) out.push_back(x == kMenuMax ? Json("max") : Json(x));
  return out;
}

std::vector<std::int64_t> read_entries(const Json& j) {
  if (!j.is_array()) throw ParseError("tuple entries must be a JSON array");
  std::vector<std::int64_t> out;
  for (const Json& x : j) {
    if (x.is_string() && x.get<std::string>() == "max")
      out.push_back(kMenuMax);
    else if (x.is_number_integer() && x.get<std::int64_t>() >= 1)
      out.push_back(x.get<std::int64_t>());
    else
      throw ParseError("tuple entries are positive integers or \"max\"");
  }
  return out;
}

}  // namespace

Json to_json(const SignTuple& k) {
  Json out = {{"prefix", tuple_entries(k.prefix)}};
  switch (k.tail) {
    case TailRule::ones: out["tail"] = "ones"; break;
    case TailRule::max: out["tail"] = "max"; break;
    case TailRule::periodic: out["tail"] = {{"periodic", tuple_entries(k.pattern)}}; break;
  }
  return out;
}

SignTuple sign_tuple_from_json(const Json& j, CoeffStream coeffs) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("tail")) throw ParseError("sign tuple needs prefix and tail");
  SignTuple k;
  k.coeffs = std::move(coeffs);
  k.prefix = read_entries(j.at("prefix"));
  const Json& tail = j.at("tail");
  if (tail.is_string() && tail.get<std::string>() == "ones") {
    k.tail = TailRule::ones;
  } else if (tail.is_string() && tail.get<std::string>() == "max") {
    k.tail = TailRule::max;
  } else if (tail.is_object() && tail.contains("periodic")) {
    k.tail = TailRule::periodic;
    k.pattern = read_entries(tail.at("periodic"));
    if (k.pattern.empty()) throw ParseError("periodic tail needs a nonempty pattern");
  } else {
    throw ParseError(R"(tail must be "ones", "max" or {"periodic": [..]})");
  }
  return k;
}

}  // namespace csurg
