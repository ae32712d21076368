#include "csurg/legendrian.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "csurg/errors.hpp"

namespace csurg {

LegendrianComponent front_stats(const BraidWord& beta) {
  const ComponentPartition parts = permutation(beta);
  if (!parts.is_knot()) throw DomainError("front_stats needs a braid whose closure is a knot");
  const std::int64_t cp = beta.positive_count();
  const std::int64_t cm = beta.negative_count();
  const std::int64_t m = beta.strands();
  LegendrianComponent c;
  c.tb = cp - 2 * cm - m;
  c.rot = cm % 2;
  c.cusps = 2 * (m + cm);
  return c;
}

std::vector<LegendrianComponent> link_front_stats(const BraidWord& beta) {
  const ComponentPartition parts = permutation(beta);
  const CrossingStats stats = crossing_stats(beta, parts);
  const std::size_t ell = parts.cycle_type.size();
  std::vector<LegendrianComponent> out(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    std::int64_t charged = 0;
    for (std::size_t j = i + 1; j < ell; ++j) charged += stats.inter_negative[i][j];
    const std::int64_t mi = parts.cycle_type[i];
    const std::int64_t cm = stats.component_minus[i];
    out[i].tb = stats.component_plus[i] - 2 * cm - mi - charged;
    out[i].rot = (cm + charged) % 2;
    out[i].cusps = 2 * (mi + cm + charged);
  }
  return out;
}

LegendrianComponent stabilize_to(const LegendrianComponent& c, std::int64_t target_tb, std::int64_t target_rot) {
  const std::int64_t s = c.tb - target_tb;
  const std::int64_t shift = target_rot - c.rot;
  if (s < 0)
    throw HypothesisError("cannot raise tb from " + std::to_string(c.tb) + " to " + std::to_string(target_tb) +
                          " by stabilizing");
  if (std::llabs(shift) > s)
    throw HypothesisError("rot " + std::to_string(target_rot) + " is out of reach with " + std::to_string(s) +
                          " stabilizations from rot " + std::to_string(c.rot));
  if ((s - shift) % 2 != 0)
    throw HypothesisError("parity: " + std::to_string(s) + " stabilizations cannot shift rot by " +
                          std::to_string(shift));
  LegendrianComponent out = c;
  out.tb = target_tb;
  out.rot = target_rot;
  out.cusps += 2 * s;
  out.stab_pos += (s + shift) / 2;
  out.stab_neg += (s - shift) / 2;
  return out;
}

LegendrianComponent stabilize_to_tb(const LegendrianComponent& c, std::int64_t target_tb) {
  const std::int64_t s = c.tb - target_tb;
  if (s < 0)
    throw HypothesisError("front has tb " + std::to_string(c.tb) + ", needs at least " + std::to_string(target_tb));
  // Reachable rot values are c.rot - s, c.rot - s + 2, ..., c.rot + s.
  std::int64_t best = c.rot - s;
  for (std::int64_t r = c.rot - s; r <= c.rot + s; r += 2) {
    const auto better = std::llabs(r) < std::llabs(best) || (std::llabs(r) == std::llabs(best) && r > best);
    if (better) best = r;
  }
  return stabilize_to(c, target_tb, best);
}

std::vector<LegendrianComponent> unknot_menu(std::int64_t f) {
  if (f > -2) throw DomainError("no Legendrian unknot has tb = " + std::to_string(f + 1) + " >= 0");
  const std::int64_t s = -f - 2;  // stabilizations of the tb = -1 unknot
  std::vector<LegendrianComponent> out;
  out.reserve(static_cast<std::size_t>(-f - 1));
  for (std::int64_t rot = f + 2; rot <= -f - 2; rot += 2) {
    LegendrianComponent c;
    c.tb = f + 1;
    c.rot = rot;
    c.cusps = 2 * (s + 1);
    c.stab_pos = (s + rot) / 2;
    c.stab_neg = (s - rot) / 2;
    out.push_back(c);
  }
  return out;
}

WeinsteinEnumeration::WeinsteinEnumeration(const BraidWord& beta, const SlopeVector& v)
    : base_(slam_dunk_expand(rational_surgery(beta, v))), count_(1) {
  const std::vector<LegendrianComponent> fronts = link_front_stats(beta);
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const SurgeryComponent& c = base_[i];
    const std::int64_t f = to_long(c.framing.p());
    if (c.kind == ComponentKind::braid) {
      const LegendrianComponent& front = fronts.at(static_cast<std::size_t>(c.braid_index));
      if (front.tb < f + 1)
        throw HypothesisError("component " + std::to_string(c.braid_index + 1) + " has a front with tb " +
                              std::to_string(front.tb) + " but framing " + std::to_string(f) + " needs tb " +
                              std::to_string(f + 1));
      braid_fronts_.push_back(stabilize_to_tb(front, f + 1));
    } else {
      if (f > -2) throw DomainError("unknot framed " + std::to_string(f) + " has no Legendrian realization");
      unknots_.push_back(i);
      menu_sizes_.push_back(-f - 1);
      count_ *= static_cast<long>(-f - 1);
    }
  }
}

WeinsteinDiagram WeinsteinEnumeration::at(const Integer& index) const {
  if (index < 0 || index >= count_) throw DomainError("enumeration index out of range");
  WeinsteinDiagram w{base_, {}, {}};
  w.legendrian.resize(base_.size());
  std::size_t next_braid = 0;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (base_[i].kind == ComponentKind::braid) w.legendrian[i] = braid_fronts_[next_braid++];

  // Mixed radix with the last unknot least significant.
  std::vector<std::int64_t> digit(unknots_.size());
  Integer rest = index;
  for (std::size_t u = unknots_.size(); u-- > 0;) {
    const Integer radix(static_cast<long>(menu_sizes_[u]));
    digit[u] = to_long(Integer(rest % radix));
    rest /= radix;
  }
  for (std::size_t u = 0; u < unknots_.size(); ++u) {
    const std::size_t i = unknots_[u];
    const std::int64_t f = to_long(base_[i].framing.p());
    const std::int64_t rot = f + 2 + 2 * digit[u];
    const std::int64_t s = -f - 2;
    LegendrianComponent c;
    c.tb = f + 1;
    c.rot = rot;
    c.cusps = 2 * (s + 1);
    c.stab_pos = (s + rot) / 2;
    c.stab_neg = (s - rot) / 2;
    w.legendrian[i] = c;
    w.rotation_tuple.push_back(rot);
  }
  return w;
}

Integer WeinsteinEnumeration::index_of_tuple(const std::vector<std::int64_t>& k) const {
  if (k.size() != unknots_.size())
    throw DomainError("tuple has " + std::to_string(k.size()) + " entries, diagram has " +
                      std::to_string(unknots_.size()) + " unknots");
  Integer index = 0;
  for (std::size_t u = 0; u < k.size(); ++u) {
    if (k[u] < 1 || k[u] > menu_sizes_[u])
      throw DomainError("tuple entry " + std::to_string(k[u]) + " outside 1.." + std::to_string(menu_sizes_[u]));
    index = index * static_cast<long>(menu_sizes_[u]) + static_cast<long>(k[u] - 1);
  }
  return index;
}

WeinsteinEnumeration enumerate_weinstein(const BraidWord& beta, const SlopeVector& v) {
  for (const Rational& r : v.slopes)
    if (r <= 0) throw DomainError("surgery slope must be positive, got " + format_rational(r));
  const HypothesisReport h = check_hypothesis(beta, false);
  for (std::size_t i = 0; i < h.per_component_cond.size(); ++i)
    if (!h.per_component_cond[i])
      throw HypothesisError("component " + std::to_string(i + 1) +
                            " fails c_{i,+} - 2c_{i,-} - d_{i,-} - m_i >= 1 (value " +
                            std::to_string(h.per_component_margin[i]) + ")");
  return WeinsteinEnumeration(beta, v);
}

bool validate_weinstein(const WeinsteinDiagram& w) {
  if (w.legendrian.size() != w.base.size()) return false;
  for (std::size_t i = 0; i < w.base.size(); ++i) {
    const Framing& f = w.base[i].framing;
    if (!f.is_integral() || f.p() != w.legendrian[i].tb - 1) return false;
  }
  return true;
}

std::vector<std::int64_t> c1_pairing(const WeinsteinDiagram& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.legendrian.size());
  for (const auto& c : w.legendrian) out.push_back(c.rot);
  return out;
}

ThetaContext theta_context(const SurgeryDiagram& base) {
  const IntMatrix q = linking_matrix(base);
  ThetaContext ctx;
  ctx.homology = homology(q);
  if (ctx.homology.det == 0) throw NumericError("linking matrix is singular; theta needs a rational homology sphere");
  ctx.q_inverse = inverse(q);
  return ctx;
}

ThetaReport theta(const std::vector<std::int64_t>& rot, const ThetaContext& ctx) {
  std::vector<Integer> r;
  r.reserve(rot.size());
  for (std::int64_t x : rot) r.emplace_back(static_cast<long>(x));
  ThetaReport t;
  t.c1_squared = quadratic_form(ctx.q_inverse, r);
  t.chi = ctx.homology.euler_char;
  t.sigma = ctx.homology.signature;
  t.theta = t.c1_squared - 2 * t.chi - 3 * t.sigma;
  t.complete_invariant = ctx.homology.h1_order == 1;
  return t;
}

ThetaReport theta(const WeinsteinDiagram& w, const ThetaContext& ctx) { return theta(c1_pairing(w), ctx); }

ThetaReport theta(const WeinsteinDiagram& w) { return theta(w, theta_context(w.base)); }

std::size_t isotopy_class_count(const std::vector<WeinsteinDiagram>& ws) {
  std::set<std::vector<std::int64_t>> tuples;
  for (const auto& w : ws) tuples.insert(w.rotation_tuple);
  return tuples.size();
}

Integer contactomorphism_lower_bound(const Integer& count, const Integer& c) {
  if (c < 1) throw DomainError("isometry group order must be at least 1");
  if (count < 0) throw DomainError("count must be nonnegative");
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), count.get_mpz_t(), c.get_mpz_t());
  return out;
}

}  // namespace csurg
