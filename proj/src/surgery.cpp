#include "csurg/surgery.hpp"

#include <utility>

#include "csurg/errors.hpp"

namespace csurg {

Framing::Framing(const Rational& r) : p_(r.get_num()), q_(r.get_den()) {}

Framing::Framing(const Integer& n) : p_(n), q_(1) {}

Framing Framing::fraction(const Integer& p, const Integer& q) {
  if (q == 0) {
    if (p == 0) throw NumericError("framing 0/0");
    return infinity();
  }
  return Framing(make_rational(p, q));
}

Framing Framing::infinity() {
  Framing f;
  f.p_ = 1;
  f.q_ = 0;
  return f;
}

Rational Framing::value() const {
  if (is_infinite()) throw NumericError("infinite framing has no rational value");
  return make_rational(p_, q_);
}

std::string format_framing(const Framing& f) {
  if (f.is_infinite()) return "inf";
  return format_rational(f.value());
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::braid: return "braid";
    case ComponentKind::meridian: return "meridian";
    case ComponentKind::chain: return "chain";
    case ComponentKind::axis: return "axis";
  }
  return "?";
}

SurgeryDiagram::SurgeryDiagram(BraidWord braid, ComponentPartition parts)
    : braid_(std::move(braid)), parts_(std::move(parts)) {}

bool SurgeryDiagram::is_integral() const {
  for (const auto& c : components_)
    if (!c.framing.is_integral()) return false;
  return true;
}

std::size_t SurgeryDiagram::add(SurgeryComponent c, const std::vector<Integer>& links) {
  const std::size_t n = components_.size();
  if (links.size() != n) throw DomainError("linking list length does not match the diagram");
  IntMatrix grown(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) grown(i, j) = lk_(i, j);
    grown(i, n) = links[i];
    grown(n, i) = links[i];
  }
  lk_ = std::move(grown);
  components_.push_back(std::move(c));
  return n;
}

void SurgeryDiagram::set_linking(std::size_t i, std::size_t j, const Integer& v) {
  if (i == j) throw DomainError("a component has no linking number with itself");
  lk_(i, j) = v;
  lk_(j, i) = v;
}

void SurgeryDiagram::remove(std::size_t k) {
  const std::size_t n = components_.size();
  if (k >= n) throw DomainError("component index out of range");
  IntMatrix shrunk(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == k) continue;
      shrunk(r, c++) = lk_(i, j);
    }
    ++r;
  }
  lk_ = std::move(shrunk);
  components_.erase(components_.begin() + static_cast<long>(k));
  const int removed = static_cast<int>(k);
  for (auto& c : components_) {
    if (c.parent == removed)
      c.parent = -1;
    else if (c.parent > removed)
      --c.parent;
  }
}

SurgeryDiagram rational_surgery(const BraidWord& beta, const SlopeVector& v) {
  ComponentPartition parts = permutation(beta);
  const CrossingStats stats = crossing_stats(beta, parts);
  const auto ell = static_cast<std::size_t>(parts.component_count());
  if (v.slopes.size() != ell)
    throw DomainError("closure has " + std::to_string(ell) + " components but " + std::to_string(v.slopes.size()) +
                      " slopes were given");
  SurgeryDiagram d(beta, std::move(parts));
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<Integer> links;
    for (std::size_t j = 0; j < i; ++j) links.emplace_back(stats.linking[i][j]);
    SurgeryComponent c;
    c.kind = ComponentKind::braid;
    c.braid_index = static_cast<int>(i);
    c.framing = Framing(v.slopes[i]);
    d.add(std::move(c), links);
  }
  return d;
}

std::size_t add_axis(SurgeryDiagram& d, Framing framing) {
  std::vector<Integer> links;
  for (const auto& c : d.components()) {
    if (c.kind == ComponentKind::braid)
      links.emplace_back(d.partition().cycle_type.at(static_cast<std::size_t>(c.braid_index)));
    else
      links.emplace_back(0);
  }
  SurgeryComponent axis;
  axis.kind = ComponentKind::axis;
  axis.framing = std::move(framing);
  return d.add(std::move(axis), links);
}

std::size_t add_meridian(SurgeryDiagram& d, std::size_t of, Framing framing) {
  if (of >= d.size()) throw DomainError("meridian parent out of range");
  std::vector<Integer> links(d.size(), Integer(0));
  links[of] = 1;
  SurgeryComponent m;
  m.kind = ComponentKind::meridian;
  m.parent = static_cast<int>(of);
  m.framing = std::move(framing);
  return d.add(std::move(m), links);
}

namespace {

void attach_chain(SurgeryDiagram& d, std::size_t parent, const std::vector<Integer>& coeffs) {
  std::size_t prev = parent;
  for (std::size_t depth = 0; depth < coeffs.size(); ++depth) {
    std::vector<Integer> links(d.size(), Integer(0));
    links[prev] = 1;
    SurgeryComponent c;
    c.kind = ComponentKind::chain;
    c.parent = static_cast<int>(parent);
    c.depth = static_cast<int>(depth);
    c.framing = Framing(coeffs[depth]);
    prev = d.add(std::move(c), links);
  }
}

enum class ExpandStyle { meridian_for_unit, chain_always, parallel_meridians };

Rational positive_braid_slope(const SurgeryComponent& c) {
  if (c.framing.is_infinite()) throw DomainError("cannot expand an infinite framing");
  const Rational r = c.framing.value();
  if (r <= 0)
    throw DomainError("surgery slope must be positive, got " + format_rational(r) +
                      " (the integral expansion needs r > 0)");
  return r;
}

SurgeryDiagram expand(const SurgeryDiagram& d, ExpandStyle style) {
  SurgeryDiagram out = d;
  const std::size_t original = d.size();
  for (std::size_t i = 0; i < original; ++i) {
    const SurgeryComponent& c = d[i];
    if (c.kind != ComponentKind::braid) {
      if (!c.framing.is_integral())
        throw DomainError("only braid components may carry rational framings here");
      continue;
    }
    const Rational r = positive_braid_slope(c);
    const Integer n = floor(r);
    const Rational frac = r - Rational(n);

    if (style == ExpandStyle::parallel_meridians) {
      out.set_framing(i, Framing(0L));
      for (Integer j = 0; j < 2 * n; ++j) add_meridian(out, i, Framing(-2L));
      if (frac != 0) attach_chain(out, i, neg_cfrac(Rational(-1 / frac)).coeffs);
      continue;
    }
    if (c.framing.is_integral()) continue;
    out.set_framing(i, Framing(n));
    if (style == ExpandStyle::meridian_for_unit && r.get_num() == 1) {
      add_meridian(out, i, Framing(Integer(-r.get_den())));
      continue;
    }
    attach_chain(out, i, neg_cfrac(Rational(-1 / frac)).coeffs);
  }
  return out;
}

}  // namespace

SurgeryDiagram slam_dunk_expand(const SurgeryDiagram& d) { return expand(d, ExpandStyle::meridian_for_unit); }

SurgeryDiagram chain_expand(const SurgeryDiagram& d) { return expand(d, ExpandStyle::chain_always); }

SurgeryDiagram parallel_meridian_expand(const SurgeryDiagram& d) {
  return expand(d, ExpandStyle::parallel_meridians);
}

SurgeryDiagram slam_dunk_collapse(const SurgeryDiagram& d, std::size_t leaf) {
  if (leaf >= d.size()) throw DomainError("component index out of range");
  const SurgeryComponent& c = d[leaf];
  if (!c.is_unknot() || c.kind == ComponentKind::axis) throw DomainError("slam dunk needs a meridian or chain unknot");
  std::size_t partner = d.size();
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == leaf || d.linking(leaf, j) == 0) continue;
    if (partner != d.size() || abs(d.linking(leaf, j)) != 1)
      throw DomainError("slam dunk needs a leaf linking exactly one component once");
    partner = j;
  }
  if (partner == d.size()) throw DomainError("leaf is split from the rest of the diagram");
  const Framing& pf = d[partner].framing;
  if (!pf.is_integral()) throw DomainError("slam dunk needs an integral framing on the receiving component");

  SurgeryDiagram out = d;
  // n - 1/r with r = p/q is n - q/p; an infinite leaf leaves n unchanged.
  const Framing& lf = c.framing;
  if (lf.p() == 0)
    out.set_framing(partner, Framing::infinity());
  else
    out.set_framing(partner, Framing(Rational(Rational(pf.p()) - make_rational(lf.q(), lf.p()))));
  out.remove(leaf);
  return out;
}

IntMatrix linking_matrix(const SurgeryDiagram& d) {
  const std::size_t n = d.size();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Framing& f = d[i].framing;
    if (!f.is_integral())
      throw NumericError("linking matrix needs integral framings; component " + std::to_string(i) + " is framed " +
                         format_framing(f));
    for (std::size_t j = 0; j < n; ++j) q(i, j) = i == j ? f.p() : d.linking(i, j);
  }
  return q;
}

HomologyReport homology(const IntMatrix& q) {
  HomologyReport h;
  h.det = determinant(q);
  h.h1_order = abs(h.det);
  const SmithForm snf = smith_normal_form(q);
  h.elementary_divisors = snf.elementary_divisors();
  h.free_rank = snf.free_rank;
  h.signature = signature(q);
  h.euler_char = 1 + static_cast<long>(q.rows());
  return h;
}

HomologyReport homology(const SurgeryDiagram& d) { return homology(linking_matrix(d)); }

SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, std::size_t u, std::int64_t t) {
  if (u >= d.size()) throw DomainError("component index out of range");
  if (!d[u].is_unknot()) throw DomainError("Rolfsen twists need an unknotted component");
  if (t == 0) return d;
  const Integer tt(static_cast<long>(t));

  SurgeryDiagram out = d;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (c == u) continue;
    const Integer& lc = d.linking(c, u);
    if (lc == 0) continue;
    const Framing& f = d[c].framing;
    if (!f.is_infinite()) out.set_framing(c, Framing::fraction(f.p() + tt * lc * lc * f.q(), f.q()));
    for (std::size_t e = c + 1; e < d.size(); ++e) {
      if (e == u) continue;
      out.set_linking(c, e, d.linking(c, e) + tt * lc * d.linking(e, u));
    }
  }
  // r = p/q: 1/r + t = (q + t p)/p.
  const Framing& fu = d[u].framing;
  const Integer den = fu.q() + tt * fu.p();
  if (d[u].kind == ComponentKind::axis) out.set_braid(delta_squared_times(d.braid(), t));
  if (den == 0) {
    out.remove(u);
  } else {
    out.set_framing(u, Framing::fraction(fu.p(), den));
  }
  return out;
}

LSpaceFamily lspace_family_diagram(const BraidWord& beta, std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw DomainError("L-space family needs k, l >= 1");
  const ComponentPartition parts = permutation(beta);
  if (!parts.is_knot()) throw DomainError("L-space family needs a braid whose closure is a knot");

  auto build = [&](std::int64_t ell) {
    SurgeryDiagram d(beta, parts);
    SurgeryComponent v;
    v.kind = ComponentKind::meridian;
    v.parent = 1;
    v.framing = Framing(static_cast<long>(ell));
    d.add(std::move(v), {});
    SurgeryComponent axis;
    axis.kind = ComponentKind::axis;
    axis.framing = Framing(0L);
    d.add(std::move(axis), {Integer(1)});
    SurgeryComponent knot;
    knot.kind = ComponentKind::braid;
    knot.braid_index = 0;
    knot.framing = Framing(static_cast<long>(k));
    d.add(std::move(knot), {Integer(0), Integer(beta.strands())});
    return d;
  };

  LSpaceFamily out{build(l), {}, 0, 0, 0, false};
  out.homology = homology(out.diagram);
  out.order = out.homology.h1_order;
  out.next_order = homology(build(l + 1)).h1_order;
  SurgeryDiagram base = out.diagram;
  base.remove(0);
  out.base_order = homology(base).h1_order;
  out.additivity_check = out.base_order + out.order == out.next_order;
  return out;
}

}  // namespace csurg
