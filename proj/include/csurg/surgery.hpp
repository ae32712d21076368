#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csurg/braid.hpp"
#include "csurg/cfrac.hpp"
#include "csurg/matrix.hpp"
#include "csurg/rational.hpp"

namespace csurg {

/// Surgery coefficient p/q, including the empty filling 1/0.
/// Stored normalized: gcd(p, q) = 1, q >= 0, and infinity is exactly 1/0.
class Framing {
 public:
  Framing() = default;
  Framing(const Rational& r);  // NOLINT(google-explicit-constructor)
  Framing(const Integer& n);   // NOLINT(google-explicit-constructor)
  Framing(long n) : Framing(Integer(n)) {}  // NOLINT(google-explicit-constructor)
  static Framing fraction(const Integer& p, const Integer& q);
  static Framing infinity();

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }
  /// Throws NumericError for infinity.
  Rational value() const;

  friend bool operator==(const Framing&, const Framing&) = default;

 private:
  Integer p_ = 0;
  Integer q_ = 1;
};

/// `p/q` or `inf`.
std::string format_framing(const Framing& f);

enum class ComponentKind { braid, meridian, chain, axis };

const char* to_string(ComponentKind kind);

struct SurgeryComponent {
  ComponentKind kind = ComponentKind::braid;
  int braid_index = -1;  ///< closure component, braid kind only
  int parent = -1;       ///< diagram index of the parent, meridian / chain only
  int depth = 0;         ///< position along a chain, 0 next to the parent
  Framing framing;

  bool is_unknot() const { return kind != ComponentKind::braid; }
};

/// A framed link in S^3 built from a braid closure and auxiliary unknots.
/// Off-diagonal linking numbers are stored explicitly so Kirby moves can
/// update them; they start out as the closure's pairwise linking matrix plus
/// the combinatorial adjacency of meridians, chains, and the axis.
class SurgeryDiagram {
 public:
  SurgeryDiagram(BraidWord braid, ComponentPartition parts);

  const BraidWord& braid() const { return braid_; }
  const ComponentPartition& partition() const { return parts_; }
  const std::vector<SurgeryComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  const SurgeryComponent& operator[](std::size_t i) const { return components_[i]; }

  /// lk(i, j) for i != j; 0 on the diagonal.
  const Integer& linking(std::size_t i, std::size_t j) const { return lk_(i, j); }
  bool is_integral() const;

  /// Adds a component and returns its index. `links` lists lk with every
  /// existing component.
  std::size_t add(SurgeryComponent c, const std::vector<Integer>& links);
  void set_framing(std::size_t i, Framing f) { components_.at(i).framing = std::move(f); }
  void set_linking(std::size_t i, std::size_t j, const Integer& v);
  void set_braid(BraidWord b) { braid_ = std::move(b); }
  /// Removes component i, renumbering the rest. Children lose their parent.
  void remove(std::size_t i);

 private:
  BraidWord braid_;
  ComponentPartition parts_;
  std::vector<SurgeryComponent> components_;
  IntMatrix lk_;
};

struct HomologyReport {
  Integer det;
  Integer h1_order;  ///< |det|, or 0 when H1 is infinite
  std::vector<Integer> elementary_divisors;
  std::size_t free_rank = 0;
  long signature = 0;
  long euler_char = 0;

  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// One braid-component per closure component, framed by the slopes in
/// component order.
SurgeryDiagram rational_surgery(const BraidWord& beta, const SlopeVector& v);

/// Adds the braid axis, linking closure component i exactly m_i times.
std::size_t add_axis(SurgeryDiagram& d, Framing framing);

/// Adds a meridian of component `of` (linking it once).
std::size_t add_meridian(SurgeryDiagram& d, std::size_t of, Framing framing);

/// Integral presentation: a braid component framed r = n + p/q (n = floor r)
/// becomes n-framed with a chain of unknots framed neg_cfrac(-q/p) hanging
/// off it; integral r gets no chain. r = 1/n uses one meridian framed -n.
SurgeryDiagram slam_dunk_expand(const SurgeryDiagram& d);

/// Same as slam_dunk_expand but 1/n also becomes a (one-element) chain.
SurgeryDiagram chain_expand(const SurgeryDiagram& d);

/// The presentation with a 0-framed braid component, 2n parallel meridians
/// framed -2 and a chain for -q/p. Its determinant is 4^n (nq + p), so it
/// presents a different manifold than slope n + p/q when n > 0; kept for
/// comparison.
SurgeryDiagram parallel_meridian_expand(const SurgeryDiagram& d);

/// Inverse slam dunk: removes a meridian/chain leaf framed r and reframes its
/// parent f to f - 1/r.
SurgeryDiagram slam_dunk_collapse(const SurgeryDiagram& d, std::size_t leaf);

/// Framings on the diagonal, linking numbers off it. Throws NumericError for a
/// non-integral diagram.
IntMatrix linking_matrix(const SurgeryDiagram& d);

HomologyReport homology(const SurgeryDiagram& d);
HomologyReport homology(const IntMatrix& q);

/// t Rolfsen twists about the unknot u: 1/r_u -> 1/r_u + t, other framings
/// gain t lk(c,u)^2, and pairwise linking gains t lk(c,u) lk(c',u). A
/// component whose framing becomes infinite is deleted. Twisting the axis
/// replaces the braid by Delta^{2t} beta.
SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, std::size_t u, std::int64_t t);

struct LSpaceFamily {
  SurgeryDiagram diagram;  ///< V(l) U U(0) U beta-hat(k), in that order
  HomologyReport homology;
  Integer base_order;      ///< |H1| with V deleted
  Integer order;           ///< |H1| at l
  Integer next_order;      ///< |H1| at l + 1
  bool additivity_check = false;
};

LSpaceFamily lspace_family_diagram(const BraidWord& beta, std::int64_t k, std::int64_t l);

}  // namespace csurg
