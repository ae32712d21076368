#pragma once

#include <cstdint>
#include <vector>

#include "csurg/braid.hpp"
#include "csurg/cfrac.hpp"
#include "csurg/matrix.hpp"
#include "csurg/surgery.hpp"

namespace csurg {

/// Classical invariants of a Legendrian front. A positive stabilization
/// raises rot by one, a negative one lowers it by one; both lower tb by one
/// and add two cusps.
struct LegendrianComponent {
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  std::int64_t cusps = 0;
  std::int64_t stab_pos = 0;
  std::int64_t stab_neg = 0;

  friend bool operator==(const LegendrianComponent&, const LegendrianComponent&) = default;
};

/// Front of a braid closure knot: tb = c+ - 2c- - m, rot = c- mod 2,
/// cusps = 2(m + c-). Throws DomainError for a multi-component closure.
LegendrianComponent front_stats(const BraidWord& beta);

/// Per component of the closure. Each negative crossing between two
/// components puts its zigzag on the lower-numbered one, so
/// tb_i = c_{i,+} - 2c_{i,-} - m_i - (charged crossings) which is at least the
/// bound c_{i,+} - 2c_{i,-} - d_{i,-} - m_i.
std::vector<LegendrianComponent> link_front_stats(const BraidWord& beta);

/// Stabilizes to exactly (target_tb, target_rot). Throws HypothesisError when
/// the target is out of range or has the wrong parity.
LegendrianComponent stabilize_to(const LegendrianComponent& c, std::int64_t target_tb, std::int64_t target_rot);

/// Stabilizes to target_tb choosing the reachable rot closest to 0 (ties go
/// to the positive value).
LegendrianComponent stabilize_to_tb(const LegendrianComponent& c, std::int64_t target_tb);

/// Legendrian unknots with tb = f + 1, rot = f+2, f+4, ..., -f-2 (ascending).
/// Throws DomainError for f > -2.
std::vector<LegendrianComponent> unknot_menu(std::int64_t f);

struct WeinsteinDiagram {
  SurgeryDiagram base;
  std::vector<LegendrianComponent> legendrian;  ///< aligned with base components
  std::vector<std::int64_t> rotation_tuple;     ///< rot on the unknots, diagram order
};

/// Lazy product over the unknot menus of slam_dunk_expand(rational_surgery).
/// Index order is lexicographic in the rotation tuple, first unknot most
/// significant.
class WeinsteinEnumeration {
 public:
  WeinsteinEnumeration(const BraidWord& beta, const SlopeVector& v);

  const Integer& count() const { return count_; }
  const SurgeryDiagram& base() const { return base_; }
  const std::vector<std::size_t>& unknots() const { return unknots_; }
  /// Menu size |f + 1| per unknot.
  const std::vector<std::int64_t>& menu_sizes() const { return menu_sizes_; }

  WeinsteinDiagram at(const Integer& index) const;
  WeinsteinDiagram at(std::uint64_t index) const { return at(Integer(static_cast<unsigned long>(index))); }

  /// Index of the diagram whose unknot i uses menu entry k_i (1-based, so
  /// rot_i = f_i + 2 k_i). Throws DomainError when some k_i is out of range.
  Integer index_of_tuple(const std::vector<std::int64_t>& k) const;

 private:
  SurgeryDiagram base_;
  std::vector<LegendrianComponent> braid_fronts_;
  std::vector<std::size_t> unknots_;
  std::vector<std::int64_t> menu_sizes_;
  Integer count_;
};

/// Checks the per-component hypothesis and builds the enumeration. Throws
/// HypothesisError naming the failing component, DomainError for a
/// nonpositive slope.
WeinsteinEnumeration enumerate_weinstein(const BraidWord& beta, const SlopeVector& v);

/// Every framing equals tb - 1.
bool validate_weinstein(const WeinsteinDiagram& w);

/// Rotation numbers in component order.
std::vector<std::int64_t> c1_pairing(const WeinsteinDiagram& w);

struct ThetaReport {
  Rational c1_squared;
  long chi = 0;
  long sigma = 0;
  Rational theta;
  bool complete_invariant = false;  ///< |H1| = 1

  friend bool operator==(const ThetaReport&, const ThetaReport&) = default;
};

/// Data shared by every diagram over one base: Q^{-1} and its homology.
struct ThetaContext {
  RationalMatrix q_inverse;
  HomologyReport homology;
};

/// Throws NumericError when the linking matrix is singular.
ThetaContext theta_context(const SurgeryDiagram& base);

ThetaReport theta(const WeinsteinDiagram& w);
ThetaReport theta(const WeinsteinDiagram& w, const ThetaContext& ctx);
ThetaReport theta(const std::vector<std::int64_t>& rot, const ThetaContext& ctx);

/// Number of distinct rotation tuples.
std::size_t isotopy_class_count(const std::vector<WeinsteinDiagram>& ws);

/// ceil(count / c); throws DomainError for c < 1.
Integer contactomorphism_lower_bound(const Integer& count, const Integer& c);

}  // namespace csurg
