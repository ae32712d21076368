#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// One Artin generator sigma_g^{+-1}. Generators are 1-based.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators of B_m. The empty word is the identity.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Number of +1 letters (c_+) and -1 letters (c_-).
  std::int64_t positive_count() const;
  std::int64_t negative_count() const;
  std::int64_t exponent_sum() const { return positive_count() - negative_count(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Parses `B<m> s<k> s<k>^<e> ...`. Exponents expand into repeated letters.
BraidWord parse_braid(std::string_view text);

/// Canonical text form; maximal runs of one letter collapse into `s<g>^<e>`.
/// `parse_braid(format_braid(w)) == w`.
std::string format_braid(const BraidWord& w);

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs);
BraidWord inverse(const BraidWord& w);
/// k-fold repetition; negative k repeats the inverse.
BraidWord power(const BraidWord& w, std::int64_t k);

/// The Garside half twist (s1 s2 ... s_{m-1})(s1 ... s_{m-2}) ... (s1 s2)(s1).
BraidWord garside(int strands);

/// Delta^{2l} * beta.
BraidWord delta_squared_times(const BraidWord& beta, std::int64_t l);

/// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// sigma_1^{2k+1} sigma_2^{-1} in B_3.
BraidWord example_braid(std::int64_t k);

// ---------------------------------------------------------------------------
// Permutation and closure components
// ---------------------------------------------------------------------------

/// Letters act left to right on strand positions. Strand s is named by its
/// starting position; `permutation[s]` is the position where it ends. All
/// indices are 0-based here and 1-based in serialized output.
struct ComponentPartition {
  std::vector<int> permutation;
  std::vector<int> component_of;  ///< strand -> component index
  std::vector<int> cycle_type;    ///< m_i, in component order

  int component_count() const { return static_cast<int>(cycle_type.size()); }
  bool is_knot() const { return cycle_type.size() == 1; }
};

/// Components are the cycles of the strand permutation, numbered by their
/// smallest strand.
ComponentPartition permutation(const BraidWord& w);

/// Crossing counts split by closure component. Component-pair matrices are
/// dense `l x l`, zero on the diagonal.
struct CrossingStats {
  std::int64_t c_plus = 0;
  std::int64_t c_minus = 0;
  std::vector<std::int64_t> component_plus;   ///< c_{i,+}
  std::vector<std::int64_t> component_minus;  ///< c_{i,-}
  std::vector<std::vector<std::int64_t>> inter_crossings;  ///< unsigned count
  std::vector<std::vector<std::int64_t>> inter_signed;     ///< signed sum
  std::vector<std::vector<std::int64_t>> inter_negative;   ///< d_{i,j,-}
  std::vector<std::int64_t> d_minus;                       ///< d_{i,-}
  std::vector<std::vector<std::int64_t>> linking;          ///< lk(i,j)
  std::vector<std::int64_t> axis_linking;                  ///< lk(axis, i) = m_i
};

CrossingStats crossing_stats(const BraidWord& w);
CrossingStats crossing_stats(const BraidWord& w, const ComponentPartition& parts);

// ---------------------------------------------------------------------------
// Word problem
// ---------------------------------------------------------------------------

struct HandleReductionOptions {
  /// Hard ceiling on reduction steps regardless of word length.
  std::uint64_t step_cap = 20'000'000;
};

/// Step budget for a word of the given length: exponential in the length,
/// clipped to the cap.
std::uint64_t handle_reduction_budget(std::size_t length, const HandleReductionOptions& options);

/// Dehornoy handle reduction. The result is handle free and represents the
/// same braid; throws BudgetExceeded if the step budget runs out.
BraidWord handle_reduce(const BraidWord& w, const HandleReductionOptions& options = {});

bool is_trivial(const BraidWord& w, const HandleReductionOptions& options = {});

/// True iff w is sigma-positive: its reduced form is nonempty and the
/// lowest-index generator occurs only with exponent +1.
bool is_sigma_positive(const BraidWord& w, const HandleReductionOptions& options = {});
bool is_sigma_negative(const BraidWord& w, const HandleReductionOptions& options = {});

/// Lower-bound probe for the Dehornoy floor: true iff w * Delta^{-2d} or
/// w^{-1} * Delta^{-2d} is not sigma-negative. d == 0 is always true.
bool dehornoy_floor_at_least(const BraidWord& w, std::int64_t d,
                             const HandleReductionOptions& options = {});

// ---------------------------------------------------------------------------
// Hypothesis checks
// ---------------------------------------------------------------------------

enum class Hyperbolicity { asserted, unknown };

struct HypothesisReport {
  bool is_knot = false;
  bool cond_tb = false;      ///< c_+ - 2c_- - m >= 1
  bool cond_parity = false;  ///< c_+ + c_- == m + 1 (mod 2)
  std::vector<bool> per_component_cond;  ///< c_{i,+} - 2c_{i,-} - d_{i,-} - m_i >= 1
  std::vector<std::int64_t> per_component_margin;  ///< left-hand sides of the above
  std::int64_t tb_margin = 0;                      ///< c_+ - 2c_- - m
  Hyperbolicity hyperbolicity = Hyperbolicity::unknown;

  bool all_components_pass() const;
};

HypothesisReport check_hypothesis(const BraidWord& w, bool hyperbolic_asserted);

/// m odd and the square of the strand permutation is an m-cycle.
bool square_knot_recipe(const BraidWord& w);

}  // namespace csurg
