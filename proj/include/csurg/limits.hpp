#pragma once

#include <cstdint>
#include <vector>

#include "csurg/braid.hpp"
#include "csurg/cfrac.hpp"
#include "csurg/matrix.hpp"

namespace csurg {

enum class TailRule { ones, max, periodic };

/// Pattern entry standing for "the largest menu value |a_i + 1| at this index".
inline constexpr std::int64_t kMenuMax = 0;

/// An infinite tuple k_0, k_1, ... with 1 <= k_i <= |a_i + 1|: a finite prefix
/// followed by a finitely described tail.
struct SignTuple {
  CoeffStream coeffs;
  std::vector<std::int64_t> prefix;
  TailRule tail = TailRule::ones;
  std::vector<std::int64_t> pattern;  ///< periodic tail; kMenuMax allowed

  /// |a_i + 1|.
  std::int64_t menu_size(std::size_t i) const;
  /// k_i, resolving the tail rule.
  std::int64_t at(std::size_t i) const;
  /// k_0 .. k_n.
  std::vector<std::int64_t> truncate(std::size_t n) const;
};

struct Block {
  std::int64_t length = 0;     ///< |a_i + 2|
  std::int64_t positives = 0;  ///< k_i - 1

  friend bool operator==(const Block&, const Block&) = default;
};

/// First n + 1 blocks. Throws DomainError if some k_i is outside its menu.
std::vector<Block> block_decomposition(const SignTuple& k, std::size_t n);

/// (+)^p (-)^{L-p} per block, as +1 / -1.
std::vector<std::vector<int>> shuffle_normal_form(const std::vector<Block>& blocks);

/// Shuffle class of one sign sequence: its length and number of +1s.
Block block_class(const std::vector<int>& signs);

/// Number of shuffle classes of a block of length L.
inline std::int64_t block_class_count(std::int64_t length) { return length + 1; }

/// Each stabilization gives one basic slice of the same sign.
std::vector<int> stabilization_to_slices(const std::vector<int>& stab_signs);

/// [[0, -1], [1, -a]].
IntMatrix gluing_matrix(const Integer& a);

/// Slope read off phi_0 phi_1 ... phi_n applied to the base direction, scaled
/// so the result is the convergent [a_0, ..., a_n].
Rational end_slope(const CoeffStream& coeffs, std::size_t n);

enum class Sign { plus, minus, pm };

const char* to_string(Sign s);

/// minus when k_i = 1 for all large i, else plus when k_i = |a_i + 1| for all
/// large i, else pm. Generated streams are assumed to have infinitely many
/// a_i <= -3; a periodic tail mixing values on a generated stream throws
/// UndecidableError. Finite streams throw DomainError.
Sign sign_of(const SignTuple& k);

/// Same coefficient stream and same sign. Throws UndecidableError when the
/// streams cannot be compared.
bool properly_isotopic(const SignTuple& k, const SignTuple& k2);

/// The level-n truncation k(n) names a valid diagram in the enumeration for
/// the convergent slope, with menu sizes matching block class counts.
bool truncation_consistency(const BraidWord& beta, const SignTuple& k, std::size_t n);

}  // namespace csurg
