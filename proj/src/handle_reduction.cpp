// Dehornoy handle reduction.
//
// A sigma_i-handle is a factor s_i^e u s_i^{-e} where u only uses generators
// s_j with j > i. Reducing it deletes the two ends and rewrites every
// s_{i+1}^d in u as s_{i+1}^{-e} s_i^d s_{i+1}^e. Handles are always taken
// with the leftmost right end, which guarantees the handle contains no nested
// s_{i+1}-handle (it is "permitted"). The process ends at a handle-free word,
// which is empty iff the braid is trivial, and otherwise sigma-positive or
// sigma-negative in its lowest generator.

#include <algorithm>
#include <cstdlib>

#include "csurg/braid.hpp"
#include "csurg/errors.hpp"

namespace csurg {

namespace {

using Signed = std::vector<int>;

Signed to_signed(const BraidWord& w) {
  Signed out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) out.push_back(l.sign * l.generator);
  return out;
}

BraidWord from_signed(int strands, const Signed& s) {
  std::vector<Letter> letters;
  letters.reserve(s.size());
  for (int x : s) letters.push_back({std::abs(x), x > 0 ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

void free_reduce_in_place(Signed& w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == -w[i])
      --top;
    else
      w[top++] = w[i];
  }
  w.resize(top);
}

struct Handle {
  std::size_t left;
  std::size_t right;
};

// Finds the handle whose right end is leftmost. `last_le[i]` is the last
// position seen so far holding a letter of index <= i.
bool find_handle(const Signed& w, int strands, std::vector<long>& last_le, Handle& out) {
  std::fill(last_le.begin(), last_le.end(), -1L);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int g = std::abs(w[j]);
    const long p = last_le[g];
    if (p >= 0 && std::abs(w[p]) == g && (w[p] > 0) != (w[j] > 0)) {
      out = {static_cast<std::size_t>(p), j};
      return true;
    }
    for (int i = g; i < strands; ++i) last_le[i] = static_cast<long>(j);
  }
  return false;
}

void reduce_handle(Signed& w, const Handle& h) {
  const int i = std::abs(w[h.left]);
  const int e = w[h.left] > 0 ? 1 : -1;
  Signed out;
  out.reserve(w.size() + 2 * (h.right - h.left));
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(h.left));
  for (std::size_t q = h.left + 1; q < h.right; ++q) {
    const int x = w[q];
    if (std::abs(x) == i + 1) {
      const int d = x > 0 ? 1 : -1;
      out.push_back(-e * (i + 1));
      out.push_back(d * i);
      out.push_back(e * (i + 1));
    } else {
      out.push_back(x);
    }
  }
  out.insert(out.end(), w.begin() + static_cast<long>(h.right) + 1, w.end());
  w.swap(out);
}

}  // namespace

std::uint64_t handle_reduction_budget(std::size_t length, const HandleReductionOptions& options) {
  const std::size_t shift = std::min<std::size_t>(length, 40);
  const std::uint64_t exponential = std::uint64_t{16} << shift;
  return std::min(exponential, options.step_cap);
}

BraidWord handle_reduce(const BraidWord& w, const HandleReductionOptions& options) {
  Signed s = to_signed(w);
  free_reduce_in_place(s);
  const std::uint64_t budget = handle_reduction_budget(w.length(), options);
  std::vector<long> last_le(static_cast<std::size_t>(w.strands()), -1L);
  std::uint64_t steps = 0;
  Handle h{};
  while (find_handle(s, w.strands(), last_le, h)) {
    if (++steps > budget)
      throw BudgetExceeded("handle reduction exceeded its budget of " + std::to_string(budget) +
                           " steps on a word of length " + std::to_string(w.length()));
    reduce_handle(s, h);
    free_reduce_in_place(s);
  }
  return from_signed(w.strands(), s);
}

bool is_trivial(const BraidWord& w, const HandleReductionOptions& options) {
  return handle_reduce(w, options).empty();
}

namespace {

// +1, -1, or 0 for the identity; input must be handle free.
int main_generator_sign(const BraidWord& reduced) {
  if (reduced.empty()) return 0;
  int lowest = reduced.strands();
  int sign = 0;
  for (const Letter& l : reduced.letters()) {
    if (l.generator < lowest) {
      lowest = l.generator;
      sign = l.sign;
    }
  }
  return sign;
}

}  // namespace

bool is_sigma_positive(const BraidWord& w, const HandleReductionOptions& options) {
  return main_generator_sign(handle_reduce(w, options)) > 0;
}

bool is_sigma_negative(const BraidWord& w, const HandleReductionOptions& options) {
  return main_generator_sign(handle_reduce(w, options)) < 0;
}

bool dehornoy_floor_at_least(const BraidWord& w, std::int64_t d, const HandleReductionOptions& options) {
  if (d < 0) throw DomainError("dehornoy floor probe needs d >= 0");
  if (d == 0) return true;
  const BraidWord shift = power(garside(w.strands()), -2 * d);
  if (!is_sigma_negative(compose(w, shift), options)) return true;
  return !is_sigma_negative(compose(inverse(w), shift), options);
}

}  // namespace csurg
