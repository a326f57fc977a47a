#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "springer2/symbol.hpp"

namespace springer2 {

struct Interval {
  std::vector<int> elements;
  bool initial = false;
};

/// Intervals of S = (A u B) \ (A n B) for one representative. Proper
/// intervals do not depend on the representative; in spaces with s = 0 a
/// shift only translates S.
struct IntervalDecomposition {
  std::vector<int> S;
  std::vector<Interval> intervals;  // ordered by smallest element
  std::vector<int> proper;          // indices into `intervals`
  /// Unordered spaces: index into `proper` of the interval containing max(S),
  /// which character representatives never contain. -1 otherwise.
  int fixed = -1;
  bool unordered = false;

  /// Index of the interval containing v, or -1 if v is not in S.
  int interval_of(int v) const;
  /// dim over F2 of the character space.
  int dimension() const;
  /// Characters as masks over `proper`, all 2^dimension of them, increasing.
  std::vector<std::uint64_t> characters() const;
  /// Reduces a mask to its representative (unordered: bit `fixed` cleared).
  std::uint64_t reduce(std::uint64_t mask) const;
};

IntervalDecomposition decompose(const Symbol& x);

/// Swaps A/B membership inside each proper interval selected by `mask`.
/// The result may change d when the swapped intervals are unbalanced; in
/// unordered spaces it is oriented so that d >= 0. Returned normalized.
Symbol act(const Symbol& x, std::uint64_t mask);
Symbol act(const Symbol& x, const IntervalDecomposition& dec, std::uint64_t mask);

/// The full orbit under the action, one normalized symbol per character.
std::vector<Symbol> similarity_class(const Symbol& x);

struct DistinguishedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The unique distinguished element of the class; throws DistinguishedError
/// when there is none or more than one.
Symbol distinguished_of_class(const Symbol& x);

}  // namespace springer2
