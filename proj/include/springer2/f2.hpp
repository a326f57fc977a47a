#pragma once

#include <cstdint>
#include <vector>

namespace springer2::f2 {

/// Vectors over F2 of dimension <= 64, bit k = coordinate k.
using Vec = std::uint64_t;

inline int parity(Vec v) { return __builtin_popcountll(v) & 1; }
inline Vec full(int dim) { return dim >= 64 ? ~Vec{0} : (Vec{1} << dim) - 1; }

/// Subspace kept as an echelon basis (distinct leading bits).
class Subspace {
 public:
  /// Adds v to the span; returns false if it was already contained.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(Vec v) const { return reduce(v) == 0; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// All 2^dim elements, increasing.
  std::vector<Vec> elements() const;

 private:
  std::vector<Vec> basis_;
};

Subspace span(const std::vector<Vec>& vs);

/// Kernel of the map F2^k -> F2^*, e_j -> images[j], as a basis of masks over j.
std::vector<Vec> kernel(const std::vector<Vec>& images);

/// Image of a subspace of F2^k under e_j -> images[j].
Subspace image(const std::vector<Vec>& source_vectors, const std::vector<Vec>& images);

/// Apply the linear map e_j -> images[j] to v.
Vec apply(Vec v, const std::vector<Vec>& images);

/// Characters of F2^dim trivial on H, as masks (pairing = parity of AND).
std::vector<Vec> annihilator(const Subspace& h, int dim);

}  // namespace springer2::f2
