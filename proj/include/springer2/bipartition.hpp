#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace springer2 {

/// Integer partition stored as a nonincreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; zeros are dropped. Throws on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th largest part (0-based); 0 past the end.
  int part(int i) const;

  /// Parts in ascending order, left-padded with zeros to `len` entries.
  std::vector<int> ascending(int len) const;

  /// Number of removable boxes, i.e. distinct part values.
  int removable_boxes() const;

  /// Partitions obtained by removing one removable box, largest row first.
  std::vector<Partition> remove_box() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// p(n) by the standard dynamic program; independent of `partitions`.
std::int64_t partition_count(int n);

struct Bipartition {
  Partition mu;
  Partition nu;

  int size() const { return mu.size() + nu.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Class {mu, nu} under swap. The stored representative is the
/// lexicographically smaller of (mu, nu) and (nu, mu).
class UnorderedBipartition {
 public:
  UnorderedBipartition() = default;
  UnorderedBipartition(Partition a, Partition b);
  explicit UnorderedBipartition(const Bipartition& bp) : UnorderedBipartition(bp.mu, bp.nu) {}

  const Bipartition& representative() const { return rep_; }
  int size() const { return rep_.size(); }
  bool degenerate() const { return rep_.mu == rep_.nu; }

  friend bool operator==(const UnorderedBipartition&, const UnorderedBipartition&) = default;
  friend auto operator<=>(const UnorderedBipartition&, const UnorderedBipartition&) = default;

 private:
  Bipartition rep_;
};

/// Ordered bipartitions of n: |mu| runs from n down to 0, then the
/// partitions of each side in `partitions` order.
std::vector<Bipartition> enumerate_bipartitions(int n);
std::vector<UnorderedBipartition> enumerate_unordered_bipartitions(int n);

/// Box-removal restriction W_n -> W_{n-1}. Throws std::invalid_argument when n = 0.
std::vector<Bipartition> branch(const Bipartition& bp);
/// Image of the ordered branching under the swap quotient, with multiplicity.
std::vector<UnorderedBipartition> branch(const UnorderedBipartition& ubp);

/// Componentwise constraints used by the orbit-counting oracles.
struct Constraint {
  enum class Kind { all, nu_le_mu_plus, nu_shifted_le_mu };
  Kind kind = Kind::all;
  int k = 0;

  static Constraint all() { return {Kind::all, 0}; }
  static Constraint nu_le_mu_plus(int k) { return {Kind::nu_le_mu_plus, k}; }
  static Constraint nu_shifted_le_mu() { return {Kind::nu_shifted_le_mu, 0}; }
};

bool satisfies(const Bipartition& bp, Constraint c);
std::int64_t count_constrained(int n, Constraint c);

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& bp);
std::string to_string(const UnorderedBipartition& ubp);

}  // namespace springer2
