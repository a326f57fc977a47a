#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "springer2/interval.hpp"
#include "springer2/orbit.hpp"
#include "springer2/symbol.hpp"

namespace springer2 {

/// c_1 <= c_2 <= ... from a_1 <= b_1 <= a_2 <= ...; empty if not interleaved.
std::vector<int> merged_sequence(const Symbol& x);

/// The distinguished symbol of an orbit, at the length fixed by its padding
/// (one extra zero pair = one shift). Throws OrbitError on invalid data.
Symbol rho(const OrbitDatum& x);

/// Canonically padded orbit with rho(orbit) in the class of `sym`. Throws
/// SymbolError if `sym` is not distinguished in the case's space.
OrbitDatum rho_inverse(const Symbol& sym, LieCase c);

/// Identification of component group classes with intervals of rho(x).
struct ClassIntervalMap {
  IntervalDecomposition dec;
  /// Per surviving class (in basis order): index into dec.proper, or -1.
  std::vector<int> proper_of_class;
  /// Classes mapped consistently, killed classes landing on initial
  /// intervals (or the fixed one), and every character interval hit once.
  bool consistent = false;
  std::vector<std::string> problems;
};

ClassIntervalMap class_interval_map(const OrbitDatum& x);

/// Character of A(x) (mask over the surviving-class basis) to a reduced
/// interval mask of rho(x). Throws OrbitError on a bad mask.
std::uint64_t character_to_intervals(const ClassIntervalMap& map, const ComponentGroup& g,
                                     std::uint64_t character);

/// act(rho(x), F) for a reduced interval mask F, at the length of rho(x).
Symbol correspondence(const OrbitDatum& x, std::uint64_t interval_mask);

struct CorrespondenceEntry {
  OrbitDatum orbit;
  int group_rank = 0;
  std::uint64_t character = 0;      // over surviving classes
  std::uint64_t interval_mask = 0;  // over proper intervals of rho(orbit)
  Symbol symbol;                    // normalized
  Bipartition bipartition;          // unordered cases: the representative
  bool unordered = false;
  bool degenerate = false;
};

std::string bipartition_string(const CorrespondenceEntry& e);

/// Every (orbit, character) pair, orbits in grammar order, characters increasing.
std::vector<CorrespondenceEntry> table(LieCase c, int n);

struct BijectionReport {
  LieCase lie = LieCase::sp;
  int n = 0;
  std::size_t entries = 0;
  std::size_t space_size = 0;
  std::size_t weighted_orbits = 0;  // sum over orbits of 2^dim V_rho(x)
  bool zero_anchor = false;
  bool regular_anchor = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

BijectionReport verify_bijection(LieCase c, int n);

/// Sign and trivial characters as bipartitions: (0,(1^n)) and ((n),0).
Bipartition sign_bipartition(int n);
Bipartition trivial_bipartition(int n);

}  // namespace springer2
