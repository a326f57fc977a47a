#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "springer2/f2.hpp"
#include "springer2/orbit.hpp"
#include "springer2/symbol.hpp"

namespace springer2 {

/// Restriction to rank n-1 on symbols: every admissible single-entry
/// decrement of the canonical representative, normalized, in order of the
/// decremented entry (A row first).
std::vector<Symbol> symbol_branch(const Symbol& x, LieCase c);

/// Generator classes of source and target compared index by index, both
/// taken at the padded length of the source.
struct SubgroupTriple {
  std::vector<int> common;               // indices generating A_P
  int rank = 0;                          // free rank of the source group
  int rank_prime = 0;                    // free rank of the target group
  std::vector<f2::Vec> phi;              // image of a_j in A(x), j in common
  std::vector<f2::Vec> psi;              // image of a'_j in A'(x')
  f2::Subspace a_p;                      // in F2^rank
  f2::Subspace a_p_prime;                // psi(ker phi), in F2^rank_prime
  bool even_subgroup = false;            // eo: groups are tilde groups

  /// log2 |A(x)/A_P| and log2 |A_P'|, at the tilde level for eo.
  int index_log2() const { return rank - a_p.dim(); }
  int a_p_prime_log2() const { return a_p_prime.dim(); }
  /// h(a_j) modulo A_P'.
  f2::Vec h(std::size_t k) const { return a_p_prime.reduce(psi[k]); }
};

struct DegenerationRecord {
  OrbitDatum source;  // rank n, as padded for the computation
  OrbitDatum target;  // rank n-1, canonical padding
  OrbitDatum target_padded;  // same length as source
  std::string clause;        // SP-a, SP-b, O-a, O-b, SPD, OOD-a, OOD-b
  int i = 0;                 // index in the clause
  int dim_y = 0;
  SubgroupTriple triple;
};

/// Every minimal degeneration of x to rank n-1 allowed by the clauses of the case.
std::vector<DegenerationRecord> orbit_degenerations(const OrbitDatum& x);

SubgroupTriple subgroup_triple(const OrbitDatum& source, const OrbitDatum& target_padded);

/// Pairs of characters (masks over surviving classes; eo reduced) whose
/// product is trivial on H = {(a,b): a in A_P, b A_P' = h(a)}.
using CharacterPairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
CharacterPairs epsilon_pairs(const DegenerationRecord& r);
/// Looks the pair up among orbit_degenerations(source); throws OrbitError if absent.
CharacterPairs epsilon_pairs(const OrbitDatum& source, const OrbitDatum& target);

struct RestrictionReport {
  LieCase lie = LieCase::sp;
  int n = 0;
  std::size_t sources = 0;
  std::size_t degenerations = 0;
  std::size_t symbols_branched = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// (i) listed degenerations agree with branching of distinguished symbols,
/// (ii) epsilon pairs agree with branching of all (F, F') translates,
/// (iii) symbol branching matches box removal on bipartitions.
RestrictionReport check_restriction(LieCase c, int n);

/// Only check (iii), over the whole rank-n space.
std::vector<std::string> check_branch_bipartitions(LieCase c, int n);

}  // namespace springer2
