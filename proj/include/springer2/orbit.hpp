#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer2/bipartition.hpp"
#include "springer2/symbol.hpp"

namespace springer2 {

/// sp(2n), o(2n+1), o(2n), sp(2n)*, o(2n+1)*.
enum class LieCase { sp, oo, eo, spd, ood };

const std::vector<LieCase>& all_cases();
std::string case_name(LieCase c);
LieCase parse_case(const std::string& s);  // throws std::invalid_argument

/// Symbol space attached to the case at rank n.
SymbolSpace case_space(LieCase c, int n);
/// Counting constraint on bipartitions matching the number of orbits.
Constraint case_constraint(LieCase c);
/// Odd padded length with a leading zero (sp, oo, spd) versus even length.
bool odd_length(LieCase c);

struct OrbitDatum {
  LieCase lie = LieCase::sp;
  int n = 0;
  std::vector<int> lambda;   // ascending, zero padded
  std::map<int, int> chi;    // positive part value -> chi
  int m = 0;                 // defect, o(2n+1)* only

  int length() const { return static_cast<int>(lambda.size()); }
  /// lambda_i for 1-based i; 0 for i <= 0.
  int part(int i) const { return i >= 1 && i <= length() ? lambda[static_cast<std::size_t>(i - 1)] : 0; }
  /// chi(v); 0 for v = 0 or unknown values.
  int chi_of(int v) const;
  int chi_at(int i) const { return chi_of(part(i)); }
  int multiplicity(int v) const;

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
  friend auto operator<=>(const OrbitDatum&, const OrbitDatum&) = default;
};

std::vector<std::string> violations(const OrbitDatum& x);
inline bool is_valid(const OrbitDatum& x) { return violations(x).empty(); }

/// Minimal zero padding for the case: odd length with lambda_1 = 0 for
/// sp/oo/spd, no zeros for eo/ood.
OrbitDatum canonicalize_padding(const OrbitDatum& x);
/// Prepends k pairs of zeros.
OrbitDatum pad(const OrbitDatum& x, int pairs);

/// Every orbit of the case at rank n, canonically padded, sorted by grammar string.
std::vector<OrbitDatum> enumerate_orbits(LieCase c, int n);

OrbitDatum zero_orbit(LieCase c, int n);
OrbitDatum regular_orbit(LieCase c, int n);

/// Grammar: descending "v_c" items joined by commas, "-" when there are no
/// positive parts, "m=<k>;" prefix for o(2n+1)*.
std::string to_string(const OrbitDatum& x);
/// Throws std::invalid_argument on syntax errors or invalid data.
OrbitDatum parse_orbit(LieCase c, int n, const std::string& text);

/// Generators a_i and relations, for the padding of the datum passed in.
struct ComponentGroup {
  std::vector<int> generators;              // 1-based indices i carrying a generator a_i
  std::vector<int> class_of;                // per 1-based index (slot 0 unused): class id or -1
  std::vector<std::vector<int>> classes;    // indices in each class, ascending
  std::vector<bool> killed;                 // per class
  std::vector<int> surviving;               // class ids with killed = false, ascending
  bool even_subgroup = false;               // o(2n): A is the even part of the tilde group

  /// Rank of the tilde group (number of surviving classes).
  int free_rank() const { return static_cast<int>(surviving.size()); }
  /// log2 |A(x)|.
  int rank() const;
  /// Position of a class among `surviving`, -1 if killed.
  int basis_index(int class_id) const;
  /// Image of a_i in F2^free_rank; 0 when i is not a generator or killed.
  std::uint64_t image(int i) const;
  /// Characters of A(x) as masks over `surviving`. For o(2n) these are
  /// classes modulo the all-ones mask, represented without the last class.
  std::vector<std::uint64_t> characters() const;
  std::uint64_t reduce(std::uint64_t mask) const;
};

ComponentGroup component_group(const OrbitDatum& x);

class OrbitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace springer2
