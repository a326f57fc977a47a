#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer2/bipartition.hpp"

namespace springer2 {

struct SymbolSpace {
  int r = 0;
  int s = 0;
  int n = 0;
  int d = 1;
  bool unordered = false;

  /// floor(d/2), also for negative d.
  int e() const { return d >= 0 ? d / 2 : -((-d + 1) / 2); }

  /// Right-hand side of the sum identity at row length m.
  std::int64_t target_sum(int m) const;
  /// Minimal possible entry sum at row length m.
  std::int64_t minimal_sum(int m) const;
  /// target_sum - minimal_sum - n; the same for every admissible m.
  std::int64_t defect() const;

  SymbolSpace with_n(int n2) const {
    SymbolSpace sp = *this;
    sp.n = n2;
    return sp;
  }
  SymbolSpace with_d(int d2) const {
    SymbolSpace sp = *this;
    sp.d = d2;
    return sp;
  }

  friend bool operator==(const SymbolSpace&, const SymbolSpace&) = default;
  friend auto operator<=>(const SymbolSpace&, const SymbolSpace&) = default;
};

std::string to_string(const SymbolSpace& sp);

class SymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A member of a symbol space held as a concrete shift representative.
/// `normalize` produces the canonical (minimal length) representative;
/// equality compares representatives, so normalize before comparing classes.
struct Symbol {
  SymbolSpace space;
  std::vector<int> a;
  std::vector<int> b;

  int m() const { return static_cast<int>(b.size()); }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Every violated defining condition, as human-readable messages.
std::vector<std::string> violations(const std::vector<int>& a, const std::vector<int>& b,
                                    const SymbolSpace& sp);
inline std::vector<std::string> violations(const Symbol& x) { return violations(x.a, x.b, x.space); }
inline bool is_member(const Symbol& x) { return violations(x).empty(); }

/// Validates and returns the symbol as given (no normalization). Throws SymbolError.
Symbol make_symbol(const SymbolSpace& sp, std::vector<int> a, std::vector<int> b);

Symbol shift(const Symbol& x);
/// Inverse shift when the representative admits one.
std::optional<Symbol> unshift(const Symbol& x);
/// Canonical representative: all reverse shifts stripped; unordered
/// spaces also fix the orientation.
Symbol normalize(const Symbol& x);
Symbol normalize(const SymbolSpace& sp, std::vector<int> a, std::vector<int> b);
/// Representative of the same class with |B| = m. Throws if m is below the canonical length.
Symbol at_length(const Symbol& x, int m);
bool same_class(const Symbol& x, const Symbol& y);

/// Entrywise sum at a common length; result normalized.
Symbol add(const Symbol& x, const Symbol& y);

/// Closed-form bijection with bipartitions (d in {0,1}). The optional m
/// requests a specific representative length; default is canonical.
Symbol from_bipartition(const Bipartition& bp, const SymbolSpace& sp, std::optional<int> m = {});
Symbol from_bipartition(const UnorderedBipartition& bp, const SymbolSpace& sp);
Bipartition to_bipartition(const Symbol& x);
UnorderedBipartition to_unordered_bipartition(const Symbol& x);

/// Interleaving a1 <= b1 <= a2 <= ...; unordered spaces accept either orientation.
bool is_distinguished(const Symbol& x);

/// Canonical representatives of every element, deterministic order.
std::vector<Symbol> enumerate(const SymbolSpace& sp);
/// Bounded direct search over excess sequences; valid for every d.
std::vector<Symbol> enumerate_by_search(const SymbolSpace& sp);

/// "A=0,4,8;B=2,7"
std::string to_string(const Symbol& x);
/// Parses the rows only; the caller supplies the space. Throws SymbolError.
std::pair<std::vector<int>, std::vector<int>> parse_rows(const std::string& text);
Symbol parse_symbol(const std::string& text, const SymbolSpace& sp);

}  // namespace springer2
