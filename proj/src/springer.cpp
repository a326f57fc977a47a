#include "springer2/springer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springer2/parallel.hpp"

namespace springer2 {

namespace {

// c_1..c_N of the orbit (0-based storage), N = L, or L + 1 for ood.
std::vector<int> rho_sequence(const OrbitDatum& x) {
  const int n = x.n, L = x.length();
  std::vector<int> c(static_cast<std::size_t>(L));
  auto lam = [&](int i) { return x.part(i); };
  auto chi = [&](int i) { return x.chi_at(i); };
  auto set = [&](int i, int v) { c[static_cast<std::size_t>(i - 1)] = v; };
  switch (x.lie) {
    case LieCase::sp:
      for (int i = 1; i <= L;) {
        if (2 * chi(i) == lam(i)) {
          set(i, lam(i) / 2 + (n + 1) * (i - 1));
          i += 1;
        } else {
          set(i, lam(i) - chi(i) + (n + 1) * (i - 1));
          set(i + 1, chi(i + 1) + (n + 1) * i);
          i += 2;
        }
      }
      break;
    case LieCase::oo: {
      int m0 = L;
      for (int j = 3; j <= L; j += 2)
        if (lam(j) > lam(j - 1)) {
          m0 = j;
          break;
        }
      for (int i = 1; i <= L; ++i) {
        const int j = (i + 1) / 2;
        if (i % 2 == 0)
          set(i, lam(i) - chi(i) + n + 1 + (j - 1) * (n + 3) + (i >= m0 ? 1 : 0));
        else
          set(i, chi(i) + (j - 1) * (n + 3) - (i >= m0 ? 1 : 0));
      }
      break;
    }
    case LieCase::eo:
    case LieCase::ood:
      for (int j = 1; 2 * j <= L; ++j) {
        set(2 * j, chi(2 * j) + (j - 1) * (n + 1));
        set(2 * j - 1, lam(2 * j - 1) - chi(2 * j - 1) + (j - 1) * (n + 1));
      }
      if (x.lie == LieCase::ood) c.push_back(x.m + (L / 2) * (n + 1));
      break;
    case LieCase::spd:
      for (int i = 1; i <= L; ++i) {
        const int j = (i + 1) / 2;
        if (i % 2 == 0)
          set(i, lam(i) - chi(i) + n + 1 + (j - 1) * (n + 2));
        else
          set(i, chi(i) + (j - 1) * (n + 2));
      }
      break;
  }
  return c;
}

std::vector<int> interleave(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() && a.size() != b.size() + 1) return {};
  std::vector<int> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.push_back(a[i]);
    if (i < b.size()) c.push_back(b[i]);
  }
  return std::is_sorted(c.begin(), c.end()) ? c : std::vector<int>{};
}

// Orbit data read off a merged sequence; nullopt when the entries do not
// describe a consistent (lambda, chi).
std::optional<OrbitDatum> recover(LieCase lie, int n, const std::vector<int>& c) {
  const int N = static_cast<int>(c.size());
  auto at = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
  const int L = lie == LieCase::ood ? N - 1 : N;
  if (L < 0) return std::nullopt;
  std::vector<int> lam(static_cast<std::size_t>(L) + 1, 0), ch(static_cast<std::size_t>(L) + 1, 0);
  auto put = [&](int i, int l, int x) {
    lam[static_cast<std::size_t>(i)] = l;
    ch[static_cast<std::size_t>(i)] = x;
  };
  int m = 0;
  switch (lie) {
    case LieCase::sp:
      for (int i = 1; i <= L;) {
        if (i < L && at(i + 1) < at(i) + (n + 1)) {
          const int x = at(i + 1) - (n + 1) * i;
          const int l = at(i) - (n + 1) * (i - 1) + x;
          put(i, l, x);
          put(i + 1, l, x);
          i += 2;
        } else {
          const int l = 2 * (at(i) - (n + 1) * (i - 1));
          put(i, l, l / 2);
          i += 1;
        }
      }
      break;
    case LieCase::oo: {
      int m0 = L;
      for (int j = 1; 2 * j <= L; ++j)
        if (at(2 * j) > (n + 1) + (j - 1) * (n + 3)) {
          m0 = 2 * j - 1;
          break;
        }
      if (m0 < 3) return std::nullopt;
      for (int i = 1; i <= m0; i += 2) {
        const int j = (i - 1) / 2;
        const int l = i < m0 ? at(i) - j * (n + 3) : at(i) + 1 - j * (n + 3);
        put(i, l, l);
      }
      for (int i = 2; i < m0; i += 2) {
        const int l = i + 1 < m0 ? lam[static_cast<std::size_t>(i + 1)] : lam[static_cast<std::size_t>(i + 1)] - 1;
        put(i, l, l);
      }
      for (int j = (m0 + 1) / 2; 2 * j + 1 <= L; ++j) {
        const int x = at(2 * j + 1) + 1 - j * (n + 3);
        const int l = at(2 * j) - (n + 2) - (j - 1) * (n + 3) + x;
        put(2 * j, l, x);
        put(2 * j + 1, l, x);
      }
      break;
    }
    case LieCase::eo:
    case LieCase::ood:
      if (L % 2) return std::nullopt;
      for (int j = 1; 2 * j <= L; ++j) {
        const int l = at(2 * j) + at(2 * j - 1) - (2 * j - 2) * (n + 1);
        const int x = at(2 * j) - (j - 1) * (n + 1);
        put(2 * j - 1, l, x);
        put(2 * j, l, x);
      }
      if (lie == LieCase::ood) m = at(N) - (L / 2) * (n + 1);
      break;
    case LieCase::spd:
      for (int j = 1; 2 * j + 1 <= L; ++j) {
        const int l = at(2 * j) + at(2 * j + 1) - (2 * j - 1) * (n + 2) - (n + 1);
        const int x = at(2 * j + 1) - j * (n + 2);
        put(2 * j, l, x);
        put(2 * j + 1, l, x);
      }
      break;
  }
  OrbitDatum out{lie, n, {}, {}, m};
  for (int i = 1; i <= L; ++i) {
    const int l = lam[static_cast<std::size_t>(i)], x = ch[static_cast<std::size_t>(i)];
    if (l < 0) return std::nullopt;
    out.lambda.push_back(l);
    if (l == 0) {
      if (x != 0) return std::nullopt;
      continue;
    }
    auto [it, fresh] = out.chi.emplace(l, x);
    if (!fresh && it->second != x) return std::nullopt;
  }
  if (!std::is_sorted(out.lambda.begin(), out.lambda.end()) || !is_valid(out)) return std::nullopt;
  return out;
}

}  // namespace

std::vector<int> merged_sequence(const Symbol& x) {
  auto c = interleave(x.a, x.b);
  if (c.empty() && x.space.unordered && x.space.d == 0) c = interleave(x.b, x.a);
  return c;
}

Symbol rho(const OrbitDatum& x) {
  const auto v = violations(x);
  if (!v.empty()) throw OrbitError("rho: invalid orbit " + to_string(x) + ": " + v.front());
  const auto c = rho_sequence(x);
  std::vector<int> a, b;
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 ? b : a).push_back(c[i]);
  return make_symbol(case_space(x.lie, x.n), std::move(a), std::move(b));
}

OrbitDatum rho_inverse(const Symbol& sym, LieCase c) {
  const SymbolSpace sp = case_space(c, sym.space.n);
  if (sym.space != sp)
    throw SymbolError("rho_inverse: symbol lives in " + to_string(sym.space) + ", expected " + to_string(sp));
  const Symbol norm = normalize(sym);
  if (!is_distinguished(norm)) throw SymbolError("rho_inverse: " + to_string(norm) + " is not distinguished");
  for (int k = 0; k <= 3; ++k) {
    const Symbol rep = at_length(norm, norm.m() + k);
    std::vector<std::vector<int>> seqs{interleave(rep.a, rep.b)};
    if (sp.unordered && sp.d == 0) seqs.push_back(interleave(rep.b, rep.a));
    for (const auto& seq : seqs) {
      if (seq.empty()) continue;
      auto x = recover(c, sp.n, seq);
      if (!x) continue;
      OrbitDatum y = canonicalize_padding(*x);
      if (is_valid(y) && same_class(rho(y), norm)) return y;
    }
  }
  throw SymbolError("rho_inverse: no orbit recovered from " + to_string(norm));
}

ClassIntervalMap class_interval_map(const OrbitDatum& x) {
  ClassIntervalMap out;
  const Symbol s = rho(x);
  out.dec = decompose(s);
  const auto c = rho_sequence(x);
  const ComponentGroup g = component_group(x);
  const bool uno = out.dec.unordered;
  auto problem = [&](std::string msg) { out.problems.push_back(std::move(msg)); };

  std::vector<int> interval_of_class(g.classes.size(), -1);
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    std::set<int> hit;
    for (int i : g.classes[k]) hit.insert(out.dec.interval_of(c[static_cast<std::size_t>(i - 1)]));
    if (hit.size() != 1 || *hit.begin() < 0) {
      problem("class " + std::to_string(k) + " does not sit in a single interval");
      continue;
    }
    interval_of_class[k] = *hit.begin();
  }
  auto proper_index = [&](int interval) {
    auto it = std::find(out.dec.proper.begin(), out.dec.proper.end(), interval);
    return it == out.dec.proper.end() ? -1 : static_cast<int>(it - out.dec.proper.begin());
  };
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    if (!g.killed[k] || interval_of_class[k] < 0) continue;
    const int p = proper_index(interval_of_class[k]);
    if (p >= 0 && !(uno && p == out.dec.fixed))
      problem("killed class " + std::to_string(k) + " lies in a character interval");
  }
  std::set<int> used;
  for (int k : g.surviving) {
    const int p = interval_of_class[static_cast<std::size_t>(k)] < 0
                      ? -1
                      : proper_index(interval_of_class[static_cast<std::size_t>(k)]);
    out.proper_of_class.push_back(p);
    if (p < 0) {
      problem("surviving class " + std::to_string(k) + " has no proper interval");
    } else if (!used.insert(p).second) {
      problem("two classes share proper interval " + std::to_string(p));
    }
  }
  // Character-carrying intervals: all proper ones, except the fixed one for
  // ood; for eo the fixed one must be the last class.
  std::set<int> expected;
  for (int p = 0; p < static_cast<int>(out.dec.proper.size()); ++p)
    if (!(x.lie == LieCase::ood && p == out.dec.fixed)) expected.insert(p);
  if (used != expected) problem("classes and intervals do not match up");
  if (x.lie == LieCase::eo && !out.proper_of_class.empty() && out.proper_of_class.back() != out.dec.fixed)
    problem("last class is not the interval of max S");
  out.consistent = out.problems.empty();
  return out;
}

std::uint64_t character_to_intervals(const ClassIntervalMap& map, const ComponentGroup& g,
                                     std::uint64_t character) {
  if (g.rank() < 64 && (character >> g.rank()) != 0)
    throw OrbitError("character has bits beyond the component group rank " + std::to_string(g.rank()));
  if (!map.consistent) throw OrbitError("component group does not match the intervals");
  std::uint64_t mask = 0;
  for (int k = 0; k < g.rank(); ++k)
    if ((character >> k) & 1U) mask |= std::uint64_t{1} << map.proper_of_class[static_cast<std::size_t>(k)];
  return map.dec.reduce(mask);
}

Symbol correspondence(const OrbitDatum& x, std::uint64_t interval_mask) {
  const Symbol s = rho(x);
  const auto dec = decompose(s);
  const int dim = static_cast<int>(dec.proper.size());
  if ((dim < 64 && (interval_mask >> dim) != 0) || dec.reduce(interval_mask) != interval_mask)
    throw OrbitError("character mask " + std::to_string(interval_mask) + " is not one of the " +
                     std::to_string(std::uint64_t{1} << dec.dimension()) + " characters");
  const Symbol y = act(s, dec, interval_mask);
  return y.m() <= s.m() ? at_length(y, s.m()) : y;
}

std::string bipartition_string(const CorrespondenceEntry& e) {
  if (!e.unordered) return to_string(e.bipartition);
  return to_string(UnorderedBipartition(e.bipartition));
}

namespace {

std::vector<CorrespondenceEntry> entries_for(const OrbitDatum& x) {
  std::vector<CorrespondenceEntry> out;
  const Symbol s = rho(x);
  const ComponentGroup g = component_group(x);
  const ClassIntervalMap map = class_interval_map(x);
  std::map<std::uint64_t, std::uint64_t> class_char;
  if (map.consistent)
    for (auto ch : g.characters()) class_char[character_to_intervals(map, g, ch)] = ch;
  for (auto mask : map.dec.characters()) {
    CorrespondenceEntry e;
    e.orbit = x;
    e.group_rank = g.rank();
    e.interval_mask = mask;
    e.character = class_char.count(mask) ? class_char[mask] : 0;
    e.symbol = act(s, map.dec, mask);
    e.unordered = x.lie == LieCase::eo;
    if (e.unordered) {
      const auto u = to_unordered_bipartition(e.symbol);
      e.bipartition = u.representative();
      e.degenerate = u.degenerate();
    } else {
      e.bipartition = to_bipartition(e.symbol);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CorrespondenceEntry& a, const CorrespondenceEntry& b) { return a.character < b.character; });
  return out;
}

}  // namespace

std::vector<CorrespondenceEntry> table(LieCase c, int n) {
  const auto orbits = enumerate_orbits(c, n);
  std::vector<CorrespondenceEntry> out;
  for (auto& part : parallel_map(orbits, entries_for))
    for (auto& e : part) out.push_back(std::move(e));
  return out;
}

Bipartition sign_bipartition(int n) {
  return {Partition{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
}

Bipartition trivial_bipartition(int n) {
  return {n > 0 ? Partition({n}) : Partition{}, Partition{}};
}

BijectionReport verify_bijection(LieCase c, int n) {
  BijectionReport rep;
  rep.lie = c;
  rep.n = n;
  const auto entries = table(c, n);
  rep.entries = entries.size();
  const auto space = enumerate(case_space(c, n));
  rep.space_size = space.size();
  std::set<std::string> seen_orbits;
  for (const auto& e : entries)
    if (seen_orbits.insert(to_string(e.orbit)).second)
      rep.weighted_orbits += std::size_t{1} << decompose(rho(e.orbit)).dimension();

  std::map<Symbol, int> hits;
  for (const auto& e : entries) ++hits[normalize(e.symbol)];
  std::set<Symbol> expected(space.begin(), space.end());
  for (const auto& [s, k] : hits) {
    if (k > 1) rep.failures.push_back("symbol " + to_string(s) + " hit " + std::to_string(k) + " times");
    if (!expected.count(s)) rep.failures.push_back("symbol " + to_string(s) + " is not in the space");
  }
  for (const auto& s : expected)
    if (!hits.count(s)) rep.failures.push_back("symbol " + to_string(s) + " is never reached");
  if (rep.weighted_orbits != rep.space_size)
    rep.failures.push_back("sum of 2^dim V is " + std::to_string(rep.weighted_orbits) + ", space has " +
                           std::to_string(rep.space_size));

  auto anchor = [&](const OrbitDatum& x, const Bipartition& want) {
    for (const auto& e : entries)
      if (e.orbit == x && e.interval_mask == 0)
        return e.unordered ? UnorderedBipartition(e.bipartition) == UnorderedBipartition(want)
                           : e.bipartition == want;
    return false;
  };
  rep.zero_anchor = anchor(zero_orbit(c, n), sign_bipartition(n));
  rep.regular_anchor = anchor(regular_orbit(c, n), trivial_bipartition(n));
  if (!rep.zero_anchor) rep.failures.push_back("zero orbit does not map to the sign character");
  if (!rep.regular_anchor) rep.failures.push_back("regular orbit does not map to the trivial character");
  return rep;
}

}  // namespace springer2
