#include "springer2/degeneration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "springer2/interval.hpp"
#include "springer2/parallel.hpp"
#include "springer2/springer.hpp"

namespace springer2 {

namespace {

struct RowRule {
  int gap;       // a_i - a_{i-1} (resp. b) needed for i >= 2
  int b1;        // smallest b_1 that may be decreased
  int b_offset;  // b_j drops by j - 1 + b_offset
};

RowRule row_rule(LieCase c, int n) {
  switch (c) {
    case LieCase::oo: return {n + 4, n + 2, 1};
    case LieCase::spd: return {n + 3, n + 2, 1};
    default: return {n + 2, 1, 0};  // eo, ood
  }
}

}  // namespace

std::vector<Symbol> symbol_branch(const Symbol& x, LieCase c) {
  const Symbol s = normalize(x);
  const int n = s.space.n;
  if (s.space != case_space(c, n))
    throw SymbolError("symbol_branch: " + to_string(s.space) + " is not the " + case_name(c) + " space");
  std::vector<Symbol> out;
  if (n < 1) return out;
  const SymbolSpace target = case_space(c, n - 1);

  if (c == LieCase::sp) {
    const auto seq = merged_sequence(s);
    if (seq.empty()) throw SymbolError("symbol_branch: sp symbol " + to_string(s) + " is not interleaved");
    const int L = static_cast<int>(seq.size());
    auto at = [&](int i) { return seq[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= L; ++i) {
      const bool ok = i >= 3 ? at(i) - at(i - 2) >= 2 * n + 3 : i == 2 ? at(2) >= n + 2 : at(1) >= 1;
      if (!ok) continue;
      std::vector<int> a, b;
      for (int j = 1; j <= L; ++j) {
        const int v = at(j) - (j == i ? i : j - 1);
        (j % 2 ? a : b).push_back(v);
      }
      out.push_back(normalize(make_symbol(target, std::move(a), std::move(b))));
    }
    return out;
  }

  const RowRule rule = row_rule(c, n);
  auto decrement = [&](bool in_a, std::size_t i) {
    std::vector<int> a = s.a, b = s.b;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= static_cast<int>(j) + (in_a && j == i ? 1 : 0);
    for (std::size_t j = 0; j < b.size(); ++j)
      b[j] -= static_cast<int>(j) + rule.b_offset + (!in_a && j == i ? 1 : 0);
    return normalize(make_symbol(target, std::move(a), std::move(b)));
  };
  for (std::size_t i = 0; i < s.a.size(); ++i)
    if (i == 0 ? s.a[0] >= 1 : s.a[i] - s.a[i - 1] >= rule.gap) out.push_back(decrement(true, i));
  for (std::size_t i = 0; i < s.b.size(); ++i)
    if (i == 0 ? s.b[0] >= rule.b1 : s.b[i] - s.b[i - 1] >= rule.gap) out.push_back(decrement(false, i));
  return out;
}

SubgroupTriple subgroup_triple(const OrbitDatum& source, const OrbitDatum& target_padded) {
  if (source.length() != target_padded.length())
    throw OrbitError("subgroup_triple: source and target must have the same padded length");
  const ComponentGroup g = component_group(source);
  const ComponentGroup gp = component_group(target_padded);
  SubgroupTriple t;
  t.rank = g.free_rank();
  t.rank_prime = gp.free_rank();
  t.even_subgroup = g.even_subgroup;
  for (int i : g.generators)
    if (std::binary_search(gp.generators.begin(), gp.generators.end(), i)) {
      t.common.push_back(i);
      t.phi.push_back(g.image(i));
      t.psi.push_back(gp.image(i));
    }
  t.a_p = f2::span(t.phi);
  for (f2::Vec v : f2::kernel(t.phi)) t.a_p_prime.insert(f2::apply(v, t.psi));
  return t;
}

namespace {

struct Builder {
  const OrbitDatum& x;
  int L;
  std::vector<DegenerationRecord> out;

  int lam(int i) const { return x.part(i); }
  int chi(int i) const { return x.chi_at(i); }

  void add(std::vector<int> lambda, std::vector<int> chis, int m, std::string clause, int i, int dim_y) {
    OrbitDatum t{x.lie, x.n - 1, std::move(lambda), {}, m};
    for (int k = 0; k < L; ++k) {
      const int v = t.lambda[static_cast<std::size_t>(k)], c = chis[static_cast<std::size_t>(k)];
      if (v == 0) {
        if (c != 0) return;
        continue;
      }
      auto [it, fresh] = t.chi.emplace(v, c);
      if (!fresh && it->second != c) return;
    }
    if (!is_valid(t)) return;
    DegenerationRecord r;
    r.source = x;
    r.target_padded = t;
    r.target = canonicalize_padding(t);
    r.clause = std::move(clause);
    r.i = i;
    r.dim_y = dim_y;
    r.triple = subgroup_triple(x, t);
    out.push_back(std::move(r));
  }

  std::vector<int> chis() const {
    std::vector<int> c;
    for (int i = 1; i <= L; ++i) c.push_back(chi(i));
    return c;
  }

  // Clause (b) of every case: lambda_i = lambda_{i+1} > lambda_{i-1} drop by one.
  void pair_clause(const std::string& tag, int dim_shift) {
    for (int i = 1; i < L; ++i) {
      if (!(lam(i + 1) == lam(i) && lam(i) > lam(i - 1))) continue;
      const int lp = lam(i) - 1;
      for (int cp : {chi(i), chi(i) - 1}) {
        bool range = false;
        switch (x.lie) {
          case LieCase::sp: range = 0 <= cp && 2 * cp <= lp; break;
          case LieCase::spd: range = lp / 2 <= cp && cp <= lp; break;
          default: range = lp <= 2 * cp && cp <= lp; break;
        }
        if (!range || cp < chi(i - 1) || cp > chi(i - 1) + lam(i) - lam(i - 1) - 1) continue;
        auto l2 = x.lambda;
        auto c2 = chis();
        for (int k : {i, i + 1}) {
          l2[static_cast<std::size_t>(k - 1)] = lp;
          c2[static_cast<std::size_t>(k - 1)] = cp;
        }
        const int dim = L - i + dim_shift - (cp == chi(i) ? 0 : 1);
        add(std::move(l2), std::move(c2), x.m, tag, i, dim);
      }
    }
  }
};

}  // namespace

std::vector<DegenerationRecord> orbit_degenerations(const OrbitDatum& x) {
  const auto v = violations(x);
  if (!v.empty()) throw OrbitError("orbit_degenerations: invalid orbit " + to_string(x) + ": " + v.front());
  Builder b{x, x.length(), {}};
  if (x.n < 1) return {};
  const int L = b.L;
  switch (x.lie) {
    case LieCase::sp:
      for (int i = 2; i <= L; ++i) {
        if (b.lam(i) - b.lam(i - 1) < 2 || 2 * b.chi(i) != b.lam(i)) continue;
        bool ok = true;
        for (int j = 1; j < i; ++j) ok = ok && 2 * b.chi(j) >= 2 * b.lam(j) - b.lam(i) + 2;
        if (!ok) continue;
        auto l2 = x.lambda;
        auto c2 = b.chis();
        l2[static_cast<std::size_t>(i - 1)] -= 2;
        c2[static_cast<std::size_t>(i - 1)] = l2[static_cast<std::size_t>(i - 1)] / 2;
        b.add(std::move(l2), std::move(c2), 0, "SP-a", i, L - i);
      }
      b.pair_clause("SP-b", 0);
      break;
    case LieCase::oo:
    case LieCase::eo:
      for (int i = 1; i + 2 <= L; ++i) {
        if (!(b.lam(i) < b.lam(i + 1) && b.lam(i + 1) < b.lam(i + 2)) || b.chi(i + 2) != b.lam(i + 2)) continue;
        auto l2 = x.lambda;
        auto c2 = b.chis();
        l2[static_cast<std::size_t>(i)] -= 1;
        l2[static_cast<std::size_t>(i + 1)] -= 1;
        for (int j = 1; j <= i + 2; ++j) c2[static_cast<std::size_t>(j - 1)] = l2[static_cast<std::size_t>(j - 1)];
        b.add(std::move(l2), std::move(c2), 0, "O-a", i, L - i - 2);
      }
      b.pair_clause("O-b", 0);
      break;
    case LieCase::spd:
      b.pair_clause("SPD", 0);
      break;
    case LieCase::ood:
      if (x.m - 1 >= b.lam(L) - b.chi(L) && x.m >= 1) b.add(x.lambda, b.chis(), x.m - 1, "OOD-a", 0, 0);
      b.pair_clause("OOD-b", 1);
      break;
  }
  return std::move(b.out);
}

CharacterPairs epsilon_pairs(const DegenerationRecord& r) {
  const auto& t = r.triple;
  const ComponentGroup g = component_group(r.source);
  const ComponentGroup gp = component_group(r.target_padded);
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << t.rank); ++u)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << t.rank_prime); ++w) {
      bool trivial = true;
      for (std::size_t k = 0; k < t.common.size() && trivial; ++k)
        trivial = f2::parity(u & t.phi[k]) == f2::parity(w & t.psi[k]);
      for (f2::Vec b : t.a_p_prime.basis()) trivial = trivial && f2::parity(w & b) == 0;
      if (trivial) out.emplace(g.reduce(u), gp.reduce(w));
    }
  return {out.begin(), out.end()};
}

CharacterPairs epsilon_pairs(const OrbitDatum& source, const OrbitDatum& target) {
  const OrbitDatum t = canonicalize_padding(target);
  for (const auto& r : orbit_degenerations(source))
    if (r.target == t) return epsilon_pairs(r);
  throw OrbitError("epsilon_pairs: " + to_string(target) + " is not a degeneration of " + to_string(source));
}

namespace {

std::string bip_key(const Symbol& s, bool unordered) {
  return unordered ? to_string(to_unordered_bipartition(s)) : to_string(to_bipartition(s));
}

}  // namespace

std::vector<std::string> check_branch_bipartitions(LieCase c, int n) {
  std::vector<std::string> failures;
  if (n < 1) return failures;
  const bool uno = c == LieCase::eo;
  for (const auto& s : enumerate(case_space(c, n))) {
    std::vector<std::string> got, want;
    for (const auto& t : symbol_branch(s, c)) got.push_back(bip_key(t, uno));
    if (uno) {
      for (const auto& u : branch(to_unordered_bipartition(s))) want.push_back(to_string(u));
    } else {
      for (const auto& bp : branch(to_bipartition(s))) want.push_back(to_string(bp));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) failures.push_back("branch of " + to_string(s) + " disagrees with box removal");
  }
  return failures;
}

namespace {

struct SourceResult {
  std::size_t degenerations = 0;
  std::size_t branched = 0;
  std::vector<std::string> failures;
};

using PairSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

std::string pairs_string(const PairSet& s) {
  std::string out = "{";
  for (const auto& [a, b] : s) {
    if (out.size() > 1) out += ",";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out + "}";
}

}  // namespace

RestrictionReport check_restriction(LieCase c, int n) {
  RestrictionReport rep;
  rep.lie = c;
  rep.n = n;
  if (n < 1) return rep;
  const auto sources = enumerate_orbits(c, n);
  rep.sources = sources.size();

  // rank n-1 symbol -> (orbit grammar, interval mask)
  std::map<Symbol, std::pair<std::string, std::uint64_t>> lookup;
  for (const auto& e : table(c, n - 1)) lookup[normalize(e.symbol)] = {to_string(e.orbit), e.interval_mask};

  auto run = [&](const OrbitDatum& x) {
    SourceResult res;
    const std::string xs = to_string(x);
    auto fail = [&](const std::string& msg) { res.failures.push_back(case_name(c) + " n=" + std::to_string(n) + " " + xs + ": " + msg); };
    const Symbol lambda = rho(x);
    const auto dec = decompose(lambda);
    std::map<std::string, PairSet> seen;
    for (auto f : dec.characters()) {
      for (const auto& y : symbol_branch(act(lambda, dec, f), c)) {
        ++res.branched;
        auto it = lookup.find(y);
        if (it == lookup.end()) {
          fail("branch target " + to_string(y) + " is not in the rank n-1 table");
          continue;
        }
        seen[it->second.first].emplace(f, it->second.second);
      }
    }
    const auto degs = orbit_degenerations(x);
    res.degenerations = degs.size();
    std::map<std::string, const DegenerationRecord*> listed;
    for (const auto& r : degs)
      if (!listed.emplace(to_string(r.target), &r).second) fail("target " + to_string(r.target) + " listed twice");

    for (const auto& [target, pairs] : seen) {
      const bool distinguished = pairs.count({0, 0}) > 0;
      if (!listed.count(target))
        fail(std::string(distinguished ? "rho branches" : "a translate branches") + " to " + target +
             ", which is not a listed degeneration");
    }
    const auto src_map = class_interval_map(x);
    const auto src_group = component_group(x);
    for (const auto& [target, r] : listed) {
      auto it = seen.find(target);
      if (it == seen.end() || !it->second.count({0, 0})) {
        fail("listed degeneration " + target + " (" + r->clause + ") is not a branch of rho");
        if (it == seen.end()) continue;
      }
      const auto tgt_map = class_interval_map(r->target_padded);
      const auto tgt_group = component_group(r->target_padded);
      if (!src_map.consistent || !tgt_map.consistent) {
        fail("component groups of the pair to " + target + " do not match the intervals, epsilon not comparable");
        continue;
      }
      PairSet image;
      for (auto [u, w] : epsilon_pairs(*r))
        image.emplace(character_to_intervals(src_map, src_group, u), character_to_intervals(tgt_map, tgt_group, w));
      if (image != it->second)
        fail("epsilon pairs to " + target + " map to " + pairs_string(image) + ", branching gives " +
             pairs_string(it->second));
    }
    return res;
  };

  for (auto& r : parallel_map(sources, run)) {
    rep.degenerations += r.degenerations;
    rep.symbols_branched += r.branched;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
  for (auto& f : check_branch_bipartitions(c, n)) rep.failures.push_back(case_name(c) + " n=" + std::to_string(n) + " " + f);
  return rep;
}

}  // namespace springer2
