// Acceptance suite: one PASS/FAIL line per criterion, over every case and
// 0 <= n <= 8. Library checks from run_suite are combined with brute-force
// oracles from oracles.hpp.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "springer2/degeneration.hpp"
#include "springer2/springer.hpp"
#include "springer2/verify.hpp"

using namespace springer2;

namespace {

constexpr int kMaxN = 8;

using Parts = std::vector<int>;
using Pair = std::pair<Parts, Parts>;

Parts parts_of(const Partition& p) {
  Parts out;
  for (int i = 0; i < p.length(); ++i) out.push_back(p.part(i));
  return out;
}

std::vector<Parts> remove_box(const Parts& p) {
  std::vector<Parts> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i + 1 == p.size() || p[i] > p[i + 1]) {
      Parts q = p;
      if (--q[i] == 0) q.pop_back();
      out.push_back(q);
    }
  return out;
}

std::vector<Pair> restrict_pair(const Pair& x) {
  std::vector<Pair> out;
  for (auto& m : remove_box(x.first)) out.emplace_back(m, x.second);
  for (auto& v : remove_box(x.second)) out.emplace_back(x.first, v);
  std::sort(out.begin(), out.end());
  return out;
}

Pair orient(Pair p) {
  if (p.second < p.first) std::swap(p.first, p.second);
  return p;
}

std::int64_t oracle_orbit_count(LieCase c, int n) {
  switch (c) {
    case LieCase::sp: return oracle::ordered_bipartitions(n);
    case LieCase::oo: return oracle::bipartitions_bounded(n, 2);
    case LieCase::eo: return oracle::bipartitions_bounded(n, 0);
    case LieCase::spd: return oracle::bipartitions_bounded(n, 1);
    case LieCase::ood: return oracle::bipartitions_shifted(n);
  }
  return -1;
}

std::vector<std::string> oracle_counts() {
  std::vector<std::string> out;
  for (LieCase c : all_cases())
    for (int n = 0; n <= kMaxN; ++n) {
      const auto got = static_cast<std::int64_t>(enumerate_orbits(c, n).size());
      if (got != oracle_orbit_count(c, n))
        out.push_back(case_name(c) + " n=" + std::to_string(n) + ": " + std::to_string(got) + " orbits, oracle " +
                      std::to_string(oracle_orbit_count(c, n)));
    }
  return out;
}

std::vector<std::string> oracle_space_sizes() {
  std::vector<std::string> out;
  for (LieCase c : all_cases())
    for (int n = 0; n <= kMaxN; ++n) {
      const auto sp = case_space(c, n);
      const auto want = c == LieCase::eo ? oracle::unordered_bipartitions(n) : oracle::ordered_bipartitions(n);
      const auto listed = oracle::class_count(sp.r, sp.s, sp.n, sp.d, sp.unordered && sp.d == 0, n + 2);
      std::int64_t weighted = 0;
      for (const auto& x : enumerate_orbits(c, n)) weighted += std::int64_t{1} << decompose(rho(x)).dimension();
      const auto entries = table(c, n);
      std::set<Symbol> distinct;
      for (const auto& e : entries) distinct.insert(normalize(e.symbol));
      if (listed != want || weighted != want || static_cast<std::int64_t>(distinct.size()) != want ||
          entries.size() != distinct.size())
        out.push_back(case_name(c) + " n=" + std::to_string(n) + ": space " + std::to_string(listed) + ", weighted " +
                      std::to_string(weighted) + ", table " + std::to_string(distinct.size()) + ", expected " +
                      std::to_string(want));
    }
  return out;
}

std::vector<std::string> oracle_anchors() {
  std::vector<std::string> out;
  for (LieCase c : all_cases())
    for (int n = 0; n <= kMaxN; ++n) {
      const Pair sign{{}, Parts(static_cast<std::size_t>(n), 1)};
      const Pair triv{n ? Parts{n} : Parts{}, {}};
      auto bip = [&](const OrbitDatum& x) {
        const Bipartition b = to_bipartition(rho(x));
        Pair p{parts_of(b.mu), parts_of(b.nu)};
        return c == LieCase::eo ? orient(p) : p;
      };
      if (bip(zero_orbit(c, n)) != (c == LieCase::eo ? orient(sign) : sign))
        out.push_back(case_name(c) + " n=" + std::to_string(n) + ": zero orbit is not sent to the sign character");
      if (bip(regular_orbit(c, n)) != (c == LieCase::eo ? orient(triv) : triv))
        out.push_back(case_name(c) + " n=" + std::to_string(n) + ": regular orbit is not sent to the trivial character");
    }
  return out;
}

std::vector<std::string> oracle_branching() {
  std::vector<std::string> out;
  for (LieCase c : all_cases())
    for (int n = 1; n <= kMaxN; ++n)
      for (const auto& s : enumerate(case_space(c, n))) {
        const bool uno = c == LieCase::eo;
        auto pair_of = [&](const Symbol& t) {
          const Bipartition b = to_bipartition(t);
          Pair p{parts_of(b.mu), parts_of(b.nu)};
          return uno ? orient(p) : p;
        };
        std::vector<Pair> got, want = restrict_pair(pair_of(s));
        for (const auto& t : symbol_branch(s, c)) got.push_back(pair_of(t));
        if (uno)
          for (auto& p : want) p = orient(p);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) out.push_back(case_name(c) + " n=" + std::to_string(n) + ": " + to_string(s));
      }
  return out;
}

std::vector<std::string> worked_instance() {
  std::vector<std::string> out;
  const auto x = parse_orbit(LieCase::oo, 5, "4_3,4_3,1_1,1_1,1_1");
  const auto sp5 = case_space(LieCase::oo, 5), sp4 = case_space(LieCase::oo, 4);
  if (rho(x) != make_symbol(sp5, {0, 8, 16, 26}, {6, 15, 24})) out.push_back("rho of the source differs");
  const auto br = symbol_branch(rho(x), LieCase::oo);
  const Symbol t3 = normalize(make_symbol(sp4, {0, 7, 14, 23}, {5, 13, 20}));
  const Symbol t2 = normalize(make_symbol(sp4, {0, 7, 14, 22}, {5, 13, 21}));
  if (br.size() != 3) out.push_back("expected 3 branch targets, got " + std::to_string(br.size()));
  if (std::count(br.begin(), br.end(), t3) != 1 || std::count(br.begin(), br.end(), t2) != 1)
    out.push_back("named branch targets missing");
  const auto degs = orbit_degenerations(x);
  auto check = [&](const char* target, const Symbol& sym, const CharacterPairs& eps) {
    for (const auto& r : degs)
      if (to_string(r.target) == target) {
        if (normalize(rho(r.target)) != sym) out.push_back(std::string("rho(") + target + ") differs");
        if (epsilon_pairs(r) != eps) out.push_back(std::string("epsilon pairs to ") + target + " differ");
        return;
      }
    out.push_back(std::string(target) + " not listed");
  };
  check("3_3,3_3,1_1,1_1,1_1", t3, {{0, 0}});
  check("3_2,3_2,1_1,1_1,1_1", t2, {{0, 0}, {1, 1}});
  return out;
}

std::vector<std::string> oracle_injectivity() {
  std::vector<std::string> out;
  for (int n = 3; n <= kMaxN; ++n) {
    std::map<std::vector<Pair>, Pair> ordered, unordered;
    for (int a = 0; a <= n; ++a)
      for (const auto& mu : oracle::partitions(a))
        for (const auto& nu : oracle::partitions(n - a)) {
          const Pair p{mu, nu};
          if (!ordered.emplace(restrict_pair(p), p).second) out.push_back("ordered collision at n=" + std::to_string(n));
          if (mu == nu || orient(p) != p) continue;
          auto r = restrict_pair(p);
          for (auto& q : r) q = orient(q);
          std::sort(r.begin(), r.end());
          if (!unordered.emplace(r, p).second) out.push_back("unordered collision at n=" + std::to_string(n));
        }
  }
  return out;
}

std::vector<std::string> oracle_emptiness() {
  std::vector<std::string> out;
  auto expect_empty = [&](int r, int s, int n, int d) {
    for (int m = 0; m <= n + 3; ++m)
      if (!oracle::raw_members(r, s, n, d, m).empty()) {
        out.push_back("r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n) +
                      " d=" + std::to_string(d) + " is not empty");
        return;
      }
  };
  for (int n = 0; n <= 6; ++n) {
    for (int d = -5; d <= 5; d += 2) {
      if (d == 1) continue;
      expect_empty(n + 1, n + 1, n, d);
      expect_empty(2, n + 1, n, d);
      if (d != -1) expect_empty(n + 1, 0, n, d);
    }
    for (int d = 2; d <= 6; d += 2) expect_empty(n + 1, 0, n, d);
  }
  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  auto suite = run_suite(all_cases(), kMaxN);
  auto add = [&](int id, std::vector<std::string> more) {
    for (auto& f : more) suite[static_cast<std::size_t>(id - 1)].failures.push_back("oracle: " + f);
  };
  add(1, oracle_counts());
  add(3, oracle_space_sizes());
  add(5, oracle_anchors());
  add(6, oracle_branching());
  add(7, worked_instance());
  add(9, oracle_injectivity());
  add(10, oracle_emptiness());

  bool ok = true;
  for (const auto& r : suite) {
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
    if (!r.passed()) std::cout << " [" << r.failures.size() << " failures, first: " << r.failures.front() << "]";
    std::cout << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s" << (secs < 60 ? "" : " (over the 60 s budget)") << "\n";
  return ok && secs < 60 ? 0 : 1;
}
