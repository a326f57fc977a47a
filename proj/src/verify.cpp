#include "springer2/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springer2/degeneration.hpp"
#include "springer2/interval.hpp"
#include "springer2/parallel.hpp"
#include "springer2/springer.hpp"

namespace springer2 {

namespace {

std::string where(LieCase c, int n) { return case_name(c) + " n=" + std::to_string(n) + ": "; }

void append(std::vector<std::string>& out, std::vector<std::string> more) {
  for (auto& s : more) out.push_back(std::move(s));
}

std::vector<std::string> check_counts(LieCase c, int n) {
  const auto got = enumerate_orbits(c, n).size();
  const auto want = count_constrained(n, case_constraint(c));
  if (static_cast<std::int64_t>(got) == want) return {};
  return {where(c, n) + std::to_string(got) + " orbits, expected " + std::to_string(want)};
}

std::vector<std::string> check_round_trip(LieCase c, int n) {
  std::vector<std::string> out;
  for (const auto& x : enumerate_orbits(c, n)) {
    const Symbol s = rho(x);
    if (!is_member(s) || !is_distinguished(s)) out.push_back(where(c, n) + "rho(" + to_string(x) + ") not distinguished");
    else if (rho_inverse(s, c) != x) out.push_back(where(c, n) + "rho_inverse(rho(" + to_string(x) + ")) differs");
  }
  for (const auto& s : enumerate(case_space(c, n))) {
    if (!is_distinguished(s)) continue;
    try {
      if (!same_class(rho(rho_inverse(s, c)), s)) out.push_back(where(c, n) + "rho(rho_inverse(" + to_string(s) + ")) differs");
    } catch (const std::exception& e) {
      out.push_back(where(c, n) + e.what());
    }
  }
  return out;
}

std::vector<std::string> check_groups(LieCase c, int n) {
  std::vector<std::string> out;
  for (const auto& x : enumerate_orbits(c, n)) {
    const auto g = component_group(x);
    const auto m = class_interval_map(x);
    if (g.rank() != m.dec.dimension())
      out.push_back(where(c, n) + to_string(x) + ": |A| = 2^" + std::to_string(g.rank()) + ", intervals give 2^" +
                    std::to_string(m.dec.dimension()));
    else if (!m.consistent)
      out.push_back(where(c, n) + to_string(x) + ": " + (m.problems.empty() ? "class map inconsistent" : m.problems.front()));
  }
  return out;
}

std::vector<std::string> worked_instance() {
  std::vector<std::string> out;
  const auto x = parse_orbit(LieCase::oo, 5, "4_3,4_3,1_1,1_1,1_1");
  const auto sp4 = case_space(LieCase::oo, 4);
  const Symbol t3 = make_symbol(sp4, {0, 7, 14, 23}, {5, 13, 20});
  const Symbol t2 = make_symbol(sp4, {0, 7, 14, 22}, {5, 13, 21});
  if (rho(x) != make_symbol(case_space(LieCase::oo, 5), {0, 8, 16, 26}, {6, 15, 24}))
    out.push_back("worked instance: rho(source) = " + to_string(rho(x)));
  std::set<Symbol> branches;
  for (const auto& s : symbol_branch(rho(x), LieCase::oo)) branches.insert(s);
  if (!branches.count(normalize(t3)) || !branches.count(normalize(t2)))
    out.push_back("worked instance: named branch targets missing");
  auto expect = [&](const std::string& target, const Symbol& sym, const CharacterPairs& eps) {
    for (const auto& r : orbit_degenerations(x)) {
      if (to_string(r.target) != target) continue;
      if (!same_class(rho(r.target), sym)) out.push_back("worked instance: rho(" + target + ") = " + to_string(rho(r.target)));
      if (epsilon_pairs(r) != eps) out.push_back("worked instance: epsilon pairs to " + target + " differ");
      return;
    }
    out.push_back("worked instance: " + target + " not listed");
  };
  expect("3_3,3_3,1_1,1_1,1_1", t3, {{0, 0}});
  expect("3_2,3_2,1_1,1_1,1_1", t2, {{0, 0}, {1, 1}});
  return out;
}

}  // namespace

std::vector<std::string> check_similarity_classes(LieCase c, int n) {
  std::vector<std::string> out;
  const auto all = enumerate(case_space(c, n));
  int len = 0;
  for (const auto& s : all) len = std::max(len, s.m());
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, std::vector<Symbol>> groups;
  for (const auto& s : all) {
    const Symbol t = at_length(s, len);
    std::vector<int> uni, cap;
    std::set_union(t.a.begin(), t.a.end(), t.b.begin(), t.b.end(), std::back_inserter(uni));
    std::set_intersection(t.a.begin(), t.a.end(), t.b.begin(), t.b.end(), std::back_inserter(cap));
    groups[{uni, cap}].push_back(s);
  }
  for (const auto& [key, members] : groups) {
    std::vector<Symbol> dist;
    for (const auto& s : members)
      if (is_distinguished(s)) dist.push_back(s);
    if (dist.size() != 1) {
      out.push_back(where(c, n) + "class of " + to_string(members.front()) + " has " + std::to_string(dist.size()) +
                    " distinguished members");
      continue;
    }
    const auto dec = decompose(dist.front());
    std::set<Symbol> reached;
    for (auto f : dec.characters()) reached.insert(act(dist.front(), dec, f));
    const std::set<Symbol> want(members.begin(), members.end());
    if (reached.size() != dec.characters().size())
      out.push_back(where(c, n) + "action on the class of " + to_string(dist.front()) + " is not free");
    else if (reached != want)
      out.push_back(where(c, n) + "action on the class of " + to_string(dist.front()) + " is not transitive");
  }
  return out;
}

std::vector<std::string> check_injectivity(LieCase c, int n) {
  std::vector<std::string> out;
  const bool uno = case_space(c, n).unordered;
  std::map<std::vector<Symbol>, Symbol> seen;
  for (const auto& s : enumerate(case_space(c, n))) {
    if (uno && to_unordered_bipartition(s).degenerate()) continue;
    auto br = symbol_branch(s, c);
    std::sort(br.begin(), br.end());
    auto [it, fresh] = seen.emplace(br, s);
    if (!fresh) out.push_back(where(c, n) + to_string(s) + " and " + to_string(it->second) + " restrict alike");
  }
  return out;
}

std::vector<std::string> check_emptiness(int n) {
  std::vector<std::string> out;
  auto expect_empty = [&](const SymbolSpace& sp) {
    const auto found = enumerate_by_search(sp);
    if (!found.empty()) out.push_back(to_string(sp) + " contains " + to_string(found.front()));
  };
  for (int d = -5; d <= 5; d += 2) {
    if (d == 1) continue;
    expect_empty({n + 1, n + 1, n, d, false});
    expect_empty({2, n + 1, n, d, false});
    if (d != -1) expect_empty({n + 1, 0, n, d, false});
  }
  for (int d = 2; d <= 6; d += 2) expect_empty({n + 1, 0, n, d, false});
  return out;
}

std::vector<CriterionResult> run_suite(const std::vector<LieCase>& cases, int max_n) {
  std::vector<CriterionResult> res = {
      {1, "orbit counts match the bipartition count", 0, {}},
      {2, "rho round-trip", 0, {}},
      {3, "full bijectivity", 0, {}},
      {4, "component group order equals 2^#proper intervals", 0, {}},
      {5, "zero and regular anchors", 0, {}},
      {6, "branching matches box removal", 0, {}},
      {7, "restriction formula compatibility", 0, {}},
      {8, "interval action simply transitive", 0, {}},
      {9, "restriction determines the character (n >= 3)", 0, {}},
      {10, "emptiness of the other symbol spaces (n <= 6)", 0, {}},
  };
  struct Job {
    LieCase c;
    int n;
  };
  std::vector<Job> jobs;
  for (LieCase c : cases)
    for (int n = 0; n <= max_n; ++n) jobs.push_back({c, n});

  using Row = std::vector<std::vector<std::string>>;
  const auto rows = parallel_map(jobs, [](const Job& j) {
    Row r(10);
    r[0] = check_counts(j.c, j.n);
    r[1] = check_round_trip(j.c, j.n);
    const auto bij = verify_bijection(j.c, j.n);
    r[2] = bij.failures;
    if (!bij.zero_anchor) r[4].push_back(where(j.c, j.n) + "zero orbit does not map to the sign character");
    if (!bij.regular_anchor) r[4].push_back(where(j.c, j.n) + "regular orbit does not map to the trivial character");
    r[3] = check_groups(j.c, j.n);
    if (j.n >= 1) {
      r[5] = check_branch_bipartitions(j.c, j.n);
      for (auto& f : r[5]) f = where(j.c, j.n) + f;
      r[6] = check_restriction(j.c, j.n).failures;
    }
    r[7] = check_similarity_classes(j.c, j.n);
    if (j.n >= 3) r[8] = check_injectivity(j.c, j.n);
    return r;
  });
  for (std::size_t k = 0; k < jobs.size(); ++k)
    for (std::size_t i = 0; i < 10; ++i) {
      if (i == 5 || i == 6) res[i].checks += jobs[k].n >= 1;
      else if (i == 8) res[i].checks += jobs[k].n >= 3;
      else if (i != 9) ++res[i].checks;
      append(res[i].failures, rows[k][i]);
    }
  if (std::find(cases.begin(), cases.end(), LieCase::oo) != cases.end() && max_n >= 5) {
    ++res[6].checks;
    append(res[6].failures, worked_instance());
  }
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    ++res[9].checks;
    append(res[9].failures, check_emptiness(n));
  }
  return res;
}

}  // namespace springer2
