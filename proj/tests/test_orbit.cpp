#include "doctest.h"
#include "oracles.hpp"
#include "springer2/orbit.hpp"

#include <set>

using namespace springer2;

namespace {

OrbitDatum datum(LieCase c, int n, std::vector<int> lambda, std::map<int, int> chi, int m = 0) {
  return OrbitDatum{c, n, std::move(lambda), std::move(chi), m};
}

std::int64_t oracle_count(LieCase c, int n) {
  switch (c) {
    case LieCase::sp: return oracle::ordered_bipartitions(n);
    case LieCase::oo: return oracle::bipartitions_bounded(n, 2);
    case LieCase::eo: return oracle::bipartitions_bounded(n, 0);
    case LieCase::spd: return oracle::bipartitions_bounded(n, 1);
    case LieCase::ood: return oracle::bipartitions_shifted(n);
  }
  return -1;
}

}  // namespace

TEST_CASE("validity examples") {
  CHECK(is_valid(datum(LieCase::sp, 1, {0, 1, 1}, {{1, 0}})));
  CHECK_FALSE(is_valid(datum(LieCase::sp, 1, {0, 0, 2}, {{2, 0}})));
  CHECK_FALSE(is_valid(datum(LieCase::oo, 2, {0, 0, 1, 1, 3}, {{1, 1}, {3, 3}})));
  CHECK(is_valid(datum(LieCase::oo, 2, {0, 2, 3}, {{2, 2}, {3, 3}})));
  CHECK_FALSE(is_valid(datum(LieCase::eo, 2, {1, 3}, {{1, 1}, {3, 2}})));
  CHECK_FALSE(violations(datum(LieCase::sp, 1, {0, 1, 1}, {{1, 1}})).empty());
  CHECK_FALSE(is_valid(datum(LieCase::ood, 2, {1, 1}, {{1, 1}}, 0)));
}

TEST_CASE("violations lists every failure") {
  auto v = violations(datum(LieCase::sp, 2, {0, 1, 2}, {{1, 1}, {2, 2}}));
  CHECK(v.size() >= 3);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_orbits(LieCase::sp, 3).size() == 10);
  auto oo = enumerate_orbits(LieCase::oo, 2);
  std::set<std::string> names;
  for (const auto& x : oo) names.insert(to_string(x));
  CHECK(names == std::set<std::string>{"3_3,2_2", "2_1,2_1,1_1", "2_2,2_2,1_1", "2_2,1_1,1_1,1_1",
                                       "1_1,1_1,1_1,1_1,1_1"});
  auto ood = enumerate_orbits(LieCase::ood, 1);
  REQUIRE(ood.size() == 2);
  CHECK(to_string(ood[0]) == "m=0;1_1,1_1");
  CHECK(to_string(ood[1]) == "m=1;-");
  CHECK(enumerate_orbits(LieCase::sp, 0).size() == 1);
}

TEST_CASE("orbit counts match the bipartition oracle") {
  for (LieCase c : all_cases())
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(case_name(c));
      CAPTURE(n);
      auto xs = enumerate_orbits(c, n);
      CHECK(static_cast<std::int64_t>(xs.size()) == oracle_count(c, n));
      CHECK(static_cast<std::int64_t>(xs.size()) == count_constrained(n, case_constraint(c)));
      std::set<OrbitDatum> uniq(xs.begin(), xs.end());
      CHECK(uniq.size() == xs.size());
      for (const auto& x : xs) {
        CHECK(is_valid(x));
        CHECK(canonicalize_padding(x) == x);
      }
    }
}

TEST_CASE("enumeration agrees with exhaustive search over (lambda, chi)") {
  // Every partition of the right size, every chi with 0 <= chi(v) <= v.
  for (LieCase c : all_cases())
    for (int n = 0; n <= 5; ++n) {
      std::set<OrbitDatum> found;
      const int mmax = c == LieCase::ood ? n : 0;
      for (int m = 0; m <= mmax; ++m) {
        const int size = c == LieCase::oo ? 2 * n + 1 : 2 * n - 2 * m;
        for (const auto& p : oracle::partitions(size)) {
          std::vector<int> vals;
          for (int v : p)
            if (vals.empty() || vals.back() != v) vals.push_back(v);
          std::vector<int> cur(vals.size(), 0);
          while (true) {
            OrbitDatum x{c, n, p, {}, m};
            for (std::size_t k = 0; k < vals.size(); ++k) x.chi[vals[k]] = cur[k];
            x = canonicalize_padding(x);
            if (is_valid(x)) found.insert(x);
            std::size_t k = 0;
            while (k < vals.size() && cur[k] == vals[k]) cur[k++] = 0;
            if (k == vals.size()) break;
            ++cur[k];
          }
        }
      }
      auto xs = enumerate_orbits(c, n);
      CHECK(found == std::set<OrbitDatum>(xs.begin(), xs.end()));
    }
}

TEST_CASE("padding") {
  auto z = canonicalize_padding(datum(LieCase::sp, 1, {1, 1}, {{1, 0}}));
  CHECK(z.lambda == std::vector<int>{0, 1, 1});
  auto r = canonicalize_padding(datum(LieCase::oo, 2, {0, 0, 0, 2, 3}, {{2, 2}, {3, 3}}));
  CHECK(r.lambda == std::vector<int>{0, 2, 3});
  auto e = canonicalize_padding(datum(LieCase::eo, 2, {2, 2}, {{2, 1}}));
  CHECK(e.lambda == std::vector<int>{2, 2});
  CHECK(pad(z, 2).lambda == std::vector<int>{0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("zero and regular orbits are valid") {
  for (LieCase c : all_cases())
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(case_name(c));
      CAPTURE(n);
      CHECK(is_valid(zero_orbit(c, n)));
      CHECK(is_valid(regular_orbit(c, n)));
    }
  CHECK(to_string(zero_orbit(LieCase::oo, 1)) == "1_1,1_1,1_1");
  CHECK(to_string(regular_orbit(LieCase::ood, 2)) == "m=2;-");
}

TEST_CASE("grammar round trip") {
  for (LieCase c : all_cases())
    for (int n = 0; n <= 6; ++n)
      for (const auto& x : enumerate_orbits(c, n)) CHECK(parse_orbit(c, n, to_string(x)) == x);
  CHECK(parse_orbit(LieCase::eo, 2, " 2_1, 2_1 ").lambda == std::vector<int>{2, 2});
  CHECK_THROWS_AS(parse_orbit(LieCase::sp, 1, "2_2"), OrbitError);
  CHECK_THROWS_AS(parse_orbit(LieCase::sp, 1, "2x"), OrbitError);
  CHECK_THROWS_AS(parse_orbit(LieCase::sp, 1, "m=1;-"), OrbitError);
  CHECK_THROWS_AS(parse_orbit(LieCase::ood, 1, "-"), OrbitError);
  CHECK_THROWS_AS(parse_orbit(LieCase::sp, 2, "2_1,1_0"), OrbitError);
  CHECK_THROWS_AS(parse_case("so"), std::invalid_argument);
}

TEST_CASE("component group examples") {
  auto g = component_group(datum(LieCase::oo, 5, {0, 0, 1, 1, 1, 4, 4}, {{1, 1}, {4, 3}}));
  CHECK(g.rank() == 1);
  REQUIRE(g.surviving.size() == 1);
  CHECK(g.classes[static_cast<std::size_t>(g.surviving[0])] == std::vector<int>{6, 7});

  CHECK(component_group(datum(LieCase::oo, 2, {0, 0, 1, 2, 2}, {{1, 1}, {2, 2}})).rank() == 0);
  CHECK(component_group(datum(LieCase::ood, 1, {1, 1}, {{1, 1}}, 0)).rank() == 0);
  for (const auto& x : enumerate_orbits(LieCase::sp, 4)) CHECK(component_group(x).rank() == 0);
}

TEST_CASE("component group invariants") {
  for (LieCase c : all_cases())
    for (int n = 0; n <= 7; ++n)
      for (const auto& x : enumerate_orbits(c, n)) {
        auto g = component_group(x);
        for (int i : g.generators) CHECK(g.class_of[static_cast<std::size_t>(i)] >= 0);
        std::size_t total = 0;
        for (const auto& cl : g.classes) total += cl.size();
        CHECK(total == g.generators.size());
        CHECK(g.characters().size() == (std::size_t{1} << g.rank()));
        // padding invariance
        auto gp = component_group(pad(x, 1));
        CHECK(gp.rank() == g.rank());
        if (c == LieCase::eo) {
          bool degenerate = true;
          for (auto [v, ch] : x.chi) degenerate = degenerate && 2 * ch == v;
          if (degenerate) CHECK(g.free_rank() == 0);
        }
      }
}
