#include "doctest.h"
#include "oracles.hpp"
#include "springer2/bipartition.hpp"

#include <map>
#include <set>

using namespace springer2;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partition storage") {
  Partition p({1, 3, 0, 2});
  CHECK(p.parts() == std::vector<int>{3, 2, 1});
  CHECK(p.size() == 6);
  CHECK(p.ascending(5) == std::vector<int>{0, 0, 1, 2, 3});
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK(P({2, 2, 1}).removable_boxes() == 2);
}

TEST_CASE("partition counts") {
  for (int n = 0; n <= 15; ++n) {
    CHECK(partition_count(n) == oracle::partition_count(n));
    CHECK(static_cast<std::int64_t>(partitions(n).size()) == oracle::partition_count(n));
  }
}

TEST_CASE("enumerate small") {
  auto z = enumerate_bipartitions(0);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Bipartition{});
  auto one = enumerate_bipartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Bipartition{P({1}), P({})});
  CHECK(one[1] == Bipartition{P({}), P({1})});
  CHECK(enumerate_bipartitions(4).size() == 20);
}

TEST_CASE("enumerate counts and uniqueness") {
  for (int n = 0; n <= 12; ++n) {
    auto all = enumerate_bipartitions(n);
    CHECK(static_cast<std::int64_t>(all.size()) == oracle::ordered_bipartitions(n));
    std::set<Bipartition> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
    auto un = enumerate_unordered_bipartitions(n);
    CHECK(static_cast<std::int64_t>(un.size()) == oracle::unordered_bipartitions(n));
    for (const auto& bp : all) CHECK(bp.size() == n);
  }
}

TEST_CASE("unordered representative and degeneracy") {
  UnorderedBipartition u(P({}), P({1, 1}));
  CHECK(u.representative().mu == P({}));
  CHECK(u == UnorderedBipartition(P({1, 1}), P({})));
  CHECK(UnorderedBipartition(P({1}), P({1})).degenerate());
  CHECK_FALSE(u.degenerate());
}

TEST_CASE("branch examples") {
  CHECK(branch(Bipartition{P({2}), P({})}) == std::vector<Bipartition>{{P({1}), P({})}});
  auto b11 = branch(Bipartition{P({1}), P({1})});
  CHECK(std::set<Bipartition>(b11.begin(), b11.end()) ==
        std::set<Bipartition>{{P({}), P({1})}, {P({1}), P({})}});
  auto b = branch(Bipartition{P({2, 1}), P({1})});
  CHECK(std::set<Bipartition>(b.begin(), b.end()) ==
        std::set<Bipartition>{{P({1, 1}), P({1})}, {P({2}), P({1})}, {P({2, 1}), P({})}});
  CHECK_THROWS_AS(branch(Bipartition{}), std::invalid_argument);
}

TEST_CASE("branch unordered examples") {
  auto b = branch(UnorderedBipartition(P({1}), P({1})));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == UnorderedBipartition(P({}), P({1})));
  CHECK(b[1] == b[0]);
  CHECK(branch(UnorderedBipartition(P({2}), P({}))) ==
        std::vector<UnorderedBipartition>{UnorderedBipartition(P({1}), P({}))});
  CHECK(branch(UnorderedBipartition(P({1, 1}), P({}))) ==
        std::vector<UnorderedBipartition>{UnorderedBipartition(P({1}), P({}))});
}

TEST_CASE("branch sizes") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& bp : enumerate_bipartitions(n)) {
      auto br = branch(bp);
      CHECK(static_cast<int>(br.size()) == bp.mu.removable_boxes() + bp.nu.removable_boxes());
      for (const auto& x : br) CHECK(x.size() == n - 1);
    }
}

TEST_CASE("branching is injective from n=3") {
  for (int n = 3; n <= 10; ++n) {
    std::map<std::multiset<Bipartition>, int> seen;
    for (const auto& bp : enumerate_bipartitions(n)) {
      auto br = branch(bp);
      ++seen[std::multiset<Bipartition>(br.begin(), br.end())];
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == oracle::ordered_bipartitions(n));
    std::map<std::multiset<UnorderedBipartition>, int> useen;
    int nondeg = 0;
    for (const auto& u : enumerate_unordered_bipartitions(n)) {
      if (u.degenerate()) continue;
      ++nondeg;
      auto br = branch(u);
      ++useen[std::multiset<UnorderedBipartition>(br.begin(), br.end())];
    }
    CHECK(static_cast<int>(useen.size()) == nondeg);
  }
}

TEST_CASE("constrained counts") {
  CHECK(count_constrained(2, Constraint::nu_le_mu_plus(2)) == 5);
  CHECK(count_constrained(2, Constraint::nu_le_mu_plus(0)) == 3);
  CHECK(count_constrained(1, Constraint::nu_shifted_le_mu()) == 2);
  CHECK(count_constrained(6, Constraint::all()) == oracle::ordered_bipartitions(6));
  CHECK(satisfies({P({}), P({3})}, Constraint::nu_shifted_le_mu()));
  CHECK_FALSE(satisfies({P({}), P({1, 1})}, Constraint::nu_shifted_le_mu()));
}

TEST_CASE("rendering") {
  CHECK(to_string(Bipartition{P({2, 1}), P({})}) == "((2,1),())");
  CHECK(to_string(UnorderedBipartition(P({1}), P({}))) == "{(),(1)}");
}
