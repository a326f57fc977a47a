#include "doctest.h"
#include "springer2/interval.hpp"

#include <set>

using namespace springer2;

namespace {
SymbolSpace X(int r, int s, int n, int d) { return {r, s, n, d, false}; }
SymbolSpace Y(int r, int n, int d) { return {r, 0, n, d, true}; }

std::vector<SymbolSpace> families(int n) {
  return {X(n + 1, n + 1, n, 1), X(2, n + 1, n, 1), Y(n + 1, n, 0), X(1, n + 1, n, 1),
          Y(n + 1, n, 1)};
}

const Symbol worked{X(2, 6, 5, 1), {0, 8, 16, 26}, {6, 15, 24}};
}  // namespace

TEST_CASE("decompose examples") {
  auto d1 = decompose(Symbol{X(2, 2, 0, 1), {0, 4, 8}, {2, 7}});
  CHECK(d1.S == std::vector<int>{0, 2, 4, 7, 8});
  REQUIRE(d1.intervals.size() == 1);
  CHECK(d1.intervals[0].initial);
  CHECK(d1.proper.empty());

  auto d2 = decompose(Symbol{Y(3, 2, 0), {1}, {1}});
  CHECK(d2.S.empty());
  CHECK(d2.intervals.empty());
  CHECK(d2.dimension() == 0);

  auto d3 = decompose(worked);
  REQUIRE(d3.intervals.size() == 2);
  CHECK(d3.intervals[0].elements == std::vector<int>{0, 6, 8, 15, 16});
  CHECK(d3.intervals[0].initial);
  CHECK(d3.intervals[1].elements == std::vector<int>{24, 26});
  CHECK_FALSE(d3.intervals[1].initial);
  CHECK(d3.proper == std::vector<int>{1});
  CHECK(d3.dimension() == 1);

  CHECK_THROWS_AS(decompose(Symbol{X(0, 1, 0, 1), {0}, {}}), SymbolError);
}

TEST_CASE("act examples") {
  CHECK(act(worked, 0) == normalize(worked));
  CHECK(act(worked, 1) == normalize(Symbol{X(2, 6, 5, 1), {0, 8, 16, 24}, {6, 15, 26}}));
  CHECK_THROWS_AS(act(worked, 2), SymbolError);
  auto u = Symbol{Y(3, 2, 0), {0, 3}, {1, 4}};
  auto dec = decompose(u);
  const std::uint64_t full = (std::uint64_t{1} << dec.proper.size()) - 1;
  CHECK(act(u, full) == normalize(u));
}

TEST_CASE("similarity class examples") {
  CHECK(similarity_class(worked).size() == 2);
  CHECK(similarity_class(Symbol{X(2, 2, 1, 1), {0, 4}, {3}}).size() == 1);
  CHECK(similarity_class(Symbol{Y(3, 2, 0), {1}, {1}}).size() == 1);
}

TEST_CASE("distinguished of class examples") {
  auto flipped = Symbol{X(2, 6, 5, 1), {0, 8, 16, 24}, {6, 15, 26}};
  CHECK(distinguished_of_class(flipped) == normalize(worked));
  CHECK(distinguished_of_class(worked) == normalize(worked));
  auto u = normalize(Symbol{Y(3, 2, 0), {0, 3}, {1, 4}});
  CHECK(distinguished_of_class(u) == u);
}

TEST_CASE("action laws on all case families") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& sp : families(n))
      for (const auto& x : enumerate(sp)) {
        const auto dec = decompose(x);
        const auto chars = dec.characters();
        CHECK(chars.size() == (std::size_t{1} << dec.dimension()));
        std::set<Symbol> orbit;
        for (auto f : chars) {
          auto y = act(x, dec, f);
          CHECK(is_member(y));
          CHECK(y.space == x.space);
          orbit.insert(y);
          // Same S and A n B on a common representative, same intervals.
          auto dy = decompose(at_length(y, x.m()));
          CHECK(dy.S == dec.S);
          CHECK(dy.intervals.size() == dec.intervals.size());
          for (auto g : chars) {
            auto lhs = act(at_length(y, x.m()), dy, g);
            auto rhs = act(x, dec, dec.reduce(f ^ g));
            CHECK(lhs == rhs);
          }
        }
        CHECK(orbit.size() == chars.size());
      }
}
