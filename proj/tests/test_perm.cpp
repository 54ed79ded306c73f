#include <algorithm>

#include "doctest.h"
#include "schubert/perm.hpp"

using namespace schubert;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("parse accepts digit strings and separated integers") {
  CHECK(P("1423").images() == std::vector<int>{1, 4, 2, 3});
  CHECK(P("1 2 3") == Permutation::identity());
  CHECK(P("2,1") == P("21"));
  CHECK(P("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_WITH_AS(P("1424"), "value 4 repeated", FormatError);
  CHECK_THROWS_AS(P("13"), FormatError);
  CHECK_THROWS_AS(P("0,1"), FormatError);
  CHECK_THROWS_AS(P(""), FormatError);
  CHECK_THROWS_AS(P("1a2"), FormatError);
}

TEST_CASE("canonical form trims trailing fixed points") {
  CHECK(P("1432").size() == 4);
  CHECK(P("14325") == P("1432"));
  CHECK(P("123456") == Permutation::identity());
  CHECK(P("21").to_string() == "21");
  CHECK(Permutation::identity().to_string() == "1");
  // embedding and re-trimming is the identity operation
  Permutation pi = P("2143");
  CHECK(Permutation(pi.one_line(7)) == pi);
}

TEST_CASE("length counts inversions and is stable under embedding") {
  CHECK(Permutation::identity().length() == 0);
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(P("1423").length() == 2);
  CHECK(Permutation(P("1423").one_line(6)).length() == 2);
}

TEST_CASE("compose and inverse") {
  Permutation pi = P("1423");
  CHECK(pi * Permutation::identity() == pi);
  CHECK(P("21") * P("21") == Permutation::identity());
  CHECK(pi * Permutation::transposition(1, 2) == P("4123"));
  CHECK(Permutation::identity().inverse() == Permutation::identity());
  CHECK(P("21").inverse() == P("21"));
  CHECK(P("2413").inverse() == P("3142"));
  for (const Permutation& sigma : symmetric_group(4))
    CHECK(sigma * sigma.inverse() == Permutation::identity());
}

TEST_CASE("covers_above matches the swap criterion") {
  CHECK(covers_above(Permutation::identity(), 3) ==
        std::vector<Permutation>{P("132"), P("213")});
  CHECK(covers_above(P("1423"), 4) ==
        std::vector<Permutation>{P("1432"), P("2413"), P("4123")});
  CHECK(covers_above(Permutation::longest(3), 3).empty());
  CHECK_THROWS_AS(covers_above(P("21453"), 4), DomainError);
  for (const Permutation& sigma : covers_above(P("25314"), 5))
    CHECK(sigma.length() == P("25314").length() + 1);
}

TEST_CASE("bruhat_leq rank dominance") {
  for (const Permutation& rho : symmetric_group(4))
    CHECK(bruhat_leq(Permutation::identity(), rho));
  CHECK(bruhat_leq(P("2413"), P("4213")));
  CHECK_FALSE(bruhat_leq(P("2413"), P("4132")));
}

TEST_CASE("bruhat_leq is a partial order on S_4") {
  const auto s4 = symmetric_group(4);
  for (const Permutation& a : s4) {
    CHECK(bruhat_leq(a, a));
    for (const Permutation& b : s4) {
      if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
      for (const Permutation& c : s4)
        if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
    }
  }
}

TEST_CASE("covers agree with the length-filtered order on S_5") {
  const auto s5 = symmetric_group(5);
  for (const Permutation& pi : s5) {
    std::vector<Permutation> expected;
    for (const Permutation& sigma : s5)
      if (sigma.length() == pi.length() + 1 && bruhat_leq(pi, sigma))
        expected.push_back(sigma);
    std::sort(expected.begin(), expected.end());
    CHECK(covers_above(pi, 5) == expected);
  }
}

TEST_CASE("rothe diagram") {
  for (int n = 2; n <= 5; ++n) {
    Diagram expected;
    for (int a = 1; a < n; ++a)
      for (int b = 1; a + b <= n; ++b) expected.insert({a, b});
    CHECK(rothe_diagram(Permutation::longest(n)) == expected);
  }
  CHECK(rothe_diagram(Permutation::identity()).empty());
  CHECK(rothe_diagram(P("1423")) == Diagram{{2, 2}, {2, 3}});
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& pi : symmetric_group(n))
      CHECK(static_cast<long long>(rothe_diagram(pi).size()) == pi.length());
}

TEST_CASE("essential set is the SE corners") {
  CHECK(essential_set(Permutation::identity()).empty());
  CHECK(essential_set(P("1423")) == Diagram{{2, 3}});
  CHECK(essential_set(Permutation::longest(3)) == Diagram{{1, 2}, {2, 1}});
}

TEST_CASE("dominant part") {
  CHECK(dominant_part(P("1423")).empty());
  CHECK(dominant_part(Permutation::longest(3)) == Diagram{{1, 1}, {1, 2}, {2, 1}});
  CHECK(dominant_part(P("2143")) == Diagram{{1, 1}});
}

TEST_CASE("dominant part is NW-closed and the component of the corner") {
  for (const Permutation& pi : symmetric_group(5)) {
    Diagram d = rothe_diagram(pi);
    Diagram dom = dominant_part(pi);
    for (const Cell& c : dom) {
      CHECK(d.count(c));
      for (int a = 1; a <= c.row; ++a)
        for (int b = 1; b <= c.col; ++b) CHECK(dom.count({a, b}));
    }
    // agrees with 4-adjacency connectivity to (1,1)
    Diagram component;
    std::vector<Cell> stack;
    if (d.count({1, 1})) {
      component.insert({1, 1});
      stack.push_back({1, 1});
    }
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                      Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
        if (d.count(nb) && !component.count(nb)) {
          component.insert(nb);
          stack.push_back(nb);
        }
    }
    CHECK(dom == component);
  }
}

TEST_CASE("partial permutations validate their entries") {
  CHECK_THROWS_AS(PartialPermutation(2, {{1, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(PartialPermutation(2, {{1, 1}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(PartialPermutation(2, {{3, 1}}), DomainError);
}

TEST_CASE("extend_partial examples") {
  // a full permutation matrix extends to itself
  PartialPermutation full(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(extend_partial(full) == P("231"));
  CHECK(extend_partial(PartialPermutation(2, {{1, 2}})) == P("231"));
  CHECK(extend_partial(PartialPermutation(2, {})) == P("3412"));
}

TEST_CASE("extend_partial preserves the diagram for every small partial") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Cell> square;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) square.push_back({a, b});
    for (unsigned long long mask = 0; mask < (1ull << square.size()); ++mask) {
      std::set<Cell> ones;
      for (size_t k = 0; k < square.size(); ++k)
        if (mask >> k & 1) ones.insert(square[k]);
      std::set<int> rows, cols;
      bool ok = true;
      for (const Cell& c : ones)
        if (!rows.insert(c.row).second || !cols.insert(c.col).second) ok = false;
      if (!ok) continue;
      PartialPermutation p(n, ones);
      Permutation rho = extend_partial(p);
      CHECK(rho.in_sn(n + p.corank()));
      CHECK(rothe_diagram(rho) == rothe_diagram(p));
      CHECK(rho.length() == static_cast<long long>(rothe_diagram(p).size()));
    }
  }
}

TEST_CASE("unique extension: brute force agreement at n=2") {
  // the extension is the only rho in S_4 with the partial's diagram
  PartialPermutation p(2, {});
  Diagram target = rothe_diagram(p);
  std::vector<Permutation> found;
  for (const Permutation& rho : symmetric_group(4))
    if (rothe_diagram(rho) == target) found.push_back(rho);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == extend_partial(p));
}

TEST_CASE("diagram stability under embedding") {
  for (const Permutation& pi : symmetric_group(4)) {
    Permutation embedded(pi.one_line(5));
    CHECK(rothe_diagram(embedded) == rothe_diagram(pi));
    CHECK(essential_set(embedded) == essential_set(pi));
    CHECK(dominant_part(embedded) == dominant_part(pi));
  }
}
