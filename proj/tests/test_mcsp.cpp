#include "cm/error.hpp"
#include "cm/generator.hpp"
#include "cm/mcsp.hpp"
#include "cm/measures.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cm;

namespace {

SetFamily random_family(Rng &rng) {
  const int n = rng.between(1, 8);
  const int m = rng.between(0, 6);
  std::vector<IndexSet> sets;
  for (int i = 0; i < m; ++i) {
    std::vector<int> s;
    for (int e = 1; e <= n; ++e)
      if (rng.below(3) == 0) s.push_back(e);
    if (s.empty()) s.push_back(rng.between(1, n));
    sets.emplace_back(s);
  }
  return SetFamily(n, sets);
}

} // namespace

TEST_CASE("set family validation") {
  CHECK_THROWS(SetFamily(3, {IndexSet{}}));
  CHECK_THROWS(SetFamily(3, {IndexSet{4}}));
  const SetFamily f(3, {{1, 2}, {2, 1}, {3}});
  CHECK(f.size() == 2);
  CHECK(f.sets_containing(2) == std::vector<int>{1});
}

TEST_CASE("closedness") {
  const KnowledgeBase k = fixtures::example6();
  const Decomposition d = mus_decomposition(k, enumerate_muses(k));
  const ComponentFamily c2 = component_family(enumerate_muses(k), d.components[1]);
  // Elements 1..5 stand for formulas 6..10.
  CHECK(is_closed_packing(c2.family, {1}));
  const SetFamily whole(10, enumerate_muses(k).muses);
  std::vector<int> pick;
  for (int i = 1; i <= static_cast<int>(whole.size()); ++i)
    if (whole.set(i) == IndexSet{6, 7} || whole.set(i) == IndexSet{8, 9}) pick.push_back(i);
  REQUIRE(pick.size() == 2);
  CHECK(is_set_packing(whole, IndexSet(pick)));
  CHECK_FALSE(is_closed_packing(whole, IndexSet(pick)));
  CHECK(is_closed_packing(whole, {}));
}

TEST_CASE("maximum closed packings of known families") {
  CHECK(mcsp_bruteforce(SetFamily(9, enumerate_muses(fixtures::example2()).muses)).cardinality == 3);
  CHECK(mcsp_bruteforce(SetFamily(10, enumerate_muses(fixtures::example6()).muses)).cardinality == 3);
  CHECK(mcsp_branch_bound(SetFamily(10, enumerate_muses(fixtures::example6()).muses)).cardinality == 3);
  const SetFamily disjoint(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(mcsp_bruteforce(disjoint).cardinality == 4);
  CHECK(mcsp_branch_bound(disjoint).cardinality == 4);
  CHECK(mcsp_branch_bound(SetFamily(0, {})).cardinality == 0);
  CHECK(mcsp_bruteforce(SetFamily(0, {})).cardinality == 0);
}

TEST_CASE("brute force refuses large families") {
  std::vector<IndexSet> sets;
  for (int i = 1; i <= 21; ++i) sets.push_back(IndexSet{i});
  CHECK_THROWS_AS(mcsp_bruteforce(SetFamily(21, sets)), ResourceLimitError);
}

TEST_CASE("solvers agree with the definition on random families") {
  Rng rng(11);
  for (int round = 0; round < 600; ++round) {
    const SetFamily f = random_family(rng);
    const PackingSolution bf = mcsp_bruteforce(f), bb = mcsp_branch_bound(f);
    const std::size_t expected = oracle::mcsp(f);
    REQUIRE(bf.cardinality == expected);
    REQUIRE(bb.cardinality == expected);
    CHECK(bb.optimal);
    CHECK(bf.selected == bb.selected); // same tie-break
    CHECK(is_closed_packing(f, bb.selected));
    CHECK(bb.selected.size() == bb.cardinality);
  }
}

TEST_CASE("reduction from set packing") {
  const SetFamily dup(1, {{1}, {1}});
  CHECK(reduce_msp_to_mcsp(dup).sets() == std::vector<IndexSet>{{1, 2}});
  const SetFamily f(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(oracle::msp(f) == 2);
  CHECK(mcsp_bruteforce(reduce_msp_to_mcsp(f)).cardinality == 2);
  const SetFamily disjoint(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(mcsp_branch_bound(reduce_msp_to_mcsp(disjoint)).cardinality == 3);

  Rng rng(12);
  for (int round = 0; round < 500; ++round) {
    const SetFamily g = random_family(rng);
    const SetFamily r = reduce_msp_to_mcsp(g);
    CHECK(r.size() == g.size());
    CHECK(oracle::msp(g) == mcsp_branch_bound(r).cardinality);
  }
}

TEST_CASE("generated families solve consistently") {
  for (int m : {5, 10, 15, 20}) {
    const SetFamily f = generate_set_family({m, 10, 2, 3, static_cast<std::uint64_t>(m)});
    CHECK(mcsp_branch_bound(f).cardinality == mcsp_bruteforce(f).cardinality);
  }
  const SetFamily big = generate_set_family({50, 20, 2, 3, 1});
  const PackingSolution s = mcsp_branch_bound(big, {std::chrono::milliseconds(60000)});
  CHECK(s.optimal);
  CHECK(is_closed_packing(big, s.selected));
}

TEST_CASE("family files") {
  const SetFamily f = parse_family("# two sets\n2 3\n1 2\n2 3\n");
  CHECK(f.size() == 2);
  CHECK(f.universe_size() == 3);
  CHECK(parse_family(write_family(f)) == f);
  CHECK_THROWS_AS(parse_family("2 3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_family("1 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_family("x\n"), ParseError);
}
