#include "cm/error.hpp"
#include "cm/generator.hpp"
#include "cm/measures.hpp"
#include "cm/postulates.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cm;

namespace {

MeasureReport all_measures(const KnowledgeBase &kb) {
  return compute_measures(kb, parse_measure_selection("all"));
}

std::vector<IndexSet> groups_of(const std::vector<std::vector<int>> &g) {
  std::vector<IndexSet> out;
  for (const auto &v : g) out.emplace_back(v);
  return out;
}

} // namespace

TEST_CASE("measures on the nine-formula base") {
  const MeasureReport r = all_measures(fixtures::example2());
  CHECK(*r.i_mi == 5);
  CHECK(*r.i_m_prime == 8);
  CHECK(*r.i_d == 3);
  CHECK(*r.i_d == oracle::distribution_index(fixtures::example2()));
  CHECK(*r.delta_hs == oracle::min_hitting_set_size(oracle::muses(fixtures::example2())));
  CHECK(*r.i_m == static_cast<long>(oracle::msses(fixtures::example2()).size()) - 1);
  CHECK(r.mode == Mode::Exact);
  CHECK(r.components == std::vector<std::size_t>{2, 7});
}

TEST_CASE("measures on consistent bases are zero") {
  const MeasureReport r = all_measures(parse_kb("a\nb\na -> b"));
  CHECK(*r.i_mi == 0);
  CHECK(*r.i_m == 0);
  CHECK(*r.i_m_prime == 0);
  CHECK(*r.delta_hs == 0);
  CHECK(*r.i_d == 0);
  CHECK(all_measures(KnowledgeBase{}).i_d == 0u);
}

TEST_CASE("maximal-consistent-set measures") {
  CHECK(i_m(parse_kb("a\n!a\nb\n!b")) == 3);
  CHECK(i_m(parse_kb("a\n!a")) == 1);
  CHECK(i_m(parse_kb("false")) == 1);
  const KnowledgeBase k13 = parse_kb("a\n!a\nc\n!c");
  CHECK(i_m_prime(k13, mus_decomposition(k13, enumerate_muses(k13))) == 4);
}

TEST_CASE("overlapping versus independent conflicts") {
  const KnowledgeBase k12 = parse_kb("a\n!a\na & b");
  const KnowledgeBase k13 = parse_kb("a\n!a\nc\n!c");
  const MeasureReport r12 = all_measures(k12), r13 = all_measures(k13);
  CHECK(*r12.i_d == 1);
  CHECK(*r13.i_d == 2);
  CHECK(*r12.delta_hs == 1);
  CHECK(*r13.delta_hs == 2);
  CHECK(*r12.i_mi == 2);
  CHECK(*r13.i_mi == 2);
  CHECK(*r13.i_m_prime == 4);
  CHECK(*r12.i_m_prime == 2); // MSSes {a, a & b} and {!a}
}

TEST_CASE("ten-formula base") {
  const KnowledgeBase k = fixtures::example6();
  const MusSet m = enumerate_muses(k);
  CHECK(i_d(k, m) == 3);
  CHECK(i_d(k, m, Backend::BruteForce) == 3);
  const KnowledgeBase c2 = k.subset({6, 7, 8, 9, 10});
  const MusSet m2 = enumerate_muses(c2);
  CHECK(delta_hs(m2) == 2);
  CHECK(i_d(c2, m2) == 1);

  const PartialMusDecomposition d = distributable_decomposition(k, m);
  CHECK(d.groups == groups_of({{1, 2}, {4, 5}, {6, 7, 8, 9, 10}}));
  CHECK(d.mus_ids_per_group[2].size() == 4);
  CHECK(is_partial_mus_decomposition(m, d.groups));
  CHECK(groups_are_maximal(k, m, d));

  const RepairReport given = repair_merge_check(k, d, groups_of({{2}, {4}, {6, 8}}));
  CHECK(given.each_repair_consistent);
  CHECK(given.repaired_groups_consistent);
  CHECK(given.residue == IndexSet{3});
  CHECK_FALSE(given.with_residue_consistent);

  const RepairReport chosen = repair_merge_check(k, m, d);
  CHECK(chosen.repaired_groups_consistent);
  CHECK(chosen.removed[2].size() == 2);
}

TEST_CASE("chain bases") {
  for (int n = 1; n <= 6; ++n) {
    const KnowledgeBase k = fixtures::chain(n);
    const MusSet m = enumerate_muses(k);
    CHECK(i_d(k, m) == static_cast<std::size_t>(n));
    CHECK(delta_hs(m) == static_cast<std::size_t>(n));
    const PartialMusDecomposition d = distributable_decomposition(k, m);
    std::vector<IndexSet> pairs;
    for (int i = 1; i <= n; ++i) {
      const int a = *k.find(parse_formula("a" + std::to_string(i)));
      pairs.push_back(IndexSet{a, a + 1});
    }
    CHECK(d.groups == pairs);
    std::vector<IndexSet> repaired;
    for (const auto &p : pairs) repaired.push_back(IndexSet{p.front()});
    CHECK(repair_merge_check(k, d, repaired).repaired_groups_consistent);
  }
}

TEST_CASE("single MUS") {
  const KnowledgeBase k = parse_kb("a\na -> b\n!b");
  const MusSet m = enumerate_muses(k);
  const PartialMusDecomposition d = distributable_decomposition(k, m);
  CHECK(d.groups == groups_of({{1, 2, 3}}));
  for (int drop = 1; drop <= 3; ++drop)
    CHECK(repair_merge_check(k, d, {k.all_indices().minus({drop})}).repaired_groups_consistent);
}

TEST_CASE("partial MUS-decomposition conditions") {
  const KnowledgeBase k = fixtures::example6();
  const MusSet m = enumerate_muses(k);
  CHECK(is_partial_mus_decomposition(m, groups_of({{1, 2}, {4, 5}})));
  CHECK_FALSE(is_partial_mus_decomposition(m, groups_of({{1, 2}, {2, 3, 4}})));       // overlap
  CHECK_FALSE(is_partial_mus_decomposition(m, groups_of({{1, 3}})));                  // no MUS inside
  CHECK_FALSE(is_partial_mus_decomposition(m, groups_of({{1, 2}, {3, 4, 5}})));       // {2,3,4} straddles
  CHECK_FALSE(is_partial_mus_decomposition(m, groups_of({{6, 7}, {8, 9}})));          // {7,8} straddles
}

TEST_CASE("measure names") {
  CHECK(parse_measure_selection("all").size() == 5);
  CHECK(parse_measure_selection("i_d,i_mi") == std::set<Measure>{Measure::ID, Measure::IMi});
  CHECK_THROWS_AS(parse_measure_selection("i_x"), std::invalid_argument);
  for (Measure m : parse_measure_selection("all")) CHECK(parse_measure(measure_name(m)) == m);
}

TEST_CASE("imported MUS lists give lower bounds") {
  const KnowledgeBase k = fixtures::example2();
  MusSet partial = import_mus_list(k, "1 2\n5 7\n").muses;
  const MeasureReport r = compute_measures(k, {Measure::IMi, Measure::ID}, {}, &partial);
  CHECK(r.mode == Mode::LowerBound);
  CHECK(*r.i_mi == 2);
  CHECK(*r.i_d == 2);
}

TEST_CASE("ordering and decomposition properties on random bases") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int vars = 1 + static_cast<int>(seed % 6);
    const int formulas = 1 + static_cast<int>((seed / 3) % 8);
    const KnowledgeBase kb = generate_random_kb(vars, formulas, 1000 + seed);
    const MusSet m = enumerate_muses(kb);
    const std::size_t d = i_d(kb, m);
    REQUIRE(d == oracle::distribution_index(kb));
    CHECK(d == i_d(kb, m, Backend::BruteForce));
    CHECK(d <= delta_hs(m));
    CHECK(delta_hs(m) <= i_mi(m));
    CHECK(delta_hs(m) == oracle::min_hitting_set_size(m.muses));

    const PartialMusDecomposition dist = distributable_decomposition(kb, m);
    CHECK(dist.size() == d);
    CHECK(is_partial_mus_decomposition(m, dist.groups));
    CHECK(repair_merge_check(kb, m, dist).repaired_groups_consistent);
  }
}

TEST_CASE("postulates of the distribution index on random bases") {
  std::vector<KnowledgeBase> family;
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    family.push_back(generate_random_kb(1 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 6), 5000 + seed));
  const PostulateReport r = check_postulates(Measure::ID, family);
  for (const auto &p : r.results) {
    INFO(p.name);
    CHECK(p.checks > 0);
    CHECK(p.holds());
  }
}

TEST_CASE("postulate harness finds the known counterexample") {
  const std::vector<KnowledgeBase> family{parse_kb("a\n!a"), parse_kb("b\n!b")};
  const PostulateReport im = check_postulates(Measure::IM, family);
  const auto &ind = im.results.back();
  CHECK(ind.name == "Independent Decomposability");
  CHECK_FALSE(ind.holds());
  CHECK(ind.witnesses.front().find("= 3 != 1 + 1") != std::string::npos);

  const PostulateReport imi = check_postulates(Measure::IMi, family);
  CHECK(imi.results.back().holds());
  CHECK(check_postulates(Measure::IMPrime, family).results.back().holds());
}

TEST_CASE("renaming apart") {
  const KnowledgeBase k = parse_kb("a\n!a & b_r");
  const KnowledgeBase r = rename_apart(k, {"a", "b"});
  for (const auto &v : r.variables()) CHECK((v != "a" && v != "b"));
  CHECK(r.size() == 2);
}

TEST_CASE("maximal consistent sets multiply over independent parts") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int blocks = 2 + static_cast<int>(seed % 2);
    KnowledgeBase all;
    std::size_t product = 1;
    std::vector<std::string> taken;
    for (int b = 0; b < blocks; ++b) {
      const KnowledgeBase part = rename_apart(generate_random_kb(3, 3, seed * 7 + b), taken);
      for (const auto &v : part.variables()) taken.push_back(v);
      product *= enumerate_msses(part).size();
      all = all.merged(part);
    }
    CHECK(enumerate_msses(all).size() == product);
  }
}
