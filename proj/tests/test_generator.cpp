#include "cm/generator.hpp"
#include "cm/mus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace cm;

TEST_CASE("generator streams are reproducible") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  Rng r(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const int v = r.between(-2, 2);
    CHECK((v >= -2 && v <= 2));
  }
}

TEST_CASE("random set families") {
  const GenParams big{50, 20, 2, 3, 9};
  const SetFamily f = generate_set_family(big);
  CHECK(family_name(big) == "mfsp_50_20");
  CHECK(f.size() == 50);
  CHECK(f.universe_size() == 20);
  std::set<std::vector<int>> distinct;
  for (const auto &s : f.sets()) {
    CHECK(s.size() >= 2);
    CHECK(s.size() <= 3);
    distinct.insert(s.values());
  }
  CHECK(distinct.size() == 50);
  CHECK(generate_set_family(big) == f);
  CHECK_FALSE(generate_set_family({50, 20, 2, 3, 10}) == f);

  CHECK(generate_set_family({1, 2, 2, 2, 3}).sets() == std::vector<IndexSet>{{1, 2}});
  CHECK_THROWS_AS(generate_set_family({2, 2, 2, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_set_family({1, 2, 3, 2, 0}), std::invalid_argument);
}

TEST_CASE("random knowledge bases") {
  CHECK(generate_random_kb(2, 4, 8).formulas() == generate_random_kb(2, 4, 8).formulas());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(generate_random_kb(1, 3, seed).variables().size() <= 1);
    const KnowledgeBase kb = generate_random_kb(3, 5, seed);
    CHECK(kb.size() <= 5);
    CHECK(enumerate_muses(kb).muses == oracle::muses(kb));
  }
  CHECK_THROWS_AS(generate_random_kb(9, 3, 0), std::invalid_argument);
}
