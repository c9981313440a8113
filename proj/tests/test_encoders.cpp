#include "cm/encoders.hpp"
#include "cm/error.hpp"
#include "cm/generator.hpp"
#include "cm/mcsp.hpp"
#include "cm/measures.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cm;
using Role = LinearConstraint::Role;

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

std::size_t expected_clauses(std::size_t k) { return k < 2 ? 0 : 2 + 3 * (k - 2); }

} // namespace

TEST_CASE("ILP model of two overlapping sets") {
  const SetFamily f(3, {{1, 2}, {2, 3}});
  const IlpModel m = encode_ilp(f);
  CHECK(m.count(Role::Disjoint) == 1);
  CHECK(m.count(Role::Cover) == 2);
  CHECK(m.count(Role::Uncover) == 2);
  CHECK(m.num_binaries() == 5);
  CHECK(solve_encoding_exhaustive(m) == 1);
  const std::string lp = write_lp(m);
  CHECK(lp.find("Maximize") != std::string::npos);
  CHECK(lp.find("obj: x1 + x2") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);

  const IlpModel pairs = encode_ilp(SetFamily(4, {{1, 2}, {3, 4}}));
  CHECK(pairs.count(Role::Disjoint) == 0);
  CHECK(solve_encoding_exhaustive(pairs) == 2);
  CHECK(solve_encoding_exhaustive(encode_ilp(SetFamily(0, {}))) == 0);
}

TEST_CASE("ILP model of a component with distribution index one") {
  const KnowledgeBase k = fixtures::example6();
  const MusSet m = enumerate_muses(k);
  const Decomposition d = mus_decomposition(k, m);
  CHECK(solve_encoding_exhaustive(encode_ilp(component_family(m, d.components[1]).family)) == 1);
}

TEST_CASE("sequential counter sizes") {
  for (std::size_t k = 0; k <= 7; ++k) {
    std::vector<int> lits;
    for (std::size_t i = 1; i <= k; ++i) lits.push_back(static_cast<int>(i));
    int next = static_cast<int>(k) + 1;
    std::vector<std::vector<int>> out;
    std::vector<int> aux;
    at_most_one_sequential(lits, next, out, &aux);
    CHECK(out.size() == expected_clauses(k));
    CHECK(aux.size() == (k < 2 ? 0 : k - 1));
    CHECK(next == static_cast<int>(k) + 1 + static_cast<int>(aux.size()));
  }
  const WcnfInstance w = encode_mincost_sat(SetFamily(4, {{1, 2}, {1, 3}, {1, 4}}));
  REQUIRE(w.counters.size() == 1); // only element 1 is shared
  CHECK(w.counters[0].first.size() == 3);
  CHECK(w.counters[0].second.size() == 2);
}

TEST_CASE("WCNF encoding") {
  const SetFamily f(3, {{1, 2}, {2, 3}});
  const WcnfInstance w = encode_mincost_sat(f);
  CHECK(w.top() == 3);
  CHECK(w.soft.size() == 2);
  CHECK(solve_encoding_exhaustive(w) == 1);
  const std::string text = write_wcnf(w);
  CHECK(text.find("p wcnf " + std::to_string(w.num_vars)) != std::string::npos);

  const SetFamily disjoint(4, {{1, 2}, {3, 4}});
  const WcnfInstance wd = encode_mincost_sat(disjoint);
  CHECK(solve_encoding_exhaustive(wd) == 0);
  const auto all = assignment_for(wd, disjoint, {1, 2});
  CHECK(satisfies_hard(wd, all));
  CHECK_FALSE(all[1]);
  CHECK_FALSE(all[2]);
}

TEST_CASE("encodings agree with the solvers on random families") {
  Rng rng(21);
  for (int round = 0; round < 600; ++round) {
    const SetFamily f = random_family(rng);
    const std::size_t bf = mcsp_bruteforce(f).cardinality;
    REQUIRE(mcsp_branch_bound(f).cardinality == bf);
    const IlpModel ilp = encode_ilp(f);
    if (ilp.num_binaries() <= static_cast<std::size_t>(kExhaustiveMaxVars)) REQUIRE(solve_encoding_exhaustive(ilp) == bf);
    const WcnfInstance w = encode_mincost_sat(f);
    REQUIRE(solve_encoding_exhaustive(w) == f.size() - bf);

    for (const auto &[lits, aux] : w.counters) {
      CHECK(aux.size() == lits.size() - 1);
    }
    std::size_t counted = 0;
    for (int e = 1; e <= f.universe_size(); ++e) counted += expected_clauses(f.sets_containing(e).size());
    std::size_t cover = 0;
    for (const auto &s : f.sets()) cover += s.size() + 1;
    CHECK(w.hard.size() == counted + cover);

    // The assignment induced by any closed packing is a model of cost m - |packing|.
    const PackingSolution best = mcsp_bruteforce(f);
    const auto a = assignment_for(w, f, best.selected);
    CHECK(satisfies_hard(w, a));
    CHECK(soft_cost(w, a) == f.size() - best.cardinality);
  }
}

TEST_CASE("reading solver answers back") {
  const SetFamily f(3, {{1, 2}, {2, 3}});
  const ImportedSolution w = import_wcnf_solution(f, "s OPTIMUM FOUND\nv 1 -2 3 4 5 0\n");
  CHECK(w.packing.selected == IndexSet{2});
  CHECK(w.closed);
  const ImportedSolution lp = import_lp_solution(f, "x1 1\nx2 0\ny1 1\ny2 1\n");
  CHECK(lp.packing.selected == IndexSet{1});
  CHECK(lp.closed);
  const ImportedSolution both = import_lp_solution(f, "x1 = 1\nx2 = 1\n");
  CHECK(both.packing.selected == IndexSet{1, 2});
  CHECK_FALSE(both.closed);
}
