#include "cm/clause_db.hpp"
#include "cm/error.hpp"
#include "cm/generator.hpp"
#include "cm/sat.hpp"
#include "cm/sat_solver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cm;

namespace {

bool brute_force_sat(int vars, const std::vector<std::vector<int>> &clauses, const std::vector<int> &assumptions) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vars); ++m) {
    auto value = [&](int lit) { return (((m >> (std::abs(lit) - 1)) & 1) != 0) == (lit > 0); };
    bool ok = std::all_of(assumptions.begin(), assumptions.end(), value);
    for (const auto &c : clauses) ok = ok && std::any_of(c.begin(), c.end(), value);
    if (ok) return true;
  }
  return false;
}

} // namespace

TEST_CASE("solver agrees with brute force on random 3-CNF under assumptions") {
  Rng rng(7);
  for (int round = 0; round < 400; ++round) {
    const int vars = rng.between(1, 10);
    const int n = rng.between(0, 45);
    std::vector<std::vector<int>> clauses;
    SatSolver s(vars);
    for (int i = 0; i < n; ++i) {
      std::vector<int> c;
      for (int k = rng.between(1, 3); k > 0; --k) {
        const int v = rng.between(1, vars);
        c.push_back(rng.below(2) ? v : -v);
      }
      clauses.push_back(c);
      s.add_clause(c);
    }
    // Several incremental queries on the same solver.
    for (int q = 0; q < 4; ++q) {
      std::vector<int> assumptions;
      for (int k = rng.between(0, 3); k > 0; --k) {
        const int v = rng.between(1, vars);
        assumptions.push_back(rng.below(2) ? v : -v);
      }
      const bool expected = brute_force_sat(vars, clauses, assumptions);
      const auto status = s.solve(assumptions);
      REQUIRE((status == SatSolver::Status::Sat) == expected);
      if (expected) {
        const auto &model = s.model();
        for (int a : assumptions) CHECK(model[std::abs(a)] == (a > 0));
        for (const auto &c : clauses)
          CHECK(std::any_of(c.begin(), c.end(), [&](int l) { return model[std::abs(l)] == (l > 0); }));
      } else {
        // The failed assumptions alone are already contradictory.
        CHECK_FALSE(brute_force_sat(vars, clauses, s.failed_assumptions()));
        for (int a : s.failed_assumptions())
          CHECK(std::find(assumptions.begin(), assumptions.end(), a) != assumptions.end());
      }
    }
  }
}

TEST_CASE("group queries") {
  const KnowledgeBase k = parse_kb("a\n!a");
  const ClauseDB db = to_clause_db(k);
  CHECK(db.num_groups == 2);
  CHECK_FALSE(is_satisfiable(db, {1, 2}).sat());
  const SatResult r = is_satisfiable(db, {1});
  REQUIRE(r.sat());
  CHECK((*r.model)[1]); // variable a

  const ClauseDB conj = to_clause_db(parse_kb("a & d"));
  CHECK(conj.num_groups == 1);
  const SatResult rc = is_satisfiable(conj, {1});
  REQUIRE(rc.sat());
  CHECK((*rc.model)[1]);
  CHECK((*rc.model)[2]);

  const KnowledgeBase e2 = fixtures::example2();
  const ClauseDB db2 = to_clause_db(e2);
  CHECK(db2.num_groups == 9);
  CHECK_FALSE(is_satisfiable(db2, e2.all_indices()).sat());
  CHECK_FALSE(is_satisfiable(db2, {2, 1}).sat());
  CHECK(oracle::consistent(e2, e2.all_indices()) == false);
}

TEST_CASE("subset consistency") {
  const KnowledgeBase e2 = fixtures::example2();
  CHECK(is_subset_consistent(e2, {}));
  CHECK_FALSE(is_subset_consistent(e2, {5, 7}));
  CHECK(is_subset_consistent(e2, {3, 4, 5, 6, 9}));
  CHECK_THROWS_AS(is_subset_consistent(e2, {10}), PreconditionError);
}

TEST_CASE("consistency oracle matches truth tables") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const KnowledgeBase kb = generate_random_kb(4, 6, seed);
    ConsistencyChecker checker(kb);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << kb.size()); ++m) {
      const IndexSet s = oracle::from_mask(m);
      REQUIRE(checker.consistent(s) == oracle::consistent(kb, s));
    }
  }
}

TEST_CASE("oracle call limit") {
  ConsistencyChecker checker(fixtures::example2(), 3);
  checker.consistent({1});
  checker.consistent({2});
  checker.consistent({3});
  CHECK_THROWS_AS(checker.consistent({4}), ResourceLimitError);
}

TEST_CASE("group CNF files") {
  const ClauseDB db = to_clause_db(parse_kb("a\n!a"));
  CHECK(write_gcnf(db).rfind("p gcnf " + std::to_string(db.num_vars) + " " + std::to_string(db.clauses.size()) + " 2", 0) == 0);

  const ClauseDB e2 = to_clause_db(fixtures::example2());
  const ClauseDB back = read_gcnf(write_gcnf(e2));
  CHECK(back.num_groups == 9);
  CHECK(back.same_content(e2));

  const ClauseDB one = read_gcnf("p gcnf 4 1 1\n{1} 3 -4 0\n");
  REQUIRE(one.clauses.size() == 1);
  CHECK(one.clauses[0] == Clause{3, -4});
  CHECK(one.group_of_clause[0] == 1);

  CHECK_THROWS_AS(read_gcnf("{1} 1 0\n"), ParseError);
  CHECK_THROWS_AS(read_gcnf("p gcnf 2 1 1\n{2} 1 0\n"), ParseError);
  CHECK_THROWS_AS(read_gcnf("p gcnf 2 1 1\n{1} 3 0\n"), ParseError);
  CHECK_THROWS_AS(read_gcnf("p gcnf 2 1 1\n{1} 1 2\n"), ParseError);
  CHECK_THROWS_AS(read_gcnf("p gcnf 2 2 1\n{1} 1 0\n"), ParseError);
}

TEST_CASE("external solver answers") {
  const SatResult sat = read_solver_output("c hello\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
  REQUIRE(sat.sat());
  CHECK((*sat.model)[1]);
  CHECK_FALSE((*sat.model)[2]);
  CHECK((*sat.model)[3]);
  CHECK_FALSE(read_solver_output("s UNSATISFIABLE\n", 3).sat());
  CHECK_THROWS_AS(read_solver_output("v 1 0\n", 3), ParseError);
}
