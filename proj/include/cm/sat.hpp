#pragma once

#include "cm/clause_db.hpp"
#include "cm/index_set.hpp"
#include "cm/knowledge_base.hpp"
#include "cm/sat_solver.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cm {

struct SatResult {
  enum class Status { Sat, Unsat };
  Status status = Status::Unsat;
  /// Present iff Sat; indexed by variable, entry 0 unused.
  std::optional<std::vector<bool>> model;
  /// Present iff Unsat (from an in-process solve): enabled groups that
  /// already suffice for unsatisfiability. Not necessarily minimal.
  std::optional<IndexSet> conflict_subset;

  bool sat() const { return status == Status::Sat; }
};

/// Incremental solver over a ClauseDB. Each query enables a set of groups
/// and disables all others.
class GroupSolver {
public:
  explicit GroupSolver(const ClauseDB &db);

  SatResult solve(const IndexSet &enabled);
  /// Solve with the selectors left free, under extra permanent clauses
  /// (used for seed search during enumeration).
  SatResult solve_free();
  void add_clause(std::span<const int> lits) { solver_.add_clause(lits); }

  int num_groups() const { return num_groups_; }
  int selector(int group) const { return num_vars_ + group; }
  std::uint64_t calls() const { return calls_; }

private:
  SatResult finish(SatSolver::Status status);

  SatSolver solver_;
  int num_vars_;
  int num_groups_;
  std::uint64_t calls_ = 0;
};

SatResult is_satisfiable(const ClauseDB &db, const IndexSet &assumptions);

/// Consistency oracle for formula subsets of one KB, counting its calls.
class ConsistencyChecker {
public:
  static constexpr std::uint64_t kDefaultCallLimit = 1'000'000;

  explicit ConsistencyChecker(const KnowledgeBase &kb,
                              std::uint64_t call_limit = kDefaultCallLimit);

  bool consistent(const IndexSet &s);
  SatResult query(const IndexSet &s);

  std::uint64_t calls() const { return calls_; }
  const ClauseDB &clause_db() const { return db_; }

private:
  ClauseDB db_;
  GroupSolver solver_;
  std::uint64_t limit_;
  std::uint64_t calls_ = 0;
};

bool is_subset_consistent(const KnowledgeBase &kb, const IndexSet &s);

/// Reads an external solver answer: `s SATISFIABLE|s UNSATISFIABLE`, then
/// `v <lit>... 0` lines. `c` lines are comments.
SatResult read_solver_output(std::string_view text, int num_vars);

} // namespace cm
