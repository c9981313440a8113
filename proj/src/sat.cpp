#include "cm/sat.hpp"

#include "cm/error.hpp"

#include <cstdlib>
#include <sstream>

namespace cm {

GroupSolver::GroupSolver(const ClauseDB &db)
    : solver_(db.total_vars()), num_vars_(db.num_vars), num_groups_(db.num_groups) {
  std::vector<int> lits;
  for (std::size_t i = 0; i < db.clauses.size(); ++i) {
    lits = db.clauses[i];
    if (const int g = db.group_of_clause[i]; g != 0) lits.push_back(-db.selector_of_group(g));
    solver_.add_clause(lits);
  }
}

SatResult GroupSolver::solve(const IndexSet &enabled) {
  std::vector<int> assumptions;
  assumptions.reserve(static_cast<std::size_t>(num_groups_));
  for (int g = 1; g <= num_groups_; ++g)
    assumptions.push_back(enabled.contains(g) ? selector(g) : -selector(g));
  ++calls_;
  const auto status = solver_.solve(assumptions);
  return finish(status);
}

SatResult GroupSolver::solve_free() {
  ++calls_;
  return finish(solver_.solve());
}

SatResult GroupSolver::finish(SatSolver::Status status) {
  SatResult r;
  if (status == SatSolver::Status::Sat) {
    r.status = SatResult::Status::Sat;
    r.model = solver_.model();
  } else {
    r.status = SatResult::Status::Unsat;
    IndexSet core;
    for (int lit : solver_.failed_assumptions())
      if (lit > num_vars_) core.insert(lit - num_vars_);
    r.conflict_subset = std::move(core);
  }
  return r;
}

SatResult is_satisfiable(const ClauseDB &db, const IndexSet &assumptions) {
  GroupSolver solver(db);
  return solver.solve(assumptions);
}

ConsistencyChecker::ConsistencyChecker(const KnowledgeBase &kb, std::uint64_t call_limit)
    : db_(to_clause_db(kb)), solver_(db_), limit_(call_limit) {}

SatResult ConsistencyChecker::query(const IndexSet &s) {
  if (calls_ >= limit_)
    throw ResourceLimitError("SAT oracle call limit (" + std::to_string(limit_) + ") exceeded");
  ++calls_;
  return solver_.solve(s);
}

bool ConsistencyChecker::consistent(const IndexSet &s) { return query(s).sat(); }

bool is_subset_consistent(const KnowledgeBase &kb, const IndexSet &s) {
  if (!kb.is_valid(s)) throw PreconditionError("formula subset " + s.to_string() + " out of range");
  return ConsistencyChecker(kb).consistent(s);
}

SatResult read_solver_output(std::string_view text, int num_vars) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<bool> sat;
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string head;
    if (!(toks >> head) || head == "c") continue;
    if (head == "s") {
      std::string word;
      toks >> word;
      if (word == "SATISFIABLE") sat = true;
      else if (word == "UNSATISFIABLE") sat = false;
      else throw ParseError("unknown status '" + word + "'", line_no);
    } else if (head == "v") {
      std::string tok;
      while (toks >> tok) {
        int lit = 0;
        try {
          lit = std::stoi(tok);
        } catch (const std::exception &) {
          throw ParseError("bad literal '" + tok + "'", line_no);
        }
        if (lit == 0) break;
        if (std::abs(lit) > num_vars) throw ParseError("literal out of range", line_no);
        model[static_cast<std::size_t>(std::abs(lit))] = lit > 0;
      }
    } else {
      throw ParseError("unexpected line '" + line + "'", line_no);
    }
  }
  if (!sat) throw ParseError("missing 's' status line");
  SatResult r;
  r.status = *sat ? SatResult::Status::Sat : SatResult::Status::Unsat;
  if (*sat) r.model = std::move(model);
  return r;
}

} // namespace cm
