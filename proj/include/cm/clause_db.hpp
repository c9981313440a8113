#pragma once

#include "cm/index_set.hpp"
#include "cm/knowledge_base.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cm {

using Clause = std::vector<int>; // DIMACS literals

/// Group-tagged CNF. Group g (1-based) holds the clauses of KB formula g;
/// group 0 holds hard definitional clauses. Group g is switched on by its
/// selector variable, numbered after all encoding variables.
struct ClauseDB {
  int num_vars = 0; // encoding variables 1..num_vars
  int num_groups = 0;
  std::vector<Clause> clauses;
  std::vector<int> group_of_clause; // parallel to clauses, 0 = hard
  /// Names of the leading atom variables (index var-1); may be shorter than num_vars.
  std::vector<std::string> variable_names;

  int selector_of_group(int group) const { return num_vars + group; }
  int total_vars() const { return num_vars + num_groups; }

  /// Structural equality of the CNF content (names are not compared).
  bool same_content(const ClauseDB &other) const;
};

/// Definitional translation of every formula, one group per formula.
ClauseDB to_clause_db(const KnowledgeBase &kb);

/// `p gcnf <vars> <clauses> <groups>` followed by `{g} lits 0` lines.
std::string write_gcnf(const ClauseDB &db);
ClauseDB read_gcnf(std::string_view text);

/// Plain DIMACS with every group asserted (groups flattened).
std::string write_dimacs(const ClauseDB &db);
/// Plain DIMACS with the hard clauses and only the groups in `enabled`.
std::string write_dimacs_query(const ClauseDB &db, const IndexSet &enabled);

} // namespace cm
