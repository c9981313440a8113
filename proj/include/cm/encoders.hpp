#pragma once

#include "cm/mcsp.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cm {

// ---------------------------------------------------------------- ILP

/// Binary variable of the 0/1 program: x_i per set, y_e per element.
struct IlpVar {
  enum class Kind { X, Y };
  Kind kind;
  int index; // set index i or element e, both 1-based
  friend bool operator==(const IlpVar &, const IlpVar &) = default;
};

struct LinearConstraint {
  enum class Role { Disjoint, Cover, Uncover }; // one role per constraint family
  enum class Sense { LessEq, GreaterEq };
  Role role;
  std::string name;
  std::vector<std::pair<IlpVar, int>> terms; // (variable, coefficient)
  Sense sense;
  int rhs;
};

/// Maximize sum x_i subject to
///   disjointness: sum of x_i over sets containing e <= 1 (elements in >= 2 sets),
///   cover:        sum_{e in S_i} y_e - C_i x_i >= 0,
///   uncover:      sum_{e in S_i} y_e - x_i <= C_i - 1,
/// with C_i = |S_i|.
struct IlpModel {
  int num_sets = 0;
  int universe_size = 0;
  std::vector<int> set_sizes; // C_i, index i-1
  std::vector<LinearConstraint> constraints;

  std::size_t count(LinearConstraint::Role role) const;
  int num_binaries() const { return num_sets + universe_size; }
};

IlpModel encode_ilp(const SetFamily &f);
/// CPLEX-LP text: Maximize / Subject To / Binary / End.
std::string write_lp(const IlpModel &model);

// --------------------------------------------------------------- WCNF

/// Weighted partial MaxSAT form of the MinCostSAT encoding. Set variables
/// are renamed so that x'_i true means "S_i not selected"; each soft clause
/// is the unit (-x'_i) with weight 1, so the cost of a model is m minus the
/// packing size.
struct WcnfInstance {
  enum class Role { SetVar, ElementVar, CounterAux };

  int num_vars = 0;
  std::vector<std::vector<int>> hard;
  std::vector<std::pair<std::vector<int>, std::uint64_t>> soft;
  std::vector<Role> roles;  // index var-1
  std::vector<int> origin;  // set index, element or owning element of an aux, index var-1
  int num_sets = 0;
  int universe_size = 0;
  /// One entry per AtMostOne: (constrained literals, counter auxiliaries).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> counters;

  std::uint64_t top() const { return static_cast<std::uint64_t>(num_sets) + 1; }
  int set_var(int i) const { return i; }
  int element_var(int e) const { return num_sets + e; }
  /// f(v): 1 for renamed set variables, 0 otherwise.
  int cost(int var) const { return roles.at(static_cast<std::size_t>(var - 1)) == Role::SetVar ? 1 : 0; }
};

/// Sequential-counter AtMostOne over `lits`, fresh auxiliaries from `next_var`.
/// Emits 2 + 3(k-2) clauses and k-1 auxiliaries for k >= 2 literals; nothing
/// for k <= 1.
void at_most_one_sequential(const std::vector<int> &lits, int &next_var,
                            std::vector<std::vector<int>> &out, std::vector<int> *aux = nullptr);

WcnfInstance encode_mincost_sat(const SetFamily &f);
/// `p wcnf <vars> <clauses> <top>` with a `c` comment block naming each variable's role.
std::string write_wcnf(const WcnfInstance &w);

// ------------------------------------------------------- validation

constexpr int kExhaustiveMaxVars = 24;

/// Optimum of the 0/1 program by enumerating all 2^(m+n) assignments.
/// Throws ResourceLimitError beyond 24 binaries.
std::size_t solve_encoding_exhaustive(const IlpModel &model);

/// Minimum soft cost over all models of the hard clauses. Exhaustive over the
/// set and element variables (capped at 24 together); counter auxiliaries are
/// settled by backtracking, since they are functionally constrained.
std::uint64_t solve_encoding_exhaustive(const WcnfInstance &w);

/// True iff the assignment satisfies every hard clause.
bool satisfies_hard(const WcnfInstance &w, const std::vector<bool> &assignment);
/// Sum of weights of violated soft clauses.
std::uint64_t soft_cost(const WcnfInstance &w, const std::vector<bool> &assignment);
/// The assignment induced by a selection: x'_i, y_e and counter values.
std::vector<bool> assignment_for(const WcnfInstance &w, const SetFamily &f, const IndexSet &selection);

// ------------------------------------------------------ solution import

struct ImportedSolution {
  PackingSolution packing; // optimal = false: optimality is not certified by import
  bool closed = false;
};

/// `v <lit>... 0` lines against a WCNF encoding; set i is selected iff x'_i is false.
ImportedSolution import_wcnf_solution(const SetFamily &f, std::string_view text);
/// `<name> <value>` lines (optionally `name = value`) against the LP naming
/// `x<i>` / `y<e>`; set i is selected iff x<i> is 1.
ImportedSolution import_lp_solution(const SetFamily &f, std::string_view text);

} // namespace cm
