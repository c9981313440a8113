#pragma once

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <vector>

namespace cm {

/// Small CDCL solver with assumption support.
///
/// Literals are DIMACS integers. Branching picks the lowest unassigned
/// variable and tries the positive phase first, so models are reproducible.
/// Learnt clauses are kept across calls; there are no restarts.
class SatSolver {
public:
  enum class Status { Sat, Unsat };

  explicit SatSolver(int num_vars = 0);

  int num_vars() const { return num_vars_; }
  int new_var();
  void reserve_vars(int n);

  /// Adds a permanent clause. Returns false once the clause set is
  /// unsatisfiable at the root.
  bool add_clause(std::span<const int> lits);
  bool add_clause(std::initializer_list<int> lits) {
    return add_clause(std::span<const int>(lits.begin(), lits.size()));
  }

  Status solve(std::span<const int> assumptions = {});

  /// Valid after a Sat answer. Index by variable (entry 0 unused).
  const std::vector<bool> &model() const { return model_; }
  /// After an Unsat answer: assumption literals sufficient for unsatisfiability.
  const std::vector<int> &failed_assumptions() const { return failed_; }

  std::uint64_t conflicts() const { return conflicts_; }
  std::uint64_t decisions() const { return decisions_; }

private:
  using Lit = int; // 2*(var-1) + sign
  static constexpr int kNoReason = -1;

  static Lit encode(int dimacs) { return 2 * (std::abs(dimacs) - 1) + (dimacs < 0 ? 1 : 0); }
  static int decode(Lit l) { return (l & 1) ? -(l / 2 + 1) : (l / 2 + 1); }
  static int var_of(Lit l) { return l >> 1; }

  // 1 true, 0 false, -1 unassigned
  int value(Lit l) const {
    const int v = assigns_[var_of(l)];
    return v < 0 ? -1 : (v ^ (l & 1));
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, int reason);
  int propagate(); // conflicting clause index or kNoReason
  void analyze(int conflict, std::vector<Lit> &learnt, int &backjump);
  void analyze_final(Lit assumption);
  void cancel_until(int lvl);
  int attach(std::vector<Lit> lits);

  int num_vars_ = 0;
  bool ok_ = true;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_; // by literal: clauses watching its negation becoming false
  std::vector<int> assigns_;
  std::vector<int> reason_;
  std::vector<int> var_level_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<char> seen_;
  int next_var_ = 0; // lowest possibly unassigned variable

  std::vector<bool> model_;
  std::vector<int> failed_;
  std::uint64_t conflicts_ = 0;
  std::uint64_t decisions_ = 0;
};

} // namespace cm
