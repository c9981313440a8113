#include "cm/sat_solver.hpp"

#include <algorithm>
#include <cstdlib>

namespace cm {

SatSolver::SatSolver(int num_vars) { reserve_vars(num_vars); }

int SatSolver::new_var() {
  reserve_vars(num_vars_ + 1);
  return num_vars_;
}

void SatSolver::reserve_vars(int n) {
  if (n <= num_vars_) return;
  num_vars_ = n;
  assigns_.resize(n, -1);
  reason_.resize(n, kNoReason);
  var_level_.resize(n, 0);
  seen_.resize(n, 0);
  watches_.resize(2 * static_cast<std::size_t>(n));
}

bool SatSolver::add_clause(std::span<const int> lits) {
  if (!ok_) return false;
  cancel_until(0);
  std::vector<Lit> c;
  for (int d : lits) {
    reserve_vars(std::abs(d));
    c.push_back(encode(d));
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i + 1 < c.size() && (c[i] ^ 1) == c[i + 1]) return true; // tautology
    const int v = value(c[i]);
    if (v == 1) return true;
    if (v == -1) kept.push_back(c[i]);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    return ok_ = (propagate() == kNoReason);
  }
  attach(std::move(kept));
  return true;
}

int SatSolver::attach(std::vector<Lit> lits) {
  const int idx = static_cast<int>(clauses_.size());
  watches_[lits[0]].push_back(idx);
  watches_[lits[1]].push_back(idx);
  clauses_.push_back(std::move(lits));
  return idx;
}

void SatSolver::enqueue(Lit l, int reason) {
  const int v = var_of(l);
  assigns_[v] = (l & 1) ? 0 : 1;
  reason_[v] = reason;
  var_level_[v] = level();
  trail_.push_back(l);
}

int SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit false_lit = trail_[qhead_++] ^ 1;
    std::vector<int> &ws = watches_[false_lit];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int ci = ws[i];
      std::vector<Lit> &c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value(c[0]) == 0) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
        ws.resize(keep);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
  }
  return kNoReason;
}

void SatSolver::analyze(int conflict, std::vector<Lit> &learnt, int &backjump) {
  learnt.assign(1, 0);
  int pending = 0;
  Lit p = -1;
  std::size_t index = trail_.size();
  int ci = conflict;
  do {
    const std::vector<Lit> &c = clauses_[ci];
    for (std::size_t j = (p == -1 ? 0 : 1); j < c.size(); ++j) {
      const Lit q = c[j];
      const int v = var_of(q);
      if (seen_[v] || var_level_[v] == 0) continue;
      seen_[v] = 1;
      if (var_level_[v] >= level()) ++pending;
      else learnt.push_back(q);
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    ci = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = p ^ 1;

  backjump = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (var_level_[var_of(learnt[i])] > var_level_[var_of(learnt[max_i])]) max_i = i;
    std::swap(learnt[1], learnt[max_i]);
    backjump = var_level_[var_of(learnt[1])];
  }
  for (Lit l : learnt) seen_[var_of(l)] = 0;
}

void SatSolver::analyze_final(Lit assumption) {
  // `assumption` is currently false; collect the assumption decisions that imply its negation
  failed_.clear();
  failed_.push_back(decode(assumption));
  if (level() == 0) return;
  seen_[var_of(assumption)] = 1;
  for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[0]);) {
    const int v = var_of(trail_[i]);
    if (!seen_[v]) continue;
    if (reason_[v] == kNoReason) {
      failed_.push_back(decode(trail_[i]));
    } else {
      const std::vector<Lit> &c = clauses_[reason_[v]];
      for (std::size_t j = 1; j < c.size(); ++j)
        if (var_level_[var_of(c[j])] > 0) seen_[var_of(c[j])] = 1;
    }
    seen_[v] = 0;
  }
  seen_[var_of(assumption)] = 0;
}

void SatSolver::cancel_until(int lvl) {
  if (level() <= lvl) return;
  for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
    const int v = var_of(trail_[i]);
    assigns_[v] = -1;
    reason_[v] = kNoReason;
    next_var_ = std::min(next_var_, v);
  }
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
  qhead_ = trail_.size();
}

SatSolver::Status SatSolver::solve(std::span<const int> assumptions) {
  failed_.clear();
  model_.clear();
  if (!ok_) return Status::Unsat;
  for (int d : assumptions) reserve_vars(std::abs(d));
  cancel_until(0);
  if (propagate() != kNoReason) {
    ok_ = false;
    return Status::Unsat;
  }

  std::vector<Lit> learnt;
  for (;;) {
    const int conflict = propagate();
    if (conflict != kNoReason) {
      ++conflicts_;
      if (level() == 0) {
        ok_ = false;
        return Status::Unsat;
      }
      int backjump = 0;
      analyze(conflict, learnt, backjump);
      cancel_until(backjump);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        const int ci = attach(learnt);
        enqueue(clauses_[ci][0], ci);
      }
      continue;
    }

    Lit next = -1;
    while (static_cast<std::size_t>(level()) < assumptions.size()) {
      const Lit a = encode(assumptions[level()]);
      const int v = value(a);
      if (v == 1) {
        trail_lim_.push_back(static_cast<int>(trail_.size())); // dummy level
      } else if (v == 0) {
        analyze_final(a);
        cancel_until(0);
        return Status::Unsat;
      } else {
        next = a;
        break;
      }
    }
    if (next == -1) {
      while (next_var_ < num_vars_ && assigns_[next_var_] >= 0) ++next_var_;
      if (next_var_ == num_vars_) {
        model_.assign(static_cast<std::size_t>(num_vars_) + 1, false);
        for (int v = 0; v < num_vars_; ++v) model_[v + 1] = assigns_[v] == 1;
        cancel_until(0);
        return Status::Sat;
      }
      next = 2 * next_var_; // positive phase
      ++decisions_;
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, kNoReason);
  }
}

} // namespace cm
