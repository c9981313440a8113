#include "cm/encoders.hpp"

#include "cm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace cm {

std::size_t IlpModel::count(LinearConstraint::Role role) const {
  return static_cast<std::size_t>(std::count_if(constraints.begin(), constraints.end(),
                                                [&](const auto &c) { return c.role == role; }));
}

IlpModel encode_ilp(const SetFamily &f) {
  using R = LinearConstraint::Role;
  using S = LinearConstraint::Sense;
  IlpModel model;
  model.num_sets = static_cast<int>(f.size());
  model.universe_size = f.universe_size();
  for (const auto &s : f.sets()) model.set_sizes.push_back(static_cast<int>(s.size()));

  for (int e = 1; e <= f.universe_size(); ++e) {
    const auto owners = f.sets_containing(e);
    if (owners.size() < 2) continue;
    LinearConstraint c{R::Disjoint, "disj_e" + std::to_string(e), {}, S::LessEq, 1};
    for (int i : owners) c.terms.push_back({{IlpVar::Kind::X, i}, 1});
    model.constraints.push_back(std::move(c));
  }
  for (int i = 1; i <= model.num_sets; ++i) {
    const int size = model.set_sizes[static_cast<std::size_t>(i - 1)];
    LinearConstraint cover{R::Cover, "cover_s" + std::to_string(i), {}, S::GreaterEq, 0};
    LinearConstraint uncover{R::Uncover, "uncover_s" + std::to_string(i), {}, S::LessEq, size - 1};
    for (int e : f.set(i)) {
      cover.terms.push_back({{IlpVar::Kind::Y, e}, 1});
      uncover.terms.push_back({{IlpVar::Kind::Y, e}, 1});
    }
    cover.terms.push_back({{IlpVar::Kind::X, i}, -size});
    uncover.terms.push_back({{IlpVar::Kind::X, i}, -1});
    model.constraints.push_back(std::move(cover));
    model.constraints.push_back(std::move(uncover));
  }
  return model;
}

namespace {

std::string var_name(const IlpVar &v) {
  return (v.kind == IlpVar::Kind::X ? "x" : "y") + std::to_string(v.index);
}

void write_terms(std::ostream &out, const std::vector<std::pair<IlpVar, int>> &terms) {
  bool first = true;
  for (const auto &[v, coef] : terms) {
    if (first) {
      if (coef < 0) out << "- ";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    if (std::abs(coef) != 1) out << std::abs(coef) << ' ';
    out << var_name(v);
    first = false;
  }
}

} // namespace

std::string write_lp(const IlpModel &model) {
  std::ostringstream out;
  out << "\\ maximum closed set packing: " << model.num_sets << " sets over "
      << model.universe_size << " elements\n";
  out << "Maximize\n obj:";
  if (model.num_sets == 0) out << " 0";
  for (int i = 1; i <= model.num_sets; ++i) out << (i == 1 ? " " : " + ") << 'x' << i;
  out << "\nSubject To\n";
  for (const auto &c : model.constraints) {
    out << ' ' << c.name << ": ";
    write_terms(out, c.terms);
    out << (c.sense == LinearConstraint::Sense::LessEq ? " <= " : " >= ") << c.rhs << '\n';
  }
  out << "Binary\n";
  for (int i = 1; i <= model.num_sets; ++i) out << " x" << i;
  if (model.num_sets > 0) out << '\n';
  for (int e = 1; e <= model.universe_size; ++e) out << " y" << e;
  if (model.universe_size > 0) out << '\n';
  out << "End\n";
  return out.str();
}

void at_most_one_sequential(const std::vector<int> &lits, int &next_var,
                            std::vector<std::vector<int>> &out, std::vector<int> *aux) {
  const std::size_t k = lits.size();
  if (k <= 1) return;
  std::vector<int> p(k - 1);
  for (auto &v : p) v = ++next_var;
  out.push_back({-lits[0], p[0]});
  for (std::size_t i = 1; i + 1 < k; ++i) {
    out.push_back({-lits[i], p[i]});
    out.push_back({-p[i - 1], p[i]});
    out.push_back({-lits[i], -p[i - 1]});
  }
  out.push_back({-lits[k - 1], -p[k - 2]});
  if (aux) *aux = std::move(p);
}

WcnfInstance encode_mincost_sat(const SetFamily &f) {
  using Role = WcnfInstance::Role;
  WcnfInstance w;
  w.num_sets = static_cast<int>(f.size());
  w.universe_size = f.universe_size();
  for (int i = 1; i <= w.num_sets; ++i) {
    w.roles.push_back(Role::SetVar);
    w.origin.push_back(i);
  }
  for (int e = 1; e <= w.universe_size; ++e) {
    w.roles.push_back(Role::ElementVar);
    w.origin.push_back(e);
  }
  int next_var = w.num_sets + w.universe_size;

  // selecting S_i is the literal -x'_i after renaming
  for (int e = 1; e <= w.universe_size; ++e) {
    std::vector<int> selected_lits;
    for (int i : f.sets_containing(e)) selected_lits.push_back(-w.set_var(i));
    std::vector<int> aux;
    at_most_one_sequential(selected_lits, next_var, w.hard, &aux);
    for (std::size_t j = 0; j < aux.size(); ++j) {
      w.roles.push_back(Role::CounterAux);
      w.origin.push_back(e);
    }
    if (!aux.empty()) w.counters.emplace_back(std::move(selected_lits), std::move(aux));
  }
  for (int i = 1; i <= w.num_sets; ++i)
    for (int e : f.set(i)) w.hard.push_back({w.set_var(i), w.element_var(e)});
  for (int i = 1; i <= w.num_sets; ++i) {
    std::vector<int> clause{-w.set_var(i)};
    for (int e : f.set(i)) clause.push_back(-w.element_var(e));
    w.hard.push_back(std::move(clause));
  }
  for (int i = 1; i <= w.num_sets; ++i) w.soft.push_back({{-w.set_var(i)}, 1});
  w.num_vars = next_var;
  return w;
}

std::string write_wcnf(const WcnfInstance &w) {
  std::ostringstream out;
  out << "c maximum closed set packing as MinCostSAT: " << w.num_sets << " sets, "
      << w.universe_size << " elements\n";
  out << "c cost = number of true x' variables = sets minus packing size\n";
  for (int v = 1; v <= w.num_vars; ++v) {
    const auto role = w.roles[static_cast<std::size_t>(v - 1)];
    const int o = w.origin[static_cast<std::size_t>(v - 1)];
    out << "c var " << v << ' ';
    switch (role) {
    case WcnfInstance::Role::SetVar: out << "x'" << o << " (set " << o << " not selected)"; break;
    case WcnfInstance::Role::ElementVar: out << 'y' << o << " (element " << o << " covered)"; break;
    case WcnfInstance::Role::CounterAux: out << "p (counter for element " << o << ")"; break;
    }
    out << '\n';
  }
  out << "p wcnf " << w.num_vars << ' ' << w.hard.size() + w.soft.size() << ' ' << w.top() << '\n';
  for (const auto &c : w.hard) {
    out << w.top();
    for (int l : c) out << ' ' << l;
    out << " 0\n";
  }
  for (const auto &[c, weight] : w.soft) {
    out << weight;
    for (int l : c) out << ' ' << l;
    out << " 0\n";
  }
  return out.str();
}

std::size_t solve_encoding_exhaustive(const IlpModel &model) {
  const int vars = model.num_binaries();
  if (vars > kExhaustiveMaxVars)
    throw ResourceLimitError("exhaustive search is capped at " + std::to_string(kExhaustiveMaxVars) +
                             " binaries, model has " + std::to_string(vars));
  auto bit = [&](std::uint32_t mask, const IlpVar &v) -> int {
    const int pos = v.kind == IlpVar::Kind::X ? v.index - 1 : model.num_sets + v.index - 1;
    return static_cast<int>((mask >> pos) & 1);
  };
  std::size_t best = 0;
  bool feasible = false;
  const std::uint32_t total = std::uint32_t{1} << vars;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto &c : model.constraints) {
      int lhs = 0;
      for (const auto &[v, coef] : c.terms) lhs += coef * bit(mask, v);
      if (c.sense == LinearConstraint::Sense::LessEq ? lhs > c.rhs : lhs < c.rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::size_t objective = 0;
    for (int i = 1; i <= model.num_sets; ++i) objective += static_cast<std::size_t>(bit(mask, {IlpVar::Kind::X, i}));
    best = feasible ? std::max(best, objective) : objective;
    feasible = true;
  }
  if (!feasible) throw std::logic_error("ILP model has no feasible assignment");
  return best;
}

namespace {

class WcnfEnumerator {
public:
  explicit WcnfEnumerator(const WcnfInstance &w) : w_(w), value_(static_cast<std::size_t>(w.num_vars) + 1) {
    closing_.resize(static_cast<std::size_t>(w.num_vars) + 1);
    for (const auto &c : w.hard) {
      int last = 0;
      for (int l : c) last = std::max(last, std::abs(l));
      closing_[static_cast<std::size_t>(last)].push_back(&c);
    }
  }

  std::uint64_t run() {
    primary_ = w_.num_sets + w_.universe_size;
    visit(1);
    if (!found_) throw std::logic_error("WCNF hard clauses are unsatisfiable");
    return best_;
  }

private:
  bool satisfied(const std::vector<int> &c) const {
    for (int l : c)
      if (value_[static_cast<std::size_t>(std::abs(l))] == (l > 0)) return true;
    return false;
  }

  // Every primary assignment is visited; below the primaries only the first
  // consistent completion of the counter auxiliaries is needed.
  bool visit(int v) {
    if (v > w_.num_vars) {
      const std::uint64_t cost = soft_cost(w_, value_);
      if (!found_ || cost < best_) best_ = cost;
      found_ = true;
      return true;
    }
    bool any = false;
    for (bool b : {false, true}) {
      value_[static_cast<std::size_t>(v)] = b;
      bool ok = true;
      for (const auto *c : closing_[static_cast<std::size_t>(v)])
        if (!satisfied(*c)) {
          ok = false;
          break;
        }
      if (ok && visit(v + 1)) {
        any = true;
        if (v > primary_) return true;
      }
    }
    return any;
  }

  const WcnfInstance &w_;
  std::vector<bool> value_;
  std::vector<std::vector<const std::vector<int> *>> closing_;
  int primary_ = 0;
  bool found_ = false;
  std::uint64_t best_ = 0;
};

} // namespace

std::uint64_t solve_encoding_exhaustive(const WcnfInstance &w) {
  const int primary = w.num_sets + w.universe_size;
  if (primary > kExhaustiveMaxVars)
    throw ResourceLimitError("exhaustive search is capped at " + std::to_string(kExhaustiveMaxVars) +
                             " set and element variables, instance has " + std::to_string(primary));
  return WcnfEnumerator(w).run();
}

bool satisfies_hard(const WcnfInstance &w, const std::vector<bool> &assignment) {
  for (const auto &c : w.hard) {
    bool sat = false;
    for (int l : c)
      if (assignment.at(static_cast<std::size_t>(std::abs(l))) == (l > 0)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::uint64_t soft_cost(const WcnfInstance &w, const std::vector<bool> &assignment) {
  std::uint64_t cost = 0;
  for (const auto &[c, weight] : w.soft) {
    bool sat = false;
    for (int l : c)
      if (assignment.at(static_cast<std::size_t>(std::abs(l))) == (l > 0)) sat = true;
    if (!sat) cost += weight;
  }
  return cost;
}

std::vector<bool> assignment_for(const WcnfInstance &w, const SetFamily &f, const IndexSet &selection) {
  std::vector<bool> a(static_cast<std::size_t>(w.num_vars) + 1, false);
  IndexSet covered;
  for (int i : selection) covered = covered.united(f.set(i));
  for (int i = 1; i <= w.num_sets; ++i) a[static_cast<std::size_t>(w.set_var(i))] = !selection.contains(i);
  for (int e : covered) a[static_cast<std::size_t>(w.element_var(e))] = true;
  // p_j holds iff one of the first j constrained literals is true
  for (const auto &[lits, aux] : w.counters) {
    bool prefix = false;
    for (std::size_t j = 0; j < aux.size(); ++j) {
      const int l = lits[j];
      prefix = prefix || (a[static_cast<std::size_t>(std::abs(l))] == (l > 0));
      a[static_cast<std::size_t>(aux[j])] = prefix;
    }
  }
  return a;
}

namespace {

ImportedSolution finish_import(const SetFamily &f, IndexSet selected) {
  ImportedSolution out;
  for (int i : selected) out.packing.covered = out.packing.covered.united(f.set(i));
  out.packing.cardinality = selected.size();
  out.closed = is_closed_packing(f, selected);
  out.packing.selected = std::move(selected);
  return out;
}

} // namespace

ImportedSolution import_wcnf_solution(const SetFamily &f, std::string_view text) {
  const int m = static_cast<int>(f.size());
  std::vector<int> truth(static_cast<std::size_t>(m) + 1, -1);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string head;
    if (!(toks >> head) || head != "v") continue;
    std::string tok;
    while (toks >> tok) {
      int lit = 0;
      try {
        lit = std::stoi(tok);
      } catch (const std::exception &) {
        throw ParseError("bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) break;
      if (std::abs(lit) <= m) truth[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : 0;
    }
  }
  std::vector<int> sel;
  for (int i = 1; i <= m; ++i) {
    if (truth[static_cast<std::size_t>(i)] < 0)
      throw ParseError("no value for set variable " + std::to_string(i));
    if (truth[static_cast<std::size_t>(i)] == 0) sel.push_back(i);
  }
  return finish_import(f, IndexSet(std::move(sel)));
}

ImportedSolution import_lp_solution(const SetFamily &f, std::string_view text) {
  static const std::regex name_re("^x([0-9]+)$");
  const int m = static_cast<int>(f.size());
  std::vector<int> sel;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::vector<std::string> words;
    std::string tok;
    while (toks >> tok)
      if (tok != "=") words.push_back(tok);
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
      std::smatch match;
      if (!std::regex_match(words[k], match, name_re)) continue;
      const int i = std::stoi(match[1].str());
      if (i < 1 || i > m) throw ParseError("variable " + words[k] + " out of range", line_no);
      double value = 0;
      try {
        value = std::stod(words[k + 1]);
      } catch (const std::exception &) {
        throw ParseError("bad value '" + words[k + 1] + "'", line_no);
      }
      if (value > 0.5) sel.push_back(i);
      break;
    }
  }
  return finish_import(f, IndexSet(std::move(sel)));
}

} // namespace cm
