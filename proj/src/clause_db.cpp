#include "cm/clause_db.hpp"

#include "cm/error.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace cm {

bool ClauseDB::same_content(const ClauseDB &other) const {
  return num_vars == other.num_vars && num_groups == other.num_groups &&
         clauses == other.clauses && group_of_clause == other.group_of_clause;
}

namespace {

class Translator {
public:
  Translator(ClauseDB &db, const std::vector<std::string> &atoms) : db_(db) {
    for (const auto &a : atoms) atom_var_.emplace(a, ++db_.num_vars);
    db_.variable_names = atoms;
  }

  void add_formula(const Formula &f, int group) {
    std::vector<Formula> conjuncts;
    flatten_and(f, conjuncts);
    for (const auto &c : conjuncts) {
      Clause clause;
      if (collect_disjuncts(c, clause)) continue; // satisfied
      emit(std::move(clause), group);
    }
  }

private:
  static void flatten_and(const Formula &f, std::vector<Formula> &out) {
    if (f.kind() == Formula::Kind::And) {
      flatten_and(f.child(0), out);
      flatten_and(f.child(1), out);
    } else {
      out.push_back(f);
    }
  }

  /// Appends literals of a top-level disjunction; true when the clause is
  /// trivially satisfied.
  bool collect_disjuncts(const Formula &f, Clause &clause) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Or: return collect_disjuncts(f.child(0), clause) || collect_disjuncts(f.child(1), clause);
    case K::Implies: {
      const Formula &premise = f.child(0);
      if (premise.kind() == K::False) return true;
      if (premise.kind() != K::True) clause.push_back(-literal(premise));
      return collect_disjuncts(f.child(1), clause);
    }
    default: clause.push_back(literal(f)); return false;
    }
  }

  int literal(const Formula &f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Var: return atom_var_.at(f.name());
    case K::Not: return -literal(f.child(0));
    case K::True: return true_var();
    case K::False: return -true_var();
    case K::And: {
      const int l = literal(f.child(0)), r = literal(f.child(1)), x = ++db_.num_vars;
      emit({-x, l}, 0);
      emit({-x, r}, 0);
      emit({x, -l, -r}, 0);
      return x;
    }
    case K::Or:
    case K::Implies: {
      const int l = f.kind() == K::Or ? literal(f.child(0)) : -literal(f.child(0));
      const int r = literal(f.child(1)), x = ++db_.num_vars;
      emit({-x, l, r}, 0);
      emit({x, -l}, 0);
      emit({x, -r}, 0);
      return x;
    }
    }
    return 0;
  }

  int true_var() {
    if (true_var_ == 0) {
      true_var_ = ++db_.num_vars;
      emit({true_var_}, 0);
    }
    return true_var_;
  }

  void emit(Clause clause, int group) {
    db_.clauses.push_back(std::move(clause));
    db_.group_of_clause.push_back(group);
  }

  ClauseDB &db_;
  std::map<std::string, int> atom_var_;
  int true_var_ = 0;
};

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string &tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception &) {
    throw ParseError("expected an integer, got '" + tok + "'", line_no);
  }
}

void write_clause(std::ostream &out, const Clause &c) {
  for (int lit : c) out << lit << ' ';
  out << "0\n";
}

} // namespace

ClauseDB to_clause_db(const KnowledgeBase &kb) {
  ClauseDB db;
  db.num_groups = static_cast<int>(kb.size());
  Translator translator(db, kb.variables());
  for (int g = 1; g <= db.num_groups; ++g) translator.add_formula(kb[g], g);
  return db;
}

std::string write_gcnf(const ClauseDB &db) {
  std::ostringstream out;
  out << "p gcnf " << db.num_vars << ' ' << db.clauses.size() << ' ' << db.num_groups << '\n';
  for (std::size_t i = 0; i < db.clauses.size(); ++i) {
    out << '{' << db.group_of_clause[i] << "} ";
    write_clause(out, db.clauses[i]);
  }
  return out.str();
}

ClauseDB read_gcnf(std::string_view text) {
  ClauseDB db;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == 'c') continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      if (toks.size() != 5 || toks[1] != "gcnf")
        throw ParseError("malformed header, expected 'p gcnf <vars> <clauses> <groups>'", line_no);
      db.num_vars = parse_int(toks[2], line_no);
      const int nc = parse_int(toks[3], line_no);
      db.num_groups = parse_int(toks[4], line_no);
      if (db.num_vars < 0 || nc < 0 || db.num_groups < 0)
        throw ParseError("negative count in header", line_no);
      declared_clauses = static_cast<std::size_t>(nc);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before header", line_no);
    const std::string &g = toks[0];
    if (g.size() < 3 || g.front() != '{' || g.back() != '}')
      throw ParseError("expected group tag '{g}', got '" + g + "'", line_no);
    const int group = parse_int(g.substr(1, g.size() - 2), line_no);
    if (group < 0 || group > db.num_groups)
      throw ParseError("group id " + std::to_string(group) + " out of range", line_no);
    Clause clause;
    bool terminated = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const int lit = parse_int(toks[i], line_no);
      if (lit == 0) {
        if (i + 1 != toks.size()) throw ParseError("literals after terminating 0", line_no);
        terminated = true;
        break;
      }
      if (std::abs(lit) > db.num_vars)
        throw ParseError("literal " + std::to_string(lit) + " out of range", line_no);
      clause.push_back(lit);
    }
    if (!terminated) throw ParseError("clause not terminated by 0", line_no);
    db.clauses.push_back(std::move(clause));
    db.group_of_clause.push_back(group);
  }
  if (!have_header) throw ParseError("missing 'p gcnf' header");
  if (db.clauses.size() != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(db.clauses.size()));
  return db;
}

std::string write_dimacs(const ClauseDB &db) {
  return write_dimacs_query(db, IndexSet::range(db.num_groups));
}

std::string write_dimacs_query(const ClauseDB &db, const IndexSet &enabled) {
  std::vector<const Clause *> picked;
  for (std::size_t i = 0; i < db.clauses.size(); ++i) {
    const int g = db.group_of_clause[i];
    if (g == 0 || enabled.contains(g)) picked.push_back(&db.clauses[i]);
  }
  std::ostringstream out;
  out << "p cnf " << db.num_vars << ' ' << picked.size() << '\n';
  for (const Clause *c : picked) write_clause(out, *c);
  return out.str();
}

} // namespace cm
