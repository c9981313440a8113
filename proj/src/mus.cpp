#include "cm/mus.hpp"

#include "cm/error.hpp"
#include "cm/hitting_sets.hpp"

#include <sstream>

namespace cm {

IndexSet MusSet::formulas() const {
  IndexSet all;
  for (const auto &m : muses) all = all.united(m);
  return all;
}

Enumeration enumerate(const KnowledgeBase &kb, const EnumerationLimits &limits) {
  ConsistencyChecker oracle(kb, limits.max_oracle_calls);
  // seeds come from a second solver that accumulates blocking clauses
  GroupSolver seeds(oracle.clause_db());
  const int n = static_cast<int>(kb.size());
  const IndexSet all = kb.all_indices();

  Enumeration out;
  std::vector<IndexSet> mcses;
  std::uint64_t seed_calls = 0;
  for (;;) {
    if (oracle.calls() + seed_calls >= limits.max_oracle_calls)
      throw ResourceLimitError("SAT oracle call limit (" +
                               std::to_string(limits.max_oracle_calls) + ") exceeded");
    ++seed_calls;
    const SatResult r = seeds.solve_free();
    if (!r.sat()) break;
    IndexSet mss;
    for (int g = 1; g <= n; ++g)
      if ((*r.model)[static_cast<std::size_t>(seeds.selector(g))]) mss.insert(g);
    for (int g = 1; g <= n; ++g) {
      if (mss.contains(g)) continue;
      IndexSet grown = mss;
      grown.insert(g);
      if (oracle.consistent(grown)) mss = std::move(grown);
    }
    IndexSet mcs = all.minus(mss);
    std::vector<int> block;
    for (int g : mcs) block.push_back(seeds.selector(g));
    seeds.add_clause(block);
    out.msses.msses.push_back(std::move(mss));
    mcses.push_back(std::move(mcs));
  }
  canonicalize(out.msses.msses);
  out.muses.muses = minimal_hitting_sets(mcses);
  out.oracle_calls = oracle.calls() + seed_calls;
  return out;
}

MusSet enumerate_muses(const KnowledgeBase &kb, const EnumerationLimits &limits) {
  return enumerate(kb, limits).muses;
}

MssSet enumerate_msses(const KnowledgeBase &kb, const EnumerationLimits &limits) {
  return enumerate(kb, limits).msses;
}

IndexSet shrink_to_mus(ConsistencyChecker &oracle, const IndexSet &s) {
  if (oracle.consistent(s)) throw PreconditionError("shrink_to_mus: " + s.to_string() + " is consistent");
  IndexSet current = s;
  for (int i : s) {
    IndexSet without = current;
    without.erase(i);
    if (!oracle.consistent(without)) current = std::move(without);
  }
  return current;
}

IndexSet shrink_to_mus(const KnowledgeBase &kb, const IndexSet &s) {
  if (!kb.is_valid(s)) throw PreconditionError("formula subset " + s.to_string() + " out of range");
  ConsistencyChecker oracle(kb);
  return shrink_to_mus(oracle, s);
}

FormulaClassification classify_formulas(const KnowledgeBase &kb, const MusSet &muses) {
  FormulaClassification c;
  for (const auto &m : muses.muses)
    if (m.size() == 1) c.self_contradictory.insert(m.front());
  c.unfree = muses.formulas();
  c.free = kb.all_indices().minus(c.unfree);
  return c;
}

MusImport import_mus_list(const KnowledgeBase &kb, std::string_view text) {
  MusImport out;
  out.muses.complete = false;
  ConsistencyChecker oracle(kb);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream toks(line);
    std::vector<int> items;
    std::string tok;
    bool bad = false;
    while (toks >> tok) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        out.issues.push_back({line_no, "not an index: '" + tok + "'"});
        bad = true;
        break;
      }
      if (v < 1 || static_cast<std::size_t>(v) > kb.size()) {
        out.issues.push_back({line_no, "index " + std::to_string(v) + " out of range 1.." +
                                           std::to_string(kb.size())});
        bad = true;
        break;
      }
      items.push_back(v);
    }
    if (bad || items.empty()) continue;
    IndexSet s(std::move(items));
    if (oracle.consistent(s)) {
      out.issues.push_back({line_no, s.to_string() + " is consistent"});
      continue;
    }
    bool minimal = true;
    for (int i : s) {
      IndexSet without = s;
      without.erase(i);
      if (!oracle.consistent(without)) {
        out.issues.push_back({line_no, s.to_string() + " is not minimal (drop " +
                                           std::to_string(i) + ")"});
        minimal = false;
        break;
      }
    }
    if (minimal) out.muses.muses.push_back(std::move(s));
  }
  canonicalize(out.muses.muses);
  return out;
}

std::string write_mus_list(const MusSet &muses) {
  std::ostringstream out;
  for (const auto &m : muses.muses) {
    bool first = true;
    for (int i : m) {
      out << (first ? "" : " ") << i;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

} // namespace cm
