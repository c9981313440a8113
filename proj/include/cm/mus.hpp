#pragma once

#include "cm/index_set.hpp"
#include "cm/knowledge_base.hpp"
#include "cm/sat.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cm {

/// Minimal unsatisfiable subsets, canonically ordered (size, then lex).
/// `complete` is false when the list came from a partial source (imports),
/// in which case downstream measures are lower bounds.
struct MusSet {
  std::vector<IndexSet> muses;
  bool complete = true;

  std::size_t size() const { return muses.size(); }
  const IndexSet &operator[](std::size_t i) const { return muses[i]; }
  /// Union of all members.
  IndexSet formulas() const;
};

/// Maximal satisfiable subsets, canonically ordered.
struct MssSet {
  std::vector<IndexSet> msses;
  std::size_t size() const { return msses.size(); }
};

struct FormulaClassification {
  IndexSet self_contradictory;
  IndexSet free;
  IndexSet unfree;
};

struct EnumerationLimits {
  std::uint64_t max_oracle_calls = ConsistencyChecker::kDefaultCallLimit;
};

/// Both enumerations from one pass: MSSes are grown from SAT seeds, and
/// MUSes are the minimal hitting sets of the MSS complements.
struct Enumeration {
  MssSet msses;
  MusSet muses;
  std::uint64_t oracle_calls = 0;
};

Enumeration enumerate(const KnowledgeBase &kb, const EnumerationLimits &limits = {});
MusSet enumerate_muses(const KnowledgeBase &kb, const EnumerationLimits &limits = {});
MssSet enumerate_msses(const KnowledgeBase &kb, const EnumerationLimits &limits = {});

/// Deletion-based minimization in ascending index order. Throws
/// PreconditionError if `s` is consistent.
IndexSet shrink_to_mus(const KnowledgeBase &kb, const IndexSet &s);
IndexSet shrink_to_mus(ConsistencyChecker &oracle, const IndexSet &s);

FormulaClassification classify_formulas(const KnowledgeBase &kb, const MusSet &muses);

struct ImportIssue {
  std::size_t line;
  std::string message;
};

struct MusImport {
  MusSet muses; // verified entries only; complete = false
  std::vector<ImportIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// One MUS per line as whitespace-separated 1-based indices; `#` comments.
/// Every entry is checked to be inconsistent and minimal; failing lines are
/// reported in `issues`.
MusImport import_mus_list(const KnowledgeBase &kb, std::string_view text);
std::string write_mus_list(const MusSet &muses);

} // namespace cm
