#pragma once

#include "cm/knowledge_base.hpp"
#include "cm/measures.hpp"

#include <string>
#include <vector>

namespace cm {

/// Value of one measure on a KB, computed exactly.
long measure_value(Measure m, const KnowledgeBase &kb, Backend backend = Backend::BranchBound);

/// Copy of `kb` whose variables avoid every name in `taken`, by suffixing.
KnowledgeBase rename_apart(const KnowledgeBase &kb, const std::vector<std::string> &taken);

struct PostulateResult {
  std::string name;
  std::size_t checks = 0;     // instances where the postulate applied
  std::size_t violations = 0;
  std::vector<std::string> witnesses; // first few violations, human readable
  bool holds() const { return violations == 0; }
};

struct PostulateReport {
  Measure measure;
  std::vector<PostulateResult> results; // Consistency, Monotony, Free Formula Independence, MinInc, Independent Decomposability
  bool all_hold() const;
};

/// Searches the family for counterexamples to each postulate.
///  - Consistency: I(K) = 0 iff K is consistent.
///  - Monotony: K minus one formula, and unions of consecutive members.
///  - Free Formula Independence: a formula over a fresh variable is added,
///    and each existing free formula is removed.
///  - MinInc: every MUS of K, taken as a KB, scores 1.
///  - Independent Decomposability: consecutive members are joined both as
///    given and renamed apart; the sum is checked whenever the MUSes of the
///    union partition into those of the parts and no unfree formula is shared.
PostulateReport check_postulates(Measure measure, const std::vector<KnowledgeBase> &family,
                                 std::size_t max_witnesses = 5);

std::string format_postulate_report(const PostulateReport &report);

} // namespace cm
