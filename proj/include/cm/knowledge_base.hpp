#pragma once

#include "cm/formula.hpp"
#include "cm/index_set.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cm {

/// Finite set of formulas with stable 1-based indices. Structurally equal
/// formulas are dropped on construction, keeping the first occurrence.
class KnowledgeBase {
public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<Formula> formulas,
                         std::optional<std::string> source_text = std::nullopt);

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }

  /// 1-based access.
  const Formula &operator[](int index) const;
  const std::vector<Formula> &formulas() const { return formulas_; }
  const std::optional<std::string> &source_text() const { return source_text_; }

  IndexSet all_indices() const { return IndexSet::range(static_cast<int>(size())); }
  bool is_valid(const IndexSet &s) const;

  /// Sorted variable names occurring anywhere in the KB.
  std::vector<std::string> variables() const;

  /// New KB holding the selected formulas, re-indexed 1..|s| in order.
  KnowledgeBase subset(const IndexSet &s) const;

  /// Union in order: this KB's formulas, then the other's (duplicates dropped).
  KnowledgeBase merged(const KnowledgeBase &other) const;

  /// Index of a structurally equal formula, if present.
  std::optional<int> find(const Formula &f) const;

private:
  std::vector<Formula> formulas_;
  std::optional<std::string> source_text_;
};

/// One formula per line; `#` starts a comment; blank lines are ignored.
/// Syntax errors carry the 1-based line number.
KnowledgeBase parse_kb(std::string_view text);

/// Inverse of parse_kb (one printed formula per line).
std::string write_kb(const KnowledgeBase &kb);

} // namespace cm
