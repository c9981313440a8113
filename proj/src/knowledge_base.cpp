#include "cm/knowledge_base.hpp"

#include "cm/error.hpp"

#include <set>
#include <sstream>

namespace cm {

KnowledgeBase::KnowledgeBase(std::vector<Formula> formulas, std::optional<std::string> source_text)
    : source_text_(std::move(source_text)) {
  formulas_.reserve(formulas.size());
  for (auto &f : formulas)
    if (!find(f)) formulas_.push_back(std::move(f));
}

const Formula &KnowledgeBase::operator[](int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > formulas_.size())
    throw std::out_of_range("formula index " + std::to_string(index) + " out of range");
  return formulas_[static_cast<std::size_t>(index - 1)];
}

bool KnowledgeBase::is_valid(const IndexSet &s) const {
  return s.empty() || (s.front() >= 1 && static_cast<std::size_t>(s.back()) <= size());
}

std::vector<std::string> KnowledgeBase::variables() const {
  std::set<std::string> names;
  for (const auto &f : formulas_) f.collect_variables(names);
  return {names.begin(), names.end()};
}

KnowledgeBase KnowledgeBase::subset(const IndexSet &s) const {
  std::vector<Formula> picked;
  picked.reserve(s.size());
  for (int i : s) picked.push_back((*this)[i]);
  return KnowledgeBase(std::move(picked));
}

KnowledgeBase KnowledgeBase::merged(const KnowledgeBase &other) const {
  std::vector<Formula> all = formulas_;
  all.insert(all.end(), other.formulas_.begin(), other.formulas_.end());
  return KnowledgeBase(std::move(all));
}

std::optional<int> KnowledgeBase::find(const Formula &f) const {
  for (std::size_t i = 0; i < formulas_.size(); ++i)
    if (formulas_[i] == f) return static_cast<int>(i + 1);
  return std::nullopt;
}

KnowledgeBase parse_kb(std::string_view text) {
  std::vector<Formula> formulas;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        formulas.push_back(parse_formula(line));
      } catch (const ParseError &e) {
        throw ParseError(e.message(), line_no, e.column());
      }
    }
    start = end + 1;
  }
  return KnowledgeBase(std::move(formulas), std::string(text));
}

std::string write_kb(const KnowledgeBase &kb) {
  std::ostringstream out;
  for (const auto &f : kb.formulas()) out << to_string(f) << '\n';
  return out.str();
}

} // namespace cm
