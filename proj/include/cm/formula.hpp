#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cm {

/// Immutable propositional formula tree. Copies share structure.
///
/// Connectives: Not (one child), And / Or / Implies (two children).
/// Leaves: Var, True, False. Equality is structural.
class Formula {
public:
  enum class Kind { Var, True, False, Not, And, Or, Implies };

  static Formula var(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula premise, Formula conclusion);

  Kind kind() const { return node_->kind; }
  /// Variable name; empty for non-Var nodes.
  const std::string &name() const { return node_->name; }
  std::size_t arity() const { return node_->children.size(); }
  const Formula &child(std::size_t i) const { return node_->children.at(i); }

  bool is_leaf() const { return arity() == 0; }

  /// Adds every variable name occurring in the formula.
  void collect_variables(std::set<std::string> &out) const;

  /// Returns a copy with each variable renamed through `rename`.
  template <typename Fn> Formula renamed(Fn &&rename) const;

  friend bool operator==(const Formula &a, const Formula &b);

private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Parses one formula. Precedence, tightest first: `!`/`~`, `&`, `|`, `->`.
/// `&` and `|` associate to the left, `->` to the right.
/// Throws ParseError with a 1-based column on malformed input.
Formula parse_formula(std::string_view text);

/// Prints with the minimum parentheses needed to re-parse to the same tree.
std::string to_string(const Formula &f);

template <typename Fn> Formula Formula::renamed(Fn &&rename) const {
  switch (kind()) {
  case Kind::Var: return var(rename(name()));
  case Kind::True:
  case Kind::False: return *this;
  default: {
    std::vector<Formula> kids;
    kids.reserve(arity());
    for (const auto &c : node_->children) kids.push_back(c.renamed(rename));
    return make(kind(), {}, std::move(kids));
  }
  }
}

} // namespace cm
