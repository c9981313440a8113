#include "cm/formula.hpp"

#include "cm/error.hpp"

#include <cctype>
#include <sstream>

namespace cm {

ParseError::ParseError(const std::string &what, std::size_t line, std::size_t column)
    : std::runtime_error([&] {
        std::ostringstream msg;
        if (line > 0) msg << "line " << line << ": ";
        if (column > 0) msg << "column " << column << ": ";
        msg << what;
        return msg.str();
      }()),
      message_(what), line_(line), column_(column) {}

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{kind, std::move(name), std::move(children)}));
}

Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}); }

Formula Formula::constant(bool value) { return make(value ? Kind::True : Kind::False, {}, {}); }

Formula Formula::negation(Formula operand) { return make(Kind::Not, {}, {std::move(operand)}); }

Formula Formula::conjunction(Formula left, Formula right) {
  return make(Kind::And, {}, {std::move(left), std::move(right)});
}

Formula Formula::disjunction(Formula left, Formula right) {
  return make(Kind::Or, {}, {std::move(left), std::move(right)});
}

Formula Formula::implication(Formula premise, Formula conclusion) {
  return make(Kind::Implies, {}, {std::move(premise), std::move(conclusion)});
}

void Formula::collect_variables(std::set<std::string> &out) const {
  if (kind() == Kind::Var) {
    out.insert(name());
    return;
  }
  for (const auto &c : node_->children) c.collect_variables(out);
}

bool operator==(const Formula &a, const Formula &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      Tok t = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      out.push_back({t, std::move(word), col});
      i = j;
    } else if (c == '!' || c == '~') {
      out.push_back({Tok::Not, std::string(1, c), col});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", col});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", col});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Implies, "->", col});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 0, col);
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    if (peek().type == Tok::End) throw ParseError("empty formula", 0, peek().column);
    Formula f = implication();
    if (peek().type != Tok::End)
      throw ParseError("unexpected '" + peek().text + "'", 0, peek().column);
    return f;
  }

private:
  const Token &peek() const { return tokens_[pos_]; }
  const Token &advance() { return tokens_[pos_++]; }

  Formula implication() {
    Formula left = disjunction();
    if (peek().type == Tok::Implies) {
      advance();
      return Formula::implication(std::move(left), implication());
    }
    return left;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().type == Tok::Or) {
      advance();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().type == Tok::And) {
      advance();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token &t = advance();
    switch (t.type) {
    case Tok::Not: return Formula::negation(unary());
    case Tok::Ident: return Formula::var(t.text);
    case Tok::True: return Formula::constant(true);
    case Tok::False: return Formula::constant(false);
    case Tok::LParen: {
      Formula f = implication();
      if (peek().type != Tok::RParen) throw ParseError("expected ')'", 0, peek().column);
      advance();
      return f;
    }
    case Tok::End: throw ParseError("unexpected end of formula", 0, t.column);
    default: throw ParseError("unexpected '" + t.text + "'", 0, t.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Formula::Kind k) {
  switch (k) {
  case Formula::Kind::Implies: return 1;
  case Formula::Kind::Or: return 2;
  case Formula::Kind::And: return 3;
  case Formula::Kind::Not: return 4;
  default: return 5;
  }
}

void print(const Formula &f, std::ostream &out);

void print_operand(const Formula &f, bool needs_parens, std::ostream &out) {
  if (needs_parens) out << '(';
  print(f, out);
  if (needs_parens) out << ')';
}

void print(const Formula &f, std::ostream &out) {
  using K = Formula::Kind;
  const int p = precedence(f.kind());
  switch (f.kind()) {
  case K::Var: out << f.name(); return;
  case K::True: out << "true"; return;
  case K::False: out << "false"; return;
  case K::Not:
    out << '!';
    print_operand(f.child(0), precedence(f.child(0).kind()) < p, out);
    return;
  case K::And:
  case K::Or: {
    // left-associative: the right operand needs parentheses at equal precedence
    print_operand(f.child(0), precedence(f.child(0).kind()) < p, out);
    out << (f.kind() == K::And ? " & " : " | ");
    print_operand(f.child(1), precedence(f.child(1).kind()) <= p, out);
    return;
  }
  case K::Implies:
    print_operand(f.child(0), precedence(f.child(0).kind()) <= p, out);
    out << " -> ";
    print_operand(f.child(1), precedence(f.child(1).kind()) < p, out);
    return;
  }
}

} // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Formula &f) {
  std::ostringstream out;
  print(f, out);
  return out.str();
}

} // namespace cm
