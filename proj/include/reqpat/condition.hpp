#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>

#include "reqpat/error.hpp"
#include "reqpat/state.hpp"

namespace reqpat {

/// Immutable propositional expression over atoms: the `holds` of a named
/// domain notion such as "midnight". Copies share structure.
class Condition {
 public:
  enum class Kind { Const, Ref, Not, And, Or };

  Condition() : Condition(constant(true)) {}

  static Condition constant(bool value) { return Condition(make(Kind::Const, value, {}, nullptr, nullptr)); }

  static Condition ref(std::string atom) {
    if (!is_atom_name(atom)) throw std::invalid_argument("invalid atom name '" + atom + "'");
    return Condition(make(Kind::Ref, false, std::move(atom), nullptr, nullptr));
  }

  friend Condition operator!(const Condition& c) { return Condition(make(Kind::Not, false, {}, c.node_, nullptr)); }
  friend Condition operator&&(const Condition& a, const Condition& b) {
    return Condition(make(Kind::And, false, {}, a.node_, b.node_));
  }
  friend Condition operator||(const Condition& a, const Condition& b) {
    return Condition(make(Kind::Or, false, {}, a.node_, b.node_));
  }

  Kind kind() const noexcept;
  bool value() const noexcept;
  const std::string& atom() const noexcept;
  Condition lhs() const noexcept;
  Condition rhs() const noexcept;

  bool holds(const State& state) const;

  friend bool operator==(const Condition& a, const Condition& b);

 private:
  struct Node;
  explicit Condition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool holds(const Node& n, const State& state);
  static std::shared_ptr<const Node> make(Kind, bool, std::string, std::shared_ptr<const Node>,
                                          std::shared_ptr<const Node>);

  std::shared_ptr<const Node> node_;
};

struct Condition::Node {
  Kind kind;
  bool value;
  std::string atom;
  std::shared_ptr<const Node> lhs;  // null for leaves
  std::shared_ptr<const Node> rhs;
};

inline std::shared_ptr<const Condition::Node> Condition::make(Kind k, bool v, std::string a,
                                                              std::shared_ptr<const Node> l,
                                                              std::shared_ptr<const Node> r) {
  return std::make_shared<const Node>(Node{k, v, std::move(a), std::move(l), std::move(r)});
}

inline Condition::Kind Condition::kind() const noexcept { return node_->kind; }
inline bool Condition::value() const noexcept { return node_->value; }
inline const std::string& Condition::atom() const noexcept { return node_->atom; }
inline Condition Condition::lhs() const noexcept { return Condition(node_->lhs); }
inline Condition Condition::rhs() const noexcept { return Condition(node_->rhs); }

inline bool Condition::holds(const State& state) const { return holds(*node_, state); }

inline bool Condition::holds(const Node& n, const State& state) {
  switch (n.kind) {
    case Kind::Const: return n.value;
    case Kind::Ref: return state.contains(n.atom);
    case Kind::Not: return !holds(*n.lhs, state);
    case Kind::And: return holds(*n.lhs, state) && holds(*n.rhs, state);
    case Kind::Or: return holds(*n.lhs, state) || holds(*n.rhs, state);
  }
  return false;
}

inline bool operator==(const Condition& a, const Condition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Condition::Kind::Const: return a.value() == b.value();
    case Condition::Kind::Ref: return a.atom() == b.atom();
    case Condition::Kind::Not: return a.lhs() == b.lhs();
    case Condition::Kind::And:
    case Condition::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

inline bool eval_condition(const Condition& expr, const State& state) { return expr.holds(state); }

/// Renders with the fewest parentheses that parse back to the same tree
/// (`&&` and `||` are left-associative, `&&` binds tighter).
inline std::string print_condition(const Condition& c) {
  auto prec = [](const Condition& e) {
    switch (e.kind()) {
      case Condition::Kind::Or: return 1;
      case Condition::Kind::And: return 2;
      default: return 3;
    }
  };
  auto wrap = [&](const Condition& child, bool parens) {
    std::string s = print_condition(child);
    return parens ? "(" + s + ")" : s;
  };
  switch (c.kind()) {
    case Condition::Kind::Const: return c.value() ? "true" : "false";
    case Condition::Kind::Ref: return c.atom();
    case Condition::Kind::Not: return "!" + wrap(c.lhs(), prec(c.lhs()) < 3);
    case Condition::Kind::And:
    case Condition::Kind::Or: {
      const int p = prec(c);
      const char* op = c.kind() == Condition::Kind::And ? " && " : " || ";
      return wrap(c.lhs(), prec(c.lhs()) < p) + op + wrap(c.rhs(), prec(c.rhs()) <= p);
    }
  }
  return {};
}

namespace detail {

class ConditionParser {
 public:
  explicit ConditionParser(std::string_view text) : text_(text) {}

  Condition parse() {
    Condition c = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

 private:
  Condition parse_or() {
    Condition c = parse_and();
    while (accept("||")) c = c || parse_and();
    return c;
  }

  Condition parse_and() {
    Condition c = parse_unary();
    while (accept("&&")) c = c && parse_unary();
    return c;
  }

  Condition parse_unary() {
    if (accept("!")) return !parse_unary();
    if (accept("(")) {
      Condition c = parse_or();
      if (!accept(")")) fail("expected ')'");
      return c;
    }
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    std::string word(text_.substr(start, pos_ - start));
    if (word == "true") return Condition::constant(true);
    if (word == "false") return Condition::constant(false);
    if (!is_atom_name(word))
      throw SyntaxError(SyntaxError::Kind::Lexical, start, "invalid atom name '" + word + "'");
    return Condition::ref(std::move(word));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(SyntaxError::Kind::Syntax, pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: `true | false | atom | !e | e && e | e || e | (e)`.
inline Condition parse_condition(std::string_view text) { return detail::ConditionParser(text).parse(); }

}  // namespace reqpat
