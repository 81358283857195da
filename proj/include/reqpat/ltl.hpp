#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reqpat/error.hpp"
#include "reqpat/state.hpp"

namespace reqpat::ltl {

enum class Op {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,
  WeakNext,
  Until,
  WeakUntil,
  Eventually,
  Always,
};

inline constexpr int arity(Op op) noexcept {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Prop: return 0;
    case Op::Not:
    case Op::Next:
    case Op::WeakNext:
    case Op::Eventually:
    case Op::Always: return 1;
    default: return 2;
  }
}

/// Immutable finite-trace LTL formula.
class Formula {
 public:
  Formula() : Formula(make(Op::True, {}, nullptr, nullptr)) {}

  static Formula top() { return Formula(); }
  static Formula bottom() { return Formula(make(Op::False, {}, nullptr, nullptr)); }
  static Formula prop(std::string name) {
    if (!is_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
    return Formula(make(Op::Prop, std::move(name), nullptr, nullptr));
  }
  static Formula unary(Op op, const Formula& f) { return Formula(make(op, {}, f.node_, nullptr)); }
  static Formula binary(Op op, const Formula& a, const Formula& b) { return Formula(make(op, {}, a.node_, b.node_)); }

  Op op() const noexcept { return node_->op; }
  const std::string& name() const noexcept { return node_->name; }
  Formula lhs() const noexcept { return Formula(node_->lhs); }
  Formula rhs() const noexcept { return Formula(node_->rhs); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name()) return false;
    const int n = arity(a.op());
    return (n < 1 || a.lhs() == b.lhs()) && (n < 2 || a.rhs() == b.rhs());
  }

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::shared_ptr<const Node> make(Op op, std::string name, std::shared_ptr<const Node> l,
                                          std::shared_ptr<const Node> r) {
    return std::make_shared<const Node>(Node{op, std::move(name), std::move(l), std::move(r)});
  }

  std::shared_ptr<const Node> node_;
};

// Builders.
inline Formula prop(std::string name) { return Formula::prop(std::move(name)); }
inline Formula operator!(const Formula& f) { return Formula::unary(Op::Not, f); }
inline Formula operator&&(const Formula& a, const Formula& b) { return Formula::binary(Op::And, a, b); }
inline Formula operator||(const Formula& a, const Formula& b) { return Formula::binary(Op::Or, a, b); }
inline Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Op::Implies, a, b); }
inline Formula next(const Formula& f) { return Formula::unary(Op::Next, f); }
inline Formula weak_next(const Formula& f) { return Formula::unary(Op::WeakNext, f); }
inline Formula until(const Formula& a, const Formula& b) { return Formula::binary(Op::Until, a, b); }
inline Formula weak_until(const Formula& a, const Formula& b) { return Formula::binary(Op::WeakUntil, a, b); }
inline Formula eventually(const Formula& f) { return Formula::unary(Op::Eventually, f); }
inline Formula always(const Formula& f) { return Formula::unary(Op::Always, f); }

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline bool is_binary(Op op) { return arity(op) == 2; }

// Associative side on which the same operator prints without parentheses:
// && and || chain to the left, -> to the right. U and W always parenthesise.
inline bool chains_without_parens(Op parent, Op child, bool right_side) {
  if (parent != child) return false;
  if (parent == Op::And || parent == Op::Or) return !right_side;
  if (parent == Op::Implies) return right_side;
  return false;
}

}  // namespace detail

/// Canonical text. Binary subformulas of a binary operator are parenthesised
/// unless they continue an associative chain; `[]` always parenthesises.
inline std::string print_formula(const Formula& f) {
  auto operand = [](const Formula& child) {
    std::string s = print_formula(child);
    return detail::is_binary(child.op()) ? "(" + s + ")" : s;
  };
  auto word_prefix = [&](const char* op, const Formula& child) {
    std::string s = operand(child);
    const char c = s.front();
    const bool glue = !(std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    return std::string(op) + (glue ? "" : " ") + s;
  };
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Prop: return f.name();
    case Op::Not: return "!" + operand(f.lhs());
    case Op::Next: return word_prefix("X", f.lhs());
    case Op::WeakNext: return word_prefix("WX", f.lhs());
    case Op::Eventually: return "<>" + operand(f.lhs());
    case Op::Always: return "[](" + print_formula(f.lhs()) + ")";
    default: break;
  }
  const char* sym = "";
  switch (f.op()) {
    case Op::And: sym = " && "; break;
    case Op::Or: sym = " || "; break;
    case Op::Implies: sym = " -> "; break;
    case Op::Until: sym = " U "; break;
    case Op::WeakUntil: sym = " W "; break;
    default: break;
  }
  auto side = [&](const Formula& child, bool right) {
    if (!detail::is_binary(child.op()) || detail::chains_without_parens(f.op(), child.op(), right))
      return print_formula(child);
    return "(" + print_formula(child) + ")";
  };
  return side(f.lhs(), false) + sym + side(f.rhs(), true);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

enum class Tok { Atom, True, False, Not, Next, WeakNext, Eventually, Always, Until, WeakUntil, And, Or, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = s.substr(i, 2);
    if (two == "<>") { out.push_back({Tok::Eventually, "<>", start}); i += 2; continue; }
    if (two == "[]") { out.push_back({Tok::Always, "[]", start}); i += 2; continue; }
    if (two == "&&") { out.push_back({Tok::And, "&&", start}); i += 2; continue; }
    if (two == "||") { out.push_back({Tok::Or, "||", start}); i += 2; continue; }
    if (two == "->") { out.push_back({Tok::Implies, "->", start}); i += 2; continue; }
    if (c == '!') { out.push_back({Tok::Not, "!", start}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::LParen, "(", start}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", start}); ++i; continue; }
    if (!word_char(c)) throw SyntaxError(SyntaxError::Kind::Lexical, start, std::string("unexpected character '") + c + "'");

    while (i < s.size() && word_char(s[i])) ++i;
    std::string word(s.substr(start, i - start));
    if (std::isupper(static_cast<unsigned char>(word.front()))) {
      Tok t;
      if (word == "X") t = Tok::Next;
      else if (word == "WX") t = Tok::WeakNext;
      else if (word == "F") t = Tok::Eventually;
      else if (word == "G") t = Tok::Always;
      else if (word == "U") t = Tok::Until;
      else if (word == "W") t = Tok::WeakUntil;
      else throw SyntaxError(SyntaxError::Kind::Lexical, start, "unknown operator '" + word + "'");
      out.push_back({t, word, start});
      continue;
    }
    if (word == "true") out.push_back({Tok::True, word, start});
    else if (word == "false") out.push_back({Tok::False, word, start});
    else if (is_atom_name(word)) out.push_back({Tok::Atom, word, start});
    else throw SyntaxError(SyntaxError::Kind::Lexical, start, "invalid atom name '" + word + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = f || conjunction();
    return f;
  }

  Formula conjunction() {
    Formula f = temporal();
    while (accept(Tok::And)) f = f && temporal();
    return f;
  }

  Formula temporal() {
    Formula lhs = unary_expr();
    if (accept(Tok::Until)) return until(lhs, temporal());
    if (accept(Tok::WeakUntil)) return weak_until(lhs, temporal());
    return lhs;
  }

  Formula unary_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: ++at_; return !unary_expr();
      case Tok::Next: ++at_; return next(unary_expr());
      case Tok::WeakNext: ++at_; return weak_next(unary_expr());
      case Tok::Eventually: ++at_; return eventually(unary_expr());
      case Tok::Always: ++at_; return always(unary_expr());
      case Tok::True: ++at_; return Formula::top();
      case Tok::False: ++at_; return Formula::bottom();
      case Tok::Atom: ++at_; return prop(t.text);
      case Tok::LParen: {
        ++at_;
        Formula f = implication();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return f;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  const Token& peek() const { return toks_[at_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(SyntaxError::Kind::Syntax, peek().pos, msg);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace detail

/// Precedence, loosest first: `->` (right), `||`, `&&`, `U`/`W` (right),
/// then prefix `! X WX <> F [] G`.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

/// A formula flattened to post-order so one trace evaluation is a single
/// backward sweep per subformula with no allocation after the first call.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f) { root_ = flatten(f); }

  /// Truth value at `pos`. Throws std::invalid_argument on an empty trace or
  /// an out-of-range position.
  bool eval(const Trace& trace, std::size_t pos = 0) const {
    const std::size_t n = trace.size();
    if (n == 0) throw std::invalid_argument("finite-trace LTL is undefined on the empty trace");
    if (pos >= n) throw std::invalid_argument("position out of range");
    table_.resize(code_.size() * n);
    for (std::size_t idx = 0; idx < code_.size(); ++idx) sweep(idx, trace);
    return table_[root_ * n + pos] != 0;
  }

  std::size_t size() const noexcept { return code_.size(); }

 private:
  struct Instr {
    Op op;
    std::string name;
    std::size_t a = 0;
    std::size_t b = 0;
  };

  std::size_t flatten(const Formula& f) {
    Instr ins{f.op(), f.name()};
    if (arity(f.op()) >= 1) ins.a = flatten(f.lhs());
    if (arity(f.op()) == 2) ins.b = flatten(f.rhs());
    code_.push_back(std::move(ins));
    return code_.size() - 1;
  }

  void sweep(std::size_t idx, const Trace& trace) const {
    const std::size_t n = trace.size();
    const Instr& ins = code_[idx];
    char* v = &table_[idx * n];
    const char* a = &table_[ins.a * n];
    const char* b = &table_[ins.b * n];
    // Positions are filled right to left; `later` is the value at t + 1,
    // seeded with the value "past the end" for each operator.
    char later = 0;
    switch (ins.op) {
      case Op::True: for (std::size_t t = 0; t < n; ++t) v[t] = 1; return;
      case Op::False: for (std::size_t t = 0; t < n; ++t) v[t] = 0; return;
      case Op::Prop: for (std::size_t t = 0; t < n; ++t) v[t] = trace[t].contains(ins.name); return;
      case Op::Not: for (std::size_t t = 0; t < n; ++t) v[t] = !a[t]; return;
      case Op::And: for (std::size_t t = 0; t < n; ++t) v[t] = a[t] && b[t]; return;
      case Op::Or: for (std::size_t t = 0; t < n; ++t) v[t] = a[t] || b[t]; return;
      case Op::Implies: for (std::size_t t = 0; t < n; ++t) v[t] = !a[t] || b[t]; return;
      case Op::Next: for (std::size_t t = 0; t < n; ++t) v[t] = t + 1 < n && a[t + 1]; return;
      case Op::WeakNext: for (std::size_t t = 0; t < n; ++t) v[t] = t + 1 == n || a[t + 1]; return;
      case Op::Until:
        later = 0;
        for (std::size_t t = n; t-- > 0;) later = v[t] = b[t] || (a[t] && later);
        return;
      case Op::WeakUntil:
        later = 1;
        for (std::size_t t = n; t-- > 0;) later = v[t] = b[t] || (a[t] && later);
        return;
      case Op::Eventually:
        later = 0;
        for (std::size_t t = n; t-- > 0;) later = v[t] = a[t] || later;
        return;
      case Op::Always:
        later = 1;
        for (std::size_t t = n; t-- > 0;) later = v[t] = a[t] && later;
        return;
    }
  }

  std::vector<Instr> code_;
  std::size_t root_ = 0;
  mutable std::vector<char> table_;
};

/// Finite-trace semantics of `f` at `pos`; the trace must be nonempty.
inline bool eval_ltlf(const Formula& f, const Trace& trace, std::size_t pos = 0) {
  return CompiledFormula(f).eval(trace, pos);
}

}  // namespace reqpat::ltl
