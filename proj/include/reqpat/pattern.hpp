#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reqpat/condition.hpp"

namespace reqpat {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Scopes. `q` opens a scope, `r` closes it.
namespace scope {
struct Globally {};
struct Before {
  Condition r;
};
struct After {
  Condition q;
};
struct Between {
  Condition q, r;
};
struct AfterUntil {
  Condition q, r;
};
}  // namespace scope

using Scope = std::variant<scope::Globally, scope::Before, scope::After, scope::Between, scope::AfterUntil>;

// Occurrence and order patterns. `p` is the subject (or trigger), `s` the
// answer or enabling condition.
namespace pattern {
struct Absence {
  Condition p;
};
struct Universality {
  Condition p;
};
struct Existence {
  Condition p;
};
/// At most `k` maximal runs of consecutive p-states.
struct BoundedExistence {
  Condition p;
  std::size_t k = 0;
};
/// `s` precedes `p`.
struct Precedence {
  Condition s, p;
};
/// `s` responds to `p`. Strict responses must come at a later position.
struct Response {
  Condition p, s;
  bool strict = false;
};
/// Every `p` is followed by chain[0], then chain[1], ... at increasing positions.
struct ResponseChain {
  Condition p;
  std::vector<Condition> chain;
};
/// The first `p` is preceded by chain[0], chain[1], ... at increasing positions.
struct PrecedenceChain {
  std::vector<Condition> chain;
  Condition p;
};
}  // namespace pattern

using Pattern = std::variant<pattern::Absence, pattern::Universality, pattern::Existence, pattern::BoundedExistence,
                             pattern::Precedence, pattern::Response, pattern::ResponseChain, pattern::PrecedenceChain>;

/// Where a requirement came from and where its code version lives.
struct TraceLinks {
  std::optional<std::string> source_url;
  std::optional<std::string> source_quote;
  std::optional<std::string> repo_url;

  bool empty() const noexcept { return !source_url && !source_quote && !repo_url; }
  friend bool operator==(const TraceLinks&, const TraceLinks&) = default;
};

/// One application of a pattern template in a scope.
struct Requirement {
  std::string name;
  Pattern pattern;
  Scope scope = scope::Globally{};
  TraceLinks meta;
};

// Structural equality for the variants above.
namespace scope {
inline bool operator==(const Globally&, const Globally&) { return true; }
inline bool operator==(const Before& a, const Before& b) { return a.r == b.r; }
inline bool operator==(const After& a, const After& b) { return a.q == b.q; }
inline bool operator==(const Between& a, const Between& b) { return a.q == b.q && a.r == b.r; }
inline bool operator==(const AfterUntil& a, const AfterUntil& b) { return a.q == b.q && a.r == b.r; }
}  // namespace scope

namespace pattern {
inline bool operator==(const Absence& a, const Absence& b) { return a.p == b.p; }
inline bool operator==(const Universality& a, const Universality& b) { return a.p == b.p; }
inline bool operator==(const Existence& a, const Existence& b) { return a.p == b.p; }
inline bool operator==(const BoundedExistence& a, const BoundedExistence& b) { return a.p == b.p && a.k == b.k; }
inline bool operator==(const Precedence& a, const Precedence& b) { return a.s == b.s && a.p == b.p; }
inline bool operator==(const Response& a, const Response& b) {
  return a.p == b.p && a.s == b.s && a.strict == b.strict;
}
inline bool operator==(const ResponseChain& a, const ResponseChain& b) { return a.p == b.p && a.chain == b.chain; }
inline bool operator==(const PrecedenceChain& a, const PrecedenceChain& b) {
  return a.chain == b.chain && a.p == b.p;
}
}  // namespace pattern

inline bool operator==(const Requirement& a, const Requirement& b) {
  return a.name == b.name && a.pattern == b.pattern && a.scope == b.scope && a.meta == b.meta;
}

/// Every condition a scope mentions, in (q, r) order.
inline std::vector<Condition> conditions_of(const Scope& s) {
  return std::visit(overloaded{
                        [](const scope::Globally&) { return std::vector<Condition>{}; },
                        [](const scope::Before& b) { return std::vector<Condition>{b.r}; },
                        [](const scope::After& a) { return std::vector<Condition>{a.q}; },
                        [](const scope::Between& b) { return std::vector<Condition>{b.q, b.r}; },
                        [](const scope::AfterUntil& b) { return std::vector<Condition>{b.q, b.r}; },
                    },
                    s);
}

/// Every condition a pattern mentions, in declaration order.
inline std::vector<Condition> conditions_of(const Pattern& p) {
  return std::visit(overloaded{
                        [](const pattern::Absence& a) { return std::vector<Condition>{a.p}; },
                        [](const pattern::Universality& a) { return std::vector<Condition>{a.p}; },
                        [](const pattern::Existence& a) { return std::vector<Condition>{a.p}; },
                        [](const pattern::BoundedExistence& a) { return std::vector<Condition>{a.p}; },
                        [](const pattern::Precedence& a) { return std::vector<Condition>{a.s, a.p}; },
                        [](const pattern::Response& a) { return std::vector<Condition>{a.p, a.s}; },
                        [](const pattern::ResponseChain& a) {
                          std::vector<Condition> out{a.p};
                          out.insert(out.end(), a.chain.begin(), a.chain.end());
                          return out;
                        },
                        [](const pattern::PrecedenceChain& a) {
                          std::vector<Condition> out(a.chain);
                          out.push_back(a.p);
                          return out;
                        },
                    },
                    p);
}

// Verdicts.
struct Holds {
  bool vacuous = false;
  friend bool operator==(const Holds&, const Holds&) = default;
};
struct Fails {
  std::size_t segment_index = 0;
  std::size_t position = 0;
  std::string reason;
  friend bool operator==(const Fails&, const Fails&) = default;
};
struct Inconclusive {
  std::string reason;
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using Verdict = std::variant<Holds, Fails, Inconclusive>;

inline bool holds(const Verdict& v) noexcept { return std::holds_alternative<Holds>(v); }
inline bool fails(const Verdict& v) noexcept { return std::holds_alternative<Fails>(v); }
inline bool vacuous(const Verdict& v) noexcept {
  const auto* h = std::get_if<Holds>(&v);
  return h && h->vacuous;
}

}  // namespace reqpat
