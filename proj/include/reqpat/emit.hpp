#pragma once

#include <functional>

#include "reqpat/error.hpp"
#include "reqpat/ltl.hpp"
#include "reqpat/pattern.hpp"

namespace reqpat {

/// Maps a condition to the formula standing for it in emitted LTL.
using ConditionRenderer = std::function<ltl::Formula(const Condition&)>;

/// Structural translation: atoms become propositions.
inline ltl::Formula to_formula(const Condition& c) {
  using ltl::Formula;
  switch (c.kind()) {
    case Condition::Kind::Const: return c.value() ? Formula::top() : Formula::bottom();
    case Condition::Kind::Ref: return ltl::prop(c.atom());
    case Condition::Kind::Not: return !to_formula(c.lhs());
    case Condition::Kind::And: return to_formula(c.lhs()) && to_formula(c.rhs());
    case Condition::Kind::Or: return to_formula(c.lhs()) || to_formula(c.rhs());
  }
  return Formula::top();
}

namespace detail {

using ltl::Formula;

// Per-pattern pieces. For an end marker `e`:
//   upto(e)  holds at t iff the pattern holds on [t, first e at or after t);
//   head(e)  holds at t iff it holds on [t, first e strictly after t),
//            or [t, n) when no such e exists.
// With e = false both describe the suffix [t, n).
struct PatternFormulas {
  std::function<Formula()> global;
  std::function<Formula(const Formula& e, bool strong)> upto;
  std::function<Formula(const Formula& e)> head;
};

// Blocks of p in [t, first e) number at most k.
inline Formula bounded_upto(const Formula& p, const Formula& e, std::size_t k) {
  using namespace ltl;
  if (k == 0) return weak_until(!p, e);
  Formula block_then_rest = p && weak_until(p, e || (!p && bounded_upto(p, e, k - 1)));
  return weak_until(!p, e || block_then_rest);
}

inline Formula bounded_global(const Formula& p, std::size_t k) {
  using namespace ltl;
  if (k == 0) return always(!p);
  return weak_until(!p, weak_until(p, bounded_global(p, k - 1)));
}

inline PatternFormulas formulas_for(const Pattern& pat, const ConditionRenderer& render) {
  using namespace ltl;
  // U and W agree whenever e is known to occur; `strong` picks U so that
  // Before-scoped formulas read like the catalog's.
  auto wu = [](const Formula& a, const Formula& b, bool strong) { return strong ? until(a, b) : weak_until(a, b); };

  return std::visit(
      overloaded{
          [&](const pattern::Absence& a) -> PatternFormulas {
            Formula p = render(a.p);
            return {[=] { return always(!p); },
                    [=](const Formula& e, bool strong) { return wu(!p, e, strong); },
                    [=](const Formula& e) { return !p && weak_next(weak_until(!p, e)); }};
          },
          [&](const pattern::Universality& a) -> PatternFormulas {
            Formula p = render(a.p);
            return {[=] { return always(p); },
                    [=](const Formula& e, bool strong) { return wu(p, e, strong); },
                    [=](const Formula& e) { return p && weak_next(weak_until(p, e)); }};
          },
          [&](const pattern::Existence& a) -> PatternFormulas {
            Formula p = render(a.p);
            return {[=] { return eventually(p); },
                    [=](const Formula& e, bool) { return until(!e, p && !e); },
                    [=](const Formula& e) { return p || next(until(!e, p && !e)); }};
          },
          [&](const pattern::BoundedExistence& a) -> PatternFormulas {
            Formula p = render(a.p);
            const std::size_t k = a.k;
            return {[=] { return bounded_global(p, k); },
                    [=](const Formula& e, bool) { return bounded_upto(p, e, k); },
                    [=](const Formula& e) {
                      Formula quiet = !p && weak_next(bounded_upto(p, e, k));
                      if (k == 0) return quiet;
                      Formula in_block =
                          p && weak_next(weak_until(p, e || (!p && bounded_upto(p, e, k - 1))));
                      return quiet || in_block;
                    }};
          },
          [&](const pattern::Precedence& a) -> PatternFormulas {
            Formula s = render(a.s);
            Formula p = render(a.p);
            return {[=] { return weak_until(!p, s); },
                    [=](const Formula& e, bool strong) { return wu(!p, s || e, strong); },
                    [=](const Formula& e) { return s || (!p && weak_next(weak_until(!p, s || e))); }};
          },
          [&](const pattern::Response& a) -> PatternFormulas {
            Formula p = render(a.p);
            Formula s = render(a.s);
            if (a.strict) return {[=] { return always(implies(p, next(eventually(s)))); }, {}, {}};
            return {[=] { return always(implies(p, eventually(s))); },
                    [=](const Formula& e, bool strong) {
                      return wu(implies(p, until(!e, s && !e)), e, strong);
                    },
                    [=](const Formula& e) {
                      Formula here = implies(p, s || next(until(!e, s && !e)));
                      return here && weak_next(weak_until(implies(p, until(!e, s && !e)), e));
                    }};
          },
          [&](const pattern::ResponseChain&) -> PatternFormulas {
            throw UnsupportedPattern("chain patterns have no LTL emission");
          },
          [&](const pattern::PrecedenceChain&) -> PatternFormulas {
            throw UnsupportedPattern("chain patterns have no LTL emission");
          },
      },
      pat);
}

}  // namespace detail

/// Catalog-style LTL for a requirement. Between and after-until scopes are
/// anchored at the first `q` after each `r` (and at the start), which is
/// exactly where direct checking opens a segment.
///
/// Throws UnsupportedPattern for chain patterns and for strict response
/// outside the global scope.
inline ltl::Formula emit_ltl(const Requirement& req, const ConditionRenderer& render = to_formula) {
  using namespace ltl;
  if (const auto* r = std::get_if<pattern::Response>(&req.pattern);
      r && r->strict && !std::holds_alternative<scope::Globally>(req.scope))
    throw UnsupportedPattern("strict response is emitted only with global scope");
  const auto f = reqpat::detail::formulas_for(req.pattern, render);
  return std::visit(overloaded{
                        [&](const scope::Globally&) { return f.global(); },
                        [&](const scope::Before& b) {
                          Formula r = render(b.r);
                          return implies(eventually(r), f.upto(r, true));
                        },
                        [&](const scope::After& a) {
                          Formula q = render(a.q);
                          return weak_until(!q, q && f.global());
                        },
                        [&](const scope::Between& b) {
                          Formula q = render(b.q);
                          Formula r = render(b.r);
                          Formula phase = weak_until(!q, q && implies(next(eventually(r)), f.head(r)));
                          return phase && always(implies(r, phase));
                        },
                        [&](const scope::AfterUntil& b) {
                          Formula q = render(b.q);
                          Formula r = render(b.r);
                          Formula phase = weak_until(!q, q && f.head(r));
                          return phase && always(implies(r, phase));
                        },
                    },
                    req.scope);
}

}  // namespace reqpat
