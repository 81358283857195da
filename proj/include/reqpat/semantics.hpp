#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reqpat/pattern.hpp"

namespace reqpat {

namespace detail {

inline std::optional<std::size_t> first_where(const Condition& c, const Trace& t, std::size_t from,
                                              std::size_t to) {
  for (std::size_t k = from; k < to; ++k)
    if (c.holds(t[k])) return k;
  return std::nullopt;
}

// Shared by Between and AfterUntil. The opening q may coincide with a
// closing r; the segment then runs to the next r strictly after it.
inline std::vector<Segment> delimited_segments(const Condition& q, const Condition& r, const Trace& t,
                                               bool keep_open) {
  std::vector<Segment> out;
  const std::size_t n = t.size();
  std::size_t cursor = 0;
  while (cursor < n) {
    auto open = first_where(q, t, cursor, n);
    if (!open) break;
    auto close = first_where(r, t, *open + 1, n);
    if (!close) {
      if (keep_open) out.push_back({*open, n});
      break;
    }
    out.push_back({*open, *close});
    cursor = *close;
  }
  return out;
}

}  // namespace detail

/// The disjoint, increasing index ranges of `trace` that `scope` selects.
inline std::vector<Segment> segments(const Scope& s, const Trace& trace) {
  const std::size_t n = trace.size();
  return std::visit(overloaded{
                        [&](const scope::Globally&) { return std::vector<Segment>{{0, n}}; },
                        [&](const scope::Before& b) {
                          auto r = detail::first_where(b.r, trace, 0, n);
                          return r ? std::vector<Segment>{{0, *r}} : std::vector<Segment>{};
                        },
                        [&](const scope::After& a) {
                          auto q = detail::first_where(a.q, trace, 0, n);
                          return q ? std::vector<Segment>{{*q, n}} : std::vector<Segment>{};
                        },
                        [&](const scope::Between& b) { return detail::delimited_segments(b.q, b.r, trace, false); },
                        [&](const scope::AfterUntil& b) {
                          return detail::delimited_segments(b.q, b.r, trace, true);
                        },
                    },
                    s);
}

/// Number of maximal runs of consecutive positions in `seg` where `p` holds.
inline std::size_t count_blocks(const Condition& p, const Trace& trace, Segment seg) {
  std::size_t blocks = 0;
  bool inside = false;
  for (std::size_t k = seg.begin; k < seg.end; ++k) {
    const bool now = p.holds(trace[k]);
    if (now && !inside) ++blocks;
    inside = now;
  }
  return blocks;
}

namespace detail {

inline Verdict fail_at(std::size_t position, std::string reason) {
  return Fails{0, position, std::move(reason)};
}

// Greedy earliest match of chain[0..] at strictly increasing positions in
// (after, limit). Returns false if some element cannot be placed.
inline bool match_chain(const std::vector<Condition>& chain, const Trace& t, std::size_t first_candidate,
                        std::size_t limit) {
  std::size_t next = first_candidate;
  for (const auto& c : chain) {
    auto at = first_where(c, t, next, limit);
    if (!at) return false;
    next = *at + 1;
  }
  return true;
}

}  // namespace detail

/// Evaluates `pat` over the positions of `seg`. A returned Fails carries
/// segment_index 0; check() fills in the real index.
inline Verdict evaluate_pattern(const Pattern& pat, const Trace& trace, Segment seg) {
  const std::size_t i = seg.begin;
  const std::size_t j = seg.end;
  using detail::fail_at;
  using detail::first_where;

  return std::visit(
      overloaded{
          [&](const pattern::Absence& a) -> Verdict {
            if (auto k = first_where(a.p, trace, i, j)) return fail_at(*k, "p holds");
            return Holds{seg.empty()};
          },
          [&](const pattern::Universality& a) -> Verdict {
            for (std::size_t k = i; k < j; ++k)
              if (!a.p.holds(trace[k])) return fail_at(k, "p does not hold");
            return Holds{seg.empty()};
          },
          [&](const pattern::Existence& a) -> Verdict {
            if (first_where(a.p, trace, i, j)) return Holds{false};
            // An empty segment has no position of its own; cite its boundary.
            return fail_at(seg.empty() ? i : j - 1, "p never holds");
          },
          [&](const pattern::BoundedExistence& a) -> Verdict {
            std::size_t blocks = 0;
            bool inside = false;
            for (std::size_t k = i; k < j; ++k) {
              const bool now = a.p.holds(trace[k]);
              if (now && !inside && ++blocks > a.k)
                return fail_at(k, "p starts episode " + std::to_string(blocks) + " of at most " +
                                      std::to_string(a.k));
              inside = now;
            }
            return Holds{seg.empty()};
          },
          [&](const pattern::Precedence& a) -> Verdict {
            const std::size_t first_s = first_where(a.s, trace, i, j).value_or(j);
            if (auto k = first_where(a.p, trace, i, first_s)) return fail_at(*k, "p occurs before s");
            return Holds{!first_where(a.p, trace, i, j)};
          },
          [&](const pattern::Response& a) -> Verdict {
            bool triggered = false;
            // Latest s-position seen so far scanning right to left; answers
            // for every earlier trigger are found in one pass.
            std::optional<std::size_t> next_s;
            std::optional<std::size_t> failing;
            for (std::size_t k = j; k-- > i;) {
              const bool trig = a.p.holds(trace[k]);
              const bool resp = a.s.holds(trace[k]);
              if (trig) {
                triggered = true;
                const bool answered = (!a.strict && resp) || next_s.has_value();
                if (!answered) failing = k;
              }
              if (resp) next_s = k;
            }
            if (failing) return fail_at(*failing, a.strict ? "p is never strictly followed by s" : "p is never followed by s");
            return Holds{!triggered};
          },
          [&](const pattern::ResponseChain& a) -> Verdict {
            bool triggered = false;
            for (std::size_t k = i; k < j; ++k) {
              if (!a.p.holds(trace[k])) continue;
              triggered = true;
              if (!detail::match_chain(a.chain, trace, k + 1, j)) return fail_at(k, "p is not followed by the chain");
            }
            return Holds{!triggered};
          },
          [&](const pattern::PrecedenceChain& a) -> Verdict {
            auto first_p = first_where(a.p, trace, i, j);
            if (!first_p) return Holds{true};
            if (!detail::match_chain(a.chain, trace, i, *first_p)) return fail_at(*first_p, "p is not preceded by the chain");
            return Holds{false};
          },
      },
      pat);
}

/// Checks `req` on a finite trace: the first failing scope segment wins.
inline Verdict check(const Requirement& req, const Trace& trace) {
  const auto segs = segments(req.scope, trace);
  bool all_vacuous = true;
  for (std::size_t idx = 0; idx < segs.size(); ++idx) {
    Verdict v = evaluate_pattern(req.pattern, trace, segs[idx]);
    if (auto* f = std::get_if<Fails>(&v)) {
      f->segment_index = idx;
      return v;
    }
    if (std::holds_alternative<Inconclusive>(v)) return v;
    all_vacuous = all_vacuous && vacuous(v);
  }
  return Holds{all_vacuous};
}

}  // namespace reqpat
