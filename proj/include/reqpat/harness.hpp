#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "reqpat/condition.hpp"
#include "reqpat/state.hpp"

namespace reqpat {

/// A system under test driven through start/tick and observed as atoms.
/// Implementations must be deterministic.
class Sut {
 public:
  virtual ~Sut() = default;

  /// Restores the initial state.
  virtual void reset() = 0;
  /// Advances one step.
  virtual void tick() = 0;
  virtual State observations() const = 0;
};

namespace drive {
struct Reached {
  std::size_t steps = 0;
  friend bool operator==(const Reached&, const Reached&) = default;
};
struct NotReached {
  std::size_t bound = 0;
  friend bool operator==(const NotReached&, const NotReached&) = default;
};
struct PreconditionViolation {
  std::string tag;
  friend bool operator==(const PreconditionViolation&, const PreconditionViolation&) = default;
};
}  // namespace drive

using DriveOutcome = std::variant<drive::Reached, drive::NotReached, drive::PreconditionViolation>;

inline std::string to_string(const DriveOutcome& o) {
  if (const auto* r = std::get_if<drive::Reached>(&o)) return "Reached(" + std::to_string(r->steps) + ")";
  if (const auto* n = std::get_if<drive::NotReached>(&o)) return "NotReached(" + std::to_string(n->bound) + ")";
  return "PreconditionViolation(" + std::get<drive::PreconditionViolation>(o).tag + ")";
}

/// Tag of the response-verification precondition: the trigger must hold.
inline constexpr const char* kTriggerPrecondition = "p_holds";

/// Resets `sut` and records its initial state plus `steps` successors.
inline Trace record(Sut& sut, std::size_t steps) {
  Trace out;
  out.reserve(steps + 1);
  sut.reset();
  out.push_back(sut.observations());
  for (std::size_t k = 0; k < steps; ++k) {
    sut.tick();
    out.push_back(sut.observations());
  }
  return out;
}

/// Ticks from the current state until `cond` holds, at most `bound` times.
/// Does not reset, so establishment composes with later verification.
inline DriveOutcome establish(Sut& sut, const Condition& cond, std::size_t bound) {
  for (std::size_t k = 0;; ++k) {
    if (cond.holds(sut.observations())) return drive::Reached{k};
    if (k == bound) return drive::NotReached{bound};
    sut.tick();
  }
}

/// Drive-mode response check from the current state. Requires `trigger`
/// to hold now (tag p_holds); then waits at least one and at most `bound`
/// ticks for `response`.
inline DriveOutcome drive_verify_response(Sut& sut, const Condition& trigger, const Condition& response,
                                          std::size_t bound) {
  if (!trigger.holds(sut.observations())) return drive::PreconditionViolation{kTriggerPrecondition};
  for (std::size_t k = 1; k <= bound; ++k) {
    sut.tick();
    if (response.holds(sut.observations())) return drive::Reached{k};
  }
  return drive::NotReached{bound};
}

}  // namespace reqpat
