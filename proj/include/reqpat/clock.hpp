#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include "reqpat/harness.hpp"
#include "reqpat/suite.hpp"

namespace reqpat::clock {

/// Minutes in a day; minute 1440 is displayed as 24:00.
inline constexpr int kDayMinutes = 1440;
inline constexpr const char* kMidnightAtom = "at_2400";

/// Clock time at minute granularity, 0..1440 inclusive.
class ClockState {
 public:
  constexpr ClockState() = default;
  explicit constexpr ClockState(int minute) : minute_(minute) {
    if (minute < 0 || minute > kDayMinutes) throw std::out_of_range("clock minute out of range");
  }

  constexpr int minute() const noexcept { return minute_; }

  /// 24:00 is followed by 00:01: it is the same instant as 00:00 of the
  /// next day, so 00:00 is not repeated.
  constexpr ClockState next() const noexcept { return ClockState(minute_ == kDayMinutes ? 1 : minute_ + 1); }

  constexpr bool is_midnight() const noexcept { return minute_ == kDayMinutes; }

  friend constexpr bool operator==(ClockState, ClockState) = default;

 private:
  int minute_ = 0;
};

/// "HH:MM" with leading zeros.
inline std::string clock_display(ClockState s) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d", s.minute() / 60, s.minute() % 60);
  return buf;
}

/// The candidate solution: start at 00:00, advance a minute per tick.
class Clock : public Sut {
 public:
  void reset() override { state_ = ClockState{}; }
  void tick() override { state_ = state_.next(); }
  State observations() const override {
    State s;
    if (state_.is_midnight()) s.insert(kMidnightAtom);
    return s;
  }

  ClockState state() const noexcept { return state_; }
  std::string display() const { return clock_display(state_); }

 private:
  ClockState state_;
};

/// The single definition of midnight: the clock shows 24:00.
inline Condition midnight() { return Condition::ref(kMidnightAtom); }

inline constexpr const char* kSourceUrl = "https://en.wikipedia.org/wiki/24-hour_clock";
inline constexpr const char* kRepoBase = "https://example.org/clock-requirements/";

/// STATEMENT_0: midnight is reachable. STATEMENT_1_1: "the day runs from
/// midnight to midnight", i.e. midnight strictly responds to midnight.
inline Suite builtin_suite() {
  Suite suite;
  suite.define_condition("midnight", midnight());

  Requirement s0{"STATEMENT_0", pattern::Existence{midnight()}, scope::Globally{}, {}};
  s0.meta.repo_url = std::string(kRepoBase) + "statement_0";
  suite.add_requirement(std::move(s0));

  Requirement s11{"STATEMENT_1_1", pattern::Response{midnight(), midnight(), true}, scope::Globally{}, {}};
  s11.meta.source_url = kSourceUrl;
  s11.meta.source_quote = "the day runs from midnight to midnight";
  s11.meta.repo_url = std::string(kRepoBase) + "statement_1_1";
  suite.add_requirement(std::move(s11));
  return suite;
}

}  // namespace reqpat::clock
