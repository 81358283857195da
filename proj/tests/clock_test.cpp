#include <gtest/gtest.h>

#include <regex>

#include "test_support.hpp"

namespace reqpat::clock {
namespace {

TEST(ClockDisplay, LeadingZeros) {
  EXPECT_EQ(clock_display(ClockState(547)), "09:07");
  EXPECT_EQ(clock_display(ClockState(0)), "00:00");
  EXPECT_EQ(clock_display(ClockState(1440)), "24:00");
  EXPECT_EQ(clock_display(ClockState(1439)), "23:59");
}

TEST(ClockState, RangeChecked) {
  EXPECT_THROW(ClockState(-1), std::out_of_range);
  EXPECT_THROW(ClockState(1441), std::out_of_range);
}

TEST(ClockSut, StartsAtZeroHundred) {
  Clock c;
  c.reset();
  EXPECT_EQ(c.display(), "00:00");
  EXPECT_FALSE(c.observations().contains(kMidnightAtom));
}

TEST(ClockSut, MidnightAfterADay) {
  Clock c;
  c.reset();
  for (int i = 0; i < 1440; ++i) c.tick();
  EXPECT_TRUE(c.observations().contains(kMidnightAtom));
  EXPECT_EQ(c.display(), "24:00");
}

TEST(ClockSut, WrapSkipsDuplicateZeroHundred) {
  Clock c;
  c.reset();
  for (int i = 0; i < 1441; ++i) c.tick();
  EXPECT_EQ(c.state().minute(), 1);
  EXPECT_EQ(c.display(), "00:01");
}

TEST(ClockInvariants, DisplayFormatForEveryState) {
  const std::regex shape("^([01][0-9]|2[0-4]):[0-5][0-9]$");
  for (int m = 0; m <= kDayMinutes; ++m) {
    const std::string d = clock_display(ClockState(m));
    ASSERT_EQ(d.size(), 5u);
    ASSERT_TRUE(std::regex_match(d, shape)) << d;
  }
}

TEST(ClockInvariants, CycleLengthIsOneDay) {
  const auto instant = [](ClockState c) { return c.minute() == 0 ? kDayMinutes : c.minute(); };
  for (int m = 0; m <= kDayMinutes; ++m) {
    const ClockState start(m);
    ClockState s = start;
    for (int k = 1; k < kDayMinutes; ++k) {
      s = s.next();
      ASSERT_NE(instant(s), instant(start)) << m << " after " << k;
    }
    ASSERT_EQ(instant(s.next()), instant(start)) << m;
  }
}

TEST(ClockInvariants, ExactlyOneMidnightState) {
  int count = 0;
  for (int m = 0; m <= kDayMinutes; ++m) {
    count += ClockState(m).is_midnight();
  }
  EXPECT_EQ(count, 1);
}

TEST(BuiltinSuite, Shape) {
  const Suite s = builtin_suite();
  ASSERT_EQ(s.conditions().size(), 1u);
  EXPECT_EQ(s.conditions()[0].first, "midnight");
  EXPECT_EQ(s.conditions()[0].second, midnight());
  ASSERT_EQ(s.requirements().size(), 2u);
  EXPECT_EQ(s.requirements()[0].name, "STATEMENT_0");
  EXPECT_EQ(s.requirements()[0].pattern, Pattern(pattern::Existence{midnight()}));
  EXPECT_EQ(s.requirements()[1].name, "STATEMENT_1_1");
  EXPECT_EQ(s.requirements()[1].pattern, Pattern(pattern::Response{midnight(), midnight(), true}));
  EXPECT_EQ(s.requirements()[1].meta.source_quote, "the day runs from midnight to midnight");
}

TEST(BuiltinSuite, PicnicSaysRespondsTo) {
  const Suite s = builtin_suite();
  EXPECT_NE(render_requirement(s.requirements()[1], names_from(s)).phrase.find("responds to"), std::string::npos);
}

TEST(BuiltinSuite, SerializedFormRoundTrips) {
  const Suite s = builtin_suite();
  EXPECT_EQ(load_suite(save_suite(s)), s);
}

TEST(BuiltinSuite, ShippedDataFileMatches) {
  const Suite shipped = load_suite(testing::read_file(std::string(REQPAT_DATA_DIR) + "/clock_suite.json"));
  EXPECT_EQ(shipped, builtin_suite());
}

TEST(BuiltinSuite, ShippedTraceIsTwoRecordedDays) {
  Clock c;
  const Trace shipped = load_trace(testing::read_file(std::string(REQPAT_DATA_DIR) + "/clock_two_days.jsonl"));
  EXPECT_EQ(shipped, record(c, 2880));
}

TEST(BuiltinSuite, TwoDayTraceVerdicts) {
  Clock c;
  const Trace t = record(c, 2880);
  ASSERT_EQ(t.size(), 2881u);
  const Suite s = builtin_suite();
  EXPECT_EQ(check(s.requirements()[0], t), Verdict(Holds{false}));

  Requirement reflexive = s.requirements()[1];
  std::get<pattern::Response>(reflexive.pattern).strict = false;
  EXPECT_EQ(check(reflexive, t), Verdict(Holds{false}));

  // The midnight at the last index has no later midnight inside the trace.
  const Verdict strict = check(s.requirements()[1], t);
  ASSERT_TRUE(fails(strict));
  EXPECT_EQ(std::get<Fails>(strict).position, 2880u);
}

TEST(BuiltinSuite, HundredStepsNeverReachMidnight) {
  Clock c;
  const Trace t = record(c, 99);
  EXPECT_TRUE(fails(check(builtin_suite().requirements()[0], t)));
  EXPECT_EQ(check(builtin_suite().requirements()[1], t), Verdict(Holds{true}));
}

TEST(DriveMode, BothStatementsTakeExactlyOneDay) {
  Clock c;
  c.reset();
  EXPECT_EQ(establish(c, midnight(), kDayMinutes), DriveOutcome(drive::Reached{1440}));
  EXPECT_EQ(drive_verify_response(c, midnight(), midnight(), kDayMinutes), DriveOutcome(drive::Reached{1440}));
}

}  // namespace
}  // namespace reqpat::clock
