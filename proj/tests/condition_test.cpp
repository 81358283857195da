#include <gtest/gtest.h>

#include "test_support.hpp"

namespace reqpat {
namespace {

using testing::atom;
using testing::state_of;

TEST(Condition, RefIsMembership) {
  EXPECT_TRUE(atom("at_2400").holds(state_of("at_2400")));
  EXPECT_FALSE(atom("at_2400").holds(state_of("")));
}

TEST(Condition, ConstantIgnoresState) {
  EXPECT_TRUE(eval_condition(Condition::constant(true), state_of("")));
  EXPECT_FALSE(eval_condition(Condition::constant(false), state_of("p q")));
}

TEST(Condition, BooleanConnectives) {
  EXPECT_FALSE(eval_condition(atom("p") && !atom("q"), state_of("p q")));
  EXPECT_TRUE(eval_condition(atom("p") && !atom("q"), state_of("p")));
  EXPECT_TRUE(eval_condition(atom("q") || atom("p"), state_of("p")));
}

TEST(Condition, RejectsBadAtomNames) {
  EXPECT_THROW(Condition::ref("9bad"), std::invalid_argument);
  EXPECT_THROW(Condition::ref("Upper"), std::invalid_argument);
  EXPECT_THROW(Condition::ref(""), std::invalid_argument);
  EXPECT_THROW(state_of("bad-name"), std::invalid_argument);
}

TEST(ConditionParser, Precedence) {
  EXPECT_EQ(parse_condition("a || b && c"), atom("a") || (atom("b") && atom("c")));
  EXPECT_EQ(parse_condition("!a && b"), !atom("a") && atom("b"));
  EXPECT_EQ(parse_condition("!(a || b)"), !(atom("a") || atom("b")));
  EXPECT_EQ(parse_condition(" true "), Condition::constant(true));
}

TEST(ConditionParser, Errors) {
  try {
    parse_condition("a &&");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.kind(), SyntaxError::Kind::Syntax);
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_condition("ok || Bad");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.kind(), SyntaxError::Kind::Lexical);
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_condition("(a"), SyntaxError);
  EXPECT_THROW(parse_condition("a b"), SyntaxError);
  EXPECT_THROW(parse_condition("a -> b"), SyntaxError);
}

TEST(ConditionParser, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  std::function<Condition(int)> gen = [&](int depth) -> Condition {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
    switch (pick(rng)) {
      case 0: return Condition::constant(rng() % 2);
      case 1: return Condition::ref(std::string(1, static_cast<char>('a' + rng() % 3)));
      case 2: return !gen(depth - 1);
      case 3: return gen(depth - 1) && gen(depth - 1);
      default: return gen(depth - 1) || gen(depth - 1);
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const Condition c = gen(4);
    ASSERT_EQ(parse_condition(print_condition(c)), c) << print_condition(c);
  }
}

TEST(ConditionPrinter, MinimalParentheses) {
  EXPECT_EQ(print_condition((atom("a") || atom("b")) && atom("c")), "(a || b) && c");
  EXPECT_EQ(print_condition(atom("a") && (atom("b") && atom("c"))), "a && (b && c)");
  EXPECT_EQ(print_condition((atom("a") && atom("b")) && atom("c")), "a && b && c");
  EXPECT_EQ(print_condition(!(atom("a") && atom("b"))), "!(a && b)");
}

}  // namespace
}  // namespace reqpat
