#include <gtest/gtest.h>

#include "support.hpp"

using namespace qll;
using namespace qll::testing;

TEST(Syntax, NegationPushesToAtoms) {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  EXPECT_EQ(negate(Formula::tensor(a, b)), Formula::par(negate(a), negate(b)));
  EXPECT_EQ(negate(Formula::bot()), Formula::top());
  EXPECT_EQ(negate(Formula::one()), Formula::one());
  EXPECT_EQ(negate(Formula::plor(a, b)), Formula::pland(negate(a), negate(b)));
}

TEST(Syntax, NegationIsInvolutive) {
  std::mt19937 g(1);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(g, 6);
    EXPECT_EQ(negate(negate(f)), f);
    EXPECT_EQ(connectives(negate(f)), connectives(f));
  }
}

TEST(Syntax, ParseFormula) {
  EXPECT_EQ(parse_formula("(a * ~b)"), Formula::tensor(Formula::atom("a"), Formula::neg_atom("b")));
  EXPECT_EQ(parse_formula("neg((a + b))"), Formula::pland(Formula::neg_atom("a"), Formula::neg_atom("b")));
  EXPECT_EQ(parse_formula("bot"), Formula::bot());
  EXPECT_EQ(parse_formula("top"), Formula::top());
  EXPECT_EQ(parse_formula("1"), Formula::one());
  EXPECT_EQ(parse_formula("~(a | 1)"), Formula::tensor(Formula::neg_atom("a"), Formula::one()));
  EXPECT_EQ(parse_formula("x_1"), Formula::atom("x_1"));
}

TEST(Syntax, ParseErrorsCarryOffsets) {
  try {
    parse_formula("(a * )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 5u);
  }
  EXPECT_THROW(parse_formula("(a * b"), ParseError);
  EXPECT_THROW(parse_formula("A"), ParseError);
  EXPECT_THROW(parse_sequent("a + b + c |-"), ParseError);
  EXPECT_THROW(parse_sequent("a |- b |- c"), ParseError);
}

TEST(Syntax, ParseSequent) {
  Sequent s = parse_sequent("a, b |- c");
  EXPECT_EQ(s.lhs, (Cedent{Formula::atom("a"), Formula::atom("b")}));
  EXPECT_EQ(s.rhs, Cedent{Formula::atom("c")});
  EXPECT_EQ(parse_sequent("|-"), Sequent{});
  EXPECT_EQ(parse_sequent("b, a |- c"), s);
  EXPECT_EQ(parse_sequent("a + a |- a").lhs, Cedent{parse_formula("(a + a)")});
}

TEST(Syntax, RoundTrips) {
  std::mt19937 g(2);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_formula(g, 5);
    EXPECT_EQ(parse_formula(to_string(f)), f);
  }
  for (const auto& s : sequent_corpus(200)) EXPECT_EQ(parse_sequent(to_string(s)), s);
}

TEST(Syntax, CedentsAreMultisets) {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  Cedent c{a, b, a};
  EXPECT_EQ(c, (Cedent{b, a, a}));
  EXPECT_NE(c, (Cedent{a, b}));
  EXPECT_EQ(c.minus(a), (Cedent{a, b}));
  EXPECT_TRUE(c.includes(Cedent{a, a}));
  EXPECT_FALSE(c.includes(Cedent{b, b}));
}

TEST(Syntax, Complexity) {
  EXPECT_EQ(complexity(parse_sequent("a |- a")), 2);
  EXPECT_EQ(complexity(parse_sequent("|- (a * b)")), 2);
  EXPECT_EQ(complexity(parse_sequent("|-")), 0);
  EXPECT_EQ(complexity(parse_sequent("(a + b), c |- (a & (b | c))")), 6);
}

TEST(Syntax, OneSided) {
  EXPECT_EQ(one_sided(parse_sequent("a |- b")), parse_sequent("|- ~a, b"));
  EXPECT_EQ(one_sided(parse_sequent("a * b |-")), parse_sequent("|- (~a | ~b)"));
  EXPECT_EQ(one_sided(parse_sequent("|- a, bot")), parse_sequent("|- a, bot"));
}

TEST(Syntax, Structures) {
  Hardness p(1);
  Structure h = parse_structure("(padd (seq a |- a) (const 0))", p);
  ASSERT_EQ(h.kind(), Structure::Kind::Bin);
  EXPECT_EQ(h.op(), RedOp::Padd);
  EXPECT_EQ(h.left().sequent(), parse_sequent("a |- a"));
  EXPECT_EQ(h.right().value(), Value::zero(p));
  EXPECT_FALSE(is_closed(h));
  EXPECT_EQ(parse_structure(to_string(h), p), h);
  EXPECT_EQ(eval_closed(parse_structure("(pcoadd (const 1) (const 1))", p)), Value::from_real(Rational(1, 2), p));
  EXPECT_EQ(eval_closed(parse_structure("(ten (const 0) (const inf))", p)), Value::zero(p));
  EXPECT_EQ(eval_closed(parse_structure("(cot (const 0) (const inf))", p)), Value::infinity(p));
  Hardness p2(2);
  Structure k = parse_structure("(ten (const pc:1/2) (seq |- a, b))", p2);
  EXPECT_EQ(parse_structure(to_string(k), p2), k);
  EXPECT_THROW(parse_structure("(ten (const 1))", p), ParseError);
}
