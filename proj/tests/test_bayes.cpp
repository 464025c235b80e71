#include <gtest/gtest.h>

#include "qll/bayes.hpp"
#include "support.hpp"

using namespace qll;

namespace {

const Hardness P1(1);

Density three() { return parse_density("x = 1/2\ny = 1/3\nz = 1/6\n"); }

// All nonempty subsets of the outcomes, then the empty one last.
std::vector<std::set<std::string>> subsets(const std::vector<std::string>& om, bool with_empty) {
  std::vector<std::set<std::string>> out;
  for (unsigned m = with_empty ? 0 : 1; m < (1u << om.size()); ++m) {
    std::set<std::string> s;
    for (std::size_t i = 0; i < om.size(); ++i)
      if (m >> i & 1) s.insert(om[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Bayes, ConditionalOddsExample) {
  Density d = three();
  auto r = conditional_odds(d, {"x", "y"}, {"y", "z"});
  EXPECT_EQ(r.value, Value::from_real(Rational(2, 5), P1));
  EXPECT_EQ(r.value, conditional_oracle(d, {"x", "y"}, {"y", "z"}));
  EXPECT_EQ(r.sequent, parse_sequent("(x + y) |- y"));
  EXPECT_FALSE(r.empty_intersection);
  EXPECT_TRUE(is_proof_of(r.witness, r.sequent, P1, bayes_theory(d)));
  EXPECT_EQ(validity(r.witness), r.value);
}

TEST(Bayes, SelfConditioningIsOne) {
  Density d = three();
  for (const char* x : {"x", "y", "z"}) EXPECT_EQ(conditional_odds(d, {x}, {x}).value, Value::one(P1));
}

TEST(Bayes, DisjointEventsGiveZero) {
  auto r = conditional_odds(three(), {"x"}, {"y"});
  EXPECT_TRUE(r.empty_intersection);
  EXPECT_EQ(r.sequent, parse_sequent("x |- bot"));
  EXPECT_EQ(r.value, Value::zero(P1));
}

TEST(Bayes, NullConditioningEvent) {
  Density d = parse_density("x = 0\ny = 1\n");
  EXPECT_EQ(conditional_odds(d, {"x"}, {"x"}).value, Value::infinity(P1));
  EXPECT_EQ(conditional_odds(d, {"x"}, {"y"}).value, Value::infinity(P1));
  EXPECT_EQ(conditional_oracle(d, {"x"}, {"y"}), Value::infinity(P1));
}

TEST(Bayes, TheoryFromDensity) {
  Theory t = bayes_theory(parse_density("x = 1/2\ny = 1/2\n"));
  EXPECT_TRUE(t.mix_star);
  EXPECT_EQ(t.atoms.at("x"), RealValue(Rational(1, 2)));
  Theory z = bayes_theory(parse_density("x = 0\ny = 1\n"));
  Prover pr(P1, z);
  EXPECT_EQ(pr.value(parse_sequent("x |-")), Value::infinity(P1));
}

TEST(Bayes, EventFormulas) {
  EXPECT_EQ(event_formula({"x"}), Formula::atom("x"));
  EXPECT_EQ(event_formula({"y", "x"}), parse_formula("(x + y)"));
  EXPECT_EQ(event_formula({"x", "y", "z"}), parse_formula("((x + y) + z)"));
  EXPECT_THROW(event_formula({}), std::invalid_argument);
  EXPECT_EQ(parse_event("z,x"), (std::set<std::string>{"x", "z"}));
  EXPECT_THROW(parse_event("x,,y"), ParseError);
}

TEST(Bayes, InvalidDensities) {
  EXPECT_THROW(bayes_theory(Density{}), InvalidDensity);
  EXPECT_THROW(bayes_theory(parse_density("x = 1/2\ny = 1/3\n")), InvalidDensity);
  EXPECT_THROW(parse_density("x = 1/2\nx = 1/2\n"), ParseError);
  EXPECT_THROW(parse_density("x = abc\n"), ParseError);
  EXPECT_THROW(conditional_odds(three(), {}, {"x"}), std::invalid_argument);
  EXPECT_THROW(conditional_odds(three(), {"w"}, {"x"}), std::invalid_argument);
}

// Every density over at most three outcomes with masses in sixths, every
// nonempty A and every B.
TEST(Bayes, MatchesOracleOnAllSmallDensities) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> om;
    for (std::size_t i = 0; i < n; ++i) om.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<int> w(n, 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        w[i] = left;
        Density d;
        for (std::size_t k = 0; k < n; ++k) d.mass[om[k]] = Rational(w[k], 6);
        for (const auto& a : subsets(om, false))
          for (const auto& b : subsets(om, true)) {
            ++cases;
            auto r = conditional_odds(d, a, b);
            EXPECT_EQ(r.value, conditional_oracle(d, a, b));
            EXPECT_EQ(validity(r.witness), r.value);
          }
        return;
      }
      for (int k = 0; k <= left; ++k) {
        w[i] = k;
        fill(i + 1, left - k);
      }
    };
    fill(0, 6);
  }
  EXPECT_EQ(cases, 1u * 2 + 7 * 3 * 4 + 28 * 7 * 8);
}
