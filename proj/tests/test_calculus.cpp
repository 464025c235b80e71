#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qll/bayes.hpp"
#include "support.hpp"

using namespace qll;
using namespace qll::testing;

namespace {

const Hardness P1(1);

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Fixture fixture(const std::string& name, const Hardness& p) {
  for (auto& f : fixture_proofs(p))
    if (f.name == name) return f;
  throw std::out_of_range(name);
}

Derivation atom_leaf(Rule r, const std::string& a, const Hardness& p, const Theory& t) {
  Bindings b;
  b.atom = a;
  return infer(r, b, {}, p, &t);
}

}  // namespace

TEST(Calculus, FixturesCheckAndEvaluate) {
  for (auto p : test_hardnesses()) {
    for (const auto& f : fixture_proofs(p)) {
      EXPECT_TRUE(check_derivation(f.proof, p).empty()) << f.name;
      EXPECT_TRUE(is_proof_of(f.proof, f.conclusion, p)) << f.name;
    }
    Value half_power = Value::from_power(Rational(1, 2), p);
    Value expect_soft = p.is_infinite() ? Value::one(p) : half_power;
    EXPECT_EQ(validity(fixture("soft-idempotency", p).proof), expect_soft);
    EXPECT_EQ(validity(fixture("inj", p).proof), Value::one(p));
    EXPECT_EQ(validity(fixture("eta", p).proof), expect_soft);
  }
}

TEST(Calculus, WrongRedConnectiveIsReported) {
  Formula a = Formula::atom("a");
  Bindings b = bind_AB(a, a, {}, Cedent{a});
  Structure bad = Structure::bin(RedOp::Padd, Structure(parse_sequent("a |- a")), Structure(parse_sequent("a |- a")));
  Derivation up = Derivation::horiz(RedOp::Padd, ax(a, P1), ax(a, P1));
  Derivation d = Derivation::vert(up, Derivation::rule(Rule::PlorL, b, bad));
  auto v = check_derivation(d, P1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].message, "wrong red connective in premise");
  EXPECT_EQ(v[0].path, "/vert.lower/PlorL");
}

TEST(Calculus, SchemaMismatchAndVerticalMismatch) {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  Derivation wrong = Derivation::rule(Rule::AX, bind_A(a), Structure::constant(Value::zero(P1)));
  EXPECT_FALSE(check_derivation(wrong, P1).empty());
  Derivation d = Derivation::vert(ax(b, P1), Derivation::id(Structure(parse_sequent("a |- a"))));
  auto v = check_derivation(d, P1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].path, "/vert");
}

TEST(Calculus, ConstantsMustMatchHardness) {
  Derivation d = Derivation::id(Structure::constant(Value::one(Hardness(2))));
  auto v = check_derivation(d, P1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].message.find("hardness"), std::string::npos);
}

TEST(Calculus, TheoryRulesNeedTheTheory) {
  Theory t;
  t.atoms["x"] = Rational(1, 3);
  Derivation r = atom_leaf(Rule::AtomR, "x", P1, t);
  EXPECT_TRUE(check_derivation(r, P1, t).empty());
  EXPECT_EQ(validity(r), Value::from_real(Rational(1, 3), P1));
  EXPECT_EQ(validity(atom_leaf(Rule::AtomL, "x", P1, t)), Value::from_real(3, P1));
  EXPECT_FALSE(check_derivation(r, P1, Theory{}).empty());

  Derivation mix = infer(Rule::MixStar, bind_split(Cedent{Formula::atom("x")}, {}, {}, Cedent{Formula::atom("x")}),
                         {atom_leaf(Rule::AtomL, "x", P1, t), r}, P1, &t);
  EXPECT_FALSE(check_derivation(mix, P1, t).empty());
  t.mix_star = true;
  EXPECT_TRUE(check_derivation(mix, P1, t).empty());
  EXPECT_EQ(validity(mix), Value::one(P1));
}

TEST(Calculus, UnaryAdditivesOnlyAtInfinity) {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  Hardness inf = Hardness::infinity();
  Derivation d = infer(Rule::PlorR1, bind_AB(a, b, Cedent{a}, {}), {ax(a, inf)}, inf);
  EXPECT_TRUE(check_derivation(d, inf).empty());
  EXPECT_EQ(validity(d), Value::one(inf));
  Derivation e = infer(Rule::PlorR1, bind_AB(a, b, Cedent{a}, {}), {ax(a, P1)}, P1);
  EXPECT_FALSE(check_derivation(e, P1).empty());
}

TEST(Calculus, AxiomConstants) {
  for (auto p : test_hardnesses()) {
    EXPECT_EQ(validity(infer(Rule::EMP, {}, {}, p)), Value::one(p));
    EXPECT_EQ(validity(infer(Rule::OneR, {}, {}, p)), Value::one(p));
    EXPECT_EQ(validity(infer(Rule::OneL, {}, {}, p)), Value::one(p));
    EXPECT_EQ(validity(efq(parse_sequent("a |- b"), p)), Value::zero(p));
    EXPECT_EQ(validity(infer(Rule::TopR, bind_ctx(Cedent{Formula::atom("a")}, {}), {}, p)), Value::infinity(p));
    EXPECT_EQ(validity(infer(Rule::BotL, bind_ctx({}, Cedent{Formula::atom("a")}), {}, p)), Value::infinity(p));
  }
}

TEST(Calculus, HorizontalCompositionEvaluatesPointwise) {
  std::mt19937 g(1);
  for (auto p : test_hardnesses()) {
    auto fx = fixture_proofs(p);
    for (int i = 0; i < 50; ++i) {
      const auto& x = fx[g() % fx.size()].proof;
      const auto& y = fx[g() % fx.size()].proof;
      RedOp op = static_cast<RedOp>(g() % 4);
      Derivation h = Derivation::horiz(op, x, y);
      EXPECT_TRUE(check_derivation(h, p).empty());
      EXPECT_EQ(validity(h), apply(op, validity(x), validity(y)));
    }
  }
}

TEST(Calculus, TextFormRoundTrips) {
  for (auto p : test_hardnesses())
    for (const auto& f : fixture_proofs(p)) {
      std::string text = to_string(f.proof);
      Derivation back = parse_derivation(text, p);
      EXPECT_EQ(to_string(back), text);
      EXPECT_TRUE(is_proof_of(back, f.conclusion, p));
    }
}

TEST(Calculus, GoldenFixtureFiles) {
  for (const auto& f : fixture_proofs(P1)) {
    std::string path = std::string(QLL_GOLDEN_DIR) + "/" + f.name + ".proof";
    std::string text = slurp(path);
    ASSERT_FALSE(text.empty()) << path;
    EXPECT_EQ(to_string(f.proof) + "\n", text) << path;
    EXPECT_TRUE(is_proof_of(parse_derivation(text, P1), f.conclusion, P1));
  }
}

TEST(Calculus, TreeFormRoundTrips) {
  Prover pr(P1);
  for (const auto& s : sequent_corpus(120)) {
    Derivation d = pr.prove(s).witness;
    Derivation back = to_derivation(*to_tree(d));
    EXPECT_EQ(to_string(back), to_string(d));
    EXPECT_EQ(validity(*to_tree(d)), validity(d));
  }
}

TEST(Calculus, BayesTemplate) {
  Density d = parse_density("x = 1/2\ny = 1/3\nz = 1/6\n");
  Theory t = bayes_theory(d);
  Derivation pf = bayes_template_proof({"x", "y"}, {"y"}, P1, t);
  EXPECT_TRUE(is_proof_of(pf, parse_sequent("(x + y) |- y"), P1, t));
  EXPECT_EQ(validity(pf), Value::from_real(Rational(2, 5), P1));

  Density e = parse_density("x = 1/2\ny = 1/2\n");
  Theory u = bayes_theory(e);
  Derivation same = bayes_template_proof({"x"}, {"x"}, P1, u);
  EXPECT_TRUE(is_proof_of(same, parse_sequent("x |- x"), P1, u));
  EXPECT_EQ(validity(same), Value::one(P1));
}
