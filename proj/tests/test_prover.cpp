#include <gtest/gtest.h>

#include "support.hpp"

using namespace qll;
using namespace qll::testing;

namespace {

const Hardness P1(1);

Value prov(const char* s, const Hardness& p, const Theory& t = {}) { return provability(parse_sequent(s), p, t).value; }

Value power(Rational c, const Hardness& p) { return Value::from_power(std::move(c), p); }

}  // namespace

TEST(Prover, SoftIdempotency) {
  EXPECT_EQ(prov("a + a |- a", P1), power(Rational(1, 2), P1));
  EXPECT_EQ(prov("a + a |- a", Hardness(2)), power(Rational(1, 2), Hardness(2)));
  EXPECT_EQ(prov("a + a |- a", Hardness::infinity()), Value::one(Hardness::infinity()));
}

TEST(Prover, CommutativityOfSoftMeet) {
  for (auto p : test_hardnesses()) {
    Value want = p.is_infinite() ? Value::one(p) : power(Rational(1, 2), p);
    EXPECT_EQ(prov("a & b |- b & a", p), want);
  }
}

// The best proof splits the right-hand meet first: 1 & (1 & 1), whose power
// coordinate is 1/3. Every other order of rules loses a branch to 0.
TEST(Prover, AssociativityOfSoftMeet) {
  Sequent s = parse_sequent("(a & b) & c |- a & (b & c)");
  for (auto p : {Hardness(1), Hardness(2)}) {
    Value v = provability(s, p).value;
    EXPECT_EQ(v, power(Rational(1, 3), p));
    EXPECT_EQ(v, brute_force_provability(s, p));
    EXPECT_TRUE(lt(v, power(Rational(2, 3), p)));
  }
  Value one = Value::one(P1);
  EXPECT_EQ(power(Rational(1, 3), P1), pcoadd(one, pcoadd(one, one)));
  EXPECT_EQ(prov("(a & b) & c |- a & (b & c)", Hardness::infinity()), Value::one(Hardness::infinity()));
}

TEST(Prover, Consistency) {
  for (auto p : test_hardnesses()) EXPECT_EQ(prov("|- bot", p), Value::zero(p));
  EXPECT_FALSE(qualitative_provable(parse_sequent("|- bot"), P1));
}

TEST(Prover, InjectionAndAxiomShortcut) {
  for (auto p : test_hardnesses()) {
    EXPECT_EQ(prov("a |- (a + b)", p), Value::one(p));
    EXPECT_EQ(prov("a & b |- a & b", p), Value::one(p));
  }
  EXPECT_TRUE(qualitative_provable(parse_sequent("a |- a"), P1));
  EXPECT_TRUE(qualitative_provable(parse_sequent("a & b |- a & b"), P1));
}

TEST(Prover, UnitsAndTop) {
  for (auto p : test_hardnesses()) {
    EXPECT_EQ(prov("|-", p), Value::one(p));
    EXPECT_EQ(prov("|- 1", p), Value::one(p));
    EXPECT_EQ(prov("a |- top", p), Value::infinity(p));
    EXPECT_EQ(prov("bot |- a", p), Value::infinity(p));
    EXPECT_EQ(prov("1 |-", p), Value::one(p));
  }
}

TEST(Prover, TheoryAtoms) {
  Theory t;
  t.atoms["x"] = Rational(2);
  t.atoms["y"] = Rational(1, 3);
  EXPECT_EQ(prov("|- x", P1, t), Value::from_real(2, P1));
  EXPECT_EQ(prov("x |-", P1, t), Value::from_real(Rational(1, 2), P1));
  EXPECT_EQ(prov("|- x * y", P1, t), Value::from_real(Rational(2, 3), P1));
  EXPECT_EQ(prov("x |- y", P1, t), Value::from_real(Rational(1, 6), P1));
  // MIX* differs from MIX only where 0 meets inf.
  Theory u;
  u.atoms["x"] = std::nullopt;
  u.atoms["y"] = std::nullopt;
  EXPECT_EQ(prov("x |- y", P1, u), Value::zero(P1));
  u.mix_star = true;
  EXPECT_EQ(prov("x |- y", P1, u), Value::infinity(P1));
}

TEST(Prover, WitnessIntegrity) {
  auto corpus = sequent_corpus(240);
  for (auto p : test_hardnesses()) {
    Prover pr(p);
    for (const auto& s : corpus) {
      auto r = pr.prove(s);
      EXPECT_TRUE(is_proof_of(r.witness, s, p)) << to_string(s);
      EXPECT_EQ(validity(r.witness), r.value) << to_string(s);
      EXPECT_EQ(count_rules(r.witness, Rule::CUT), 0);
    }
  }
}

TEST(Prover, WitnessesAreDeterministic) {
  for (const auto& s : sequent_corpus(60)) {
    Derivation a = provability(s, P1).witness;
    Derivation b = provability(s, P1).witness;
    EXPECT_EQ(to_string(a), to_string(b));
  }
}

TEST(Prover, AgreesWithBruteForceOnTinySequents) {
  auto corpus = sequent_corpus(400, 4, 7);
  for (auto p : test_hardnesses()) {
    Prover pr(p);
    for (const auto& s : corpus) EXPECT_EQ(pr.value(s), brute_force_provability(s, p)) << to_string(s);
  }
}

TEST(Prover, AgreesWithBruteForceOnCorpus) {
  Prover pr(P1);
  for (const auto& s : sequent_corpus(120, 5, 8)) EXPECT_EQ(pr.value(s), brute_force_provability(s, P1)) << to_string(s);
}

TEST(Prover, QualitativeSearchMatchesPositivity) {
  for (auto p : test_hardnesses()) {
    Prover pr(p);
    for (const auto& s : sequent_corpus(240))
      EXPECT_EQ(qualitative_provable(s, p), !pr.value(s).is_zero()) << to_string(s);
  }
}

TEST(Prover, CrossHardnessEquivalence) {
  Prover one(P1), inf(Hardness::infinity());
  for (const auto& s : sequent_corpus(240)) {
    bool additive = !one.value(s).is_zero();
    bool multiplicative = leq(Value::one(Hardness::infinity()), inf.value(s));
    EXPECT_EQ(additive, multiplicative) << to_string(s);
  }
}

TEST(Prover, ApproximationTowardsHardLimit) {
  Prover inf(Hardness::infinity());
  std::vector<Prover> ps;
  for (int q : {1, 2, 4, 8, 16}) ps.emplace_back(Hardness(q));
  for (const auto& s : sequent_corpus(240)) {
    Value hard = inf.value(s);
    std::vector<Value> soft;
    for (auto& pr : ps) soft.push_back(pr.value(s));
    bool finite = hard.is_finite_positive();
    for (const auto& v : soft) finite = finite && v.is_finite_positive();
    if (!finite) continue;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& v : soft) {
      double gap = std::fabs(v.to_float() - hard.to_float());
      EXPECT_LE(gap, prev + 1e-12) << to_string(s);
      prev = gap;
    }
    EXPECT_LT(prev, 0.2) << to_string(s);
  }
}

TEST(Prover, UnaryAdditivesAtInfinity) {
  Hardness inf = Hardness::infinity();
  ProverOptions o;
  o.unary_additives_at_infinity = true;
  Prover plain(inf), fast(inf, {}, o);
  for (const auto& s : sequent_corpus(240)) {
    EXPECT_EQ(plain.value(s), fast.value(s)) << to_string(s);
    auto r = fast.prove(s);
    EXPECT_TRUE(is_proof_of(r.witness, s, inf)) << to_string(s);
    EXPECT_EQ(validity(r.witness), r.value);
    if (!r.value.is_zero()) EXPECT_EQ(count_rules(r.witness, Rule::EFQ), 0) << to_string(s);
  }
}

TEST(Prover, StructureProvability) {
  Prover pr(P1);
  EXPECT_EQ(structure_provability(parse_structure("(padd (seq a |- a) (seq |- bot))", P1), pr), Value::one(P1));
  EXPECT_EQ(structure_provability(parse_structure("(const 3/4)", P1), pr), Value::from_real(Rational(3, 4), P1));
  EXPECT_EQ(structure_provability(parse_structure("(seq a |- a)", P1), pr), Value::one(P1));
  EXPECT_EQ(structure_provability(parse_structure("(pcoadd (seq a + a |- a) (const 1))", P1), pr),
            Value::from_real(Rational(1, 3), P1));
}

TEST(Prover, ComplexityCap) {
  ProverOptions o;
  o.complexity_cap = 3;
  EXPECT_THROW(provability(parse_sequent("a, b |- a * b"), P1, {}, o), CapExceeded);
  o.complexity_cap = 4;
  EXPECT_EQ(provability(parse_sequent("a, b |- a * b"), P1, {}, o).value, Value::one(P1));
}

TEST(Prover, PrelinearityOnSampledPairs) {
  Theory t;
  t.atoms["a"] = Rational(2);
  t.atoms["b"] = Rational(3);
  t.mix_star = true;
  Prover pr(P1, t);
  std::mt19937 g(5);
  auto lit = [&]() {
    Formula a = Formula::atom(g() % 2 ? "a" : "b");
    return g() % 2 ? a : negate(a);
  };
  std::function<Formula(int)> gen = [&](int k) -> Formula {
    if (k == 0) return lit();
    int left = static_cast<int>(g() % static_cast<unsigned>(k));
    FKind c = static_cast<FKind>(static_cast<int>(FKind::Tensor) + static_cast<int>(g() % 4));
    return Formula::binary(c, gen(left), gen(k - 1 - left));
  };
  for (int i = 0; i < 3000; ++i) {
    int total = static_cast<int>(g() % 4);  // complexity of A |- B at most 5
    int ka = static_cast<int>(g() % static_cast<unsigned>(total + 1));
    Formula a = gen(ka), b = gen(total - ka);
    Value ab = pr.value({Cedent{a}, Cedent{b}}), ba = pr.value({Cedent{b}, Cedent{a}});
    EXPECT_TRUE(leq(dual(ab), ba)) << to_string(a) << " / " << to_string(b);
  }
}
