#pragma once

// Shared generators and oracles for the tests and the acceptance run.

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qll/prover.hpp"
#include "qll/rewrite.hpp"

namespace qll::testing {

inline std::vector<Hardness> test_hardnesses() {
  return {Hardness(1), Hardness(2), Hardness(Rational(3, 2)), Hardness::infinity()};
}

// Random element of [0, inf] as an exact real. Finite values are squares of
// rationals, so their p-th powers stay rational for p in {1, 2, 3/2}.
inline RealValue random_real(std::mt19937& g) {
  switch (g() % 10) {
    case 0: return Rational(0);
    case 1: return std::nullopt;
    case 2: return Rational(1);
    default: break;
  }
  Rational r(static_cast<long>(g() % 12 + 1), static_cast<long>(g() % 12 + 1));
  return r * r;
}

inline std::vector<RealValue> corner_reals() { return {Rational(0), Rational(1), std::nullopt}; }

// Runs f on every corner tuple of the given arity and then on `samples`
// random tuples.
template <class F>
void for_instances(int arity, int samples, std::mt19937& g, F f) {
  auto corners = corner_reals();
  std::vector<RealValue> x(static_cast<std::size_t>(arity));
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) x[i] = corners[idx[i]];
    f(x);
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == corners.size() - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  for (int k = 0; k < samples; ++k) {
    for (auto& v : x) v = random_real(g);
    f(x);
  }
}

// Exact comparison of values living at different hardnesses.
inline int cross_compare(const Value& a, const Value& b) {
  auto rank = [](const Value& v) { return v.is_zero() ? 0 : (v.is_infinite() ? 2 : 1); };
  if (rank(a) != rank(b) || rank(a) != 1) return rank(a) < rank(b) ? -1 : (rank(a) > rank(b) ? 1 : 0);
  // a = ca^(1/pa): compare ca^(1/pa) with cb^(1/pb) by raising both sides to a common integer power.
  auto expo = [](const Value& v) -> std::pair<Integer, Integer> {  // 1/p = num/den
    if (v.hardness().is_infinite()) return {1, 1};
    const Rational& e = v.hardness().exponent();
    return {boost::multiprecision::denominator(e), boost::multiprecision::numerator(e)};
  };
  auto [an, ad] = expo(a);
  auto [bn, bd] = expo(b);
  // ca^(an/ad) vs cb^(bn/bd)  <=>  ca^(an*bd) vs cb^(bn*ad)
  unsigned ea = (an * bd).convert_to<unsigned>(), eb = (bn * ad).convert_to<unsigned>();
  auto pw = [](const Rational& c, unsigned e) {
    return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(c), e),
                    boost::multiprecision::pow(boost::multiprecision::denominator(c), e));
  };
  Rational x = pw(a.coordinate(), ea), y = pw(b.coordinate(), eb);
  return x < y ? -1 : (x == y ? 0 : 1);
}

inline Formula random_formula(std::mt19937& g, int depth) {
  int c = static_cast<int>(g() % (depth > 0 ? 12 : 6));
  switch (c) {
    case 0: case 1: return Formula::atom("a");
    case 2: return Formula::atom("b");
    case 3: return negate(Formula::atom("a"));
    case 4: return negate(Formula::atom("b"));
    case 5: {
      int u = static_cast<int>(g() % 3);
      return u == 0 ? Formula::one() : (u == 1 ? Formula::bot() : Formula::top());
    }
    case 6: case 7: return Formula::tensor(random_formula(g, depth - 1), random_formula(g, depth - 1));
    case 8: return Formula::par(random_formula(g, depth - 1), random_formula(g, depth - 1));
    case 9: case 10: return Formula::plor(random_formula(g, depth - 1), random_formula(g, depth - 1));
    default: return Formula::pland(random_formula(g, depth - 1), random_formula(g, depth - 1));
  }
}

// Distinct two-sided sequents over atoms a, b with 1 to 3 formulas and
// complexity at most `max_complexity`.
inline std::vector<Sequent> sequent_corpus(std::size_t n = 240, int max_complexity = 6, unsigned seed = 2024) {
  std::mt19937 g(seed);
  std::vector<Sequent> out;
  std::set<std::string> seen;
  while (out.size() < n) {
    std::size_t k = 1 + g() % 3;
    std::vector<Formula> l, r;
    for (std::size_t i = 0; i < k; ++i) (g() % 2 ? l : r).push_back(random_formula(g, 2));
    Sequent s{Cedent(std::move(l)), Cedent(std::move(r))};
    if (complexity(s) > max_complexity) continue;
    if (seen.insert(to_string(s)).second) out.push_back(std::move(s));
  }
  return out;
}

// A checkable proof with `cuts` cuts: prover witnesses for B |- A1,
// A1 |- A2, ... chained by cuts.
inline ProofPtr random_cut_proof(std::mt19937& g, Prover& pr, int cuts) {
  const Hardness& p = pr.hardness();
  Formula cur = random_formula(g, 2);
  ProofPtr t = pr.witness({Cedent{random_formula(g, 2)}, Cedent{cur}});
  for (int k = 0; k < cuts; ++k) {
    Formula next = random_formula(g, 2);
    ProofPtr u = pr.witness({Cedent{cur}, Cedent{next}});
    Bindings b;
    b.A = cur;
    b.G = t->conclusion.lhs;
    b.D = t->conclusion.rhs.minus(cur);
    b.D2 = u->conclusion.rhs;
    t = make_node(Rule::CUT, b, p, {t, u}, &pr.theory());
    cur = next;
  }
  return t;
}

}  // namespace qll::testing
