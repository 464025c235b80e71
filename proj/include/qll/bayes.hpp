#pragma once

// Conditional probability as provability in a theory built from a finite density.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qll/prover.hpp"

namespace qll {

struct Density {
  std::map<std::string, Rational> mass;  // outcome -> probability mass

  std::vector<std::string> outcomes() const {
    std::vector<std::string> o;
    for (const auto& [k, v] : mass) o.push_back(k);
    return o;
  }
  Rational measure(const std::set<std::string>& e) const {
    Rational s = 0;
    for (const auto& a : e) s += mass.at(a);
    return s;
  }
};

struct InvalidDensity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void validate(const Density& d) {
  if (d.mass.empty()) throw InvalidDensity("density has no outcomes");
  Rational s = 0;
  for (const auto& [k, v] : d.mass) {
    if (v < 0) throw InvalidDensity("negative mass for '" + k + "'");
    s += v;
  }
  if (s != 1) throw InvalidDensity("masses sum to " + to_string(s) + ", not 1");
}

// Lines `<outcome> = <rational>`.
inline Density parse_density(std::string_view text) {
  Density d;
  Reader r(text);
  while (!r.at_end()) {
    std::size_t at = (r.skip(), r.pos());
    std::string name(r.word());
    if (name.empty() || !detail::ident_start(name[0])) throw ParseError("expected outcome name", at);
    if (d.mass.count(name)) throw ParseError("duplicate outcome '" + name + "'", at);
    r.expect("=");
    std::size_t vat = (r.skip(), r.pos());
    d.mass[name] = parse_rational(r.word(), vat);
  }
  validate(d);
  return d;
}

inline Theory bayes_theory(const Density& d) {
  validate(d);
  Theory t;
  for (const auto& [k, v] : d.mass) t.atoms[k] = v;
  t.mix_star = true;
  return t;
}

// Left fold of p-sums over the outcomes in name order.
inline Formula event_formula(const std::set<std::string>& e) {
  if (e.empty()) throw std::invalid_argument("empty event has no formula");
  return sum_of_atoms(std::vector<std::string>(e.begin(), e.end()));
}

inline std::set<std::string> intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

struct ConditionalOdds {
  Value value;
  bool empty_intersection = false;  // A and B disjoint; the consequent is bot
  Sequent sequent;
  Derivation witness = Derivation::id(Structure());
};

// Complexity cap that keeps |Omega| <= 4 within seconds.
inline constexpr int default_bayes_cap = 16;

// Provability of event(A) |- event(A and B) in the density's theory.
inline ConditionalOdds conditional_odds(const Density& d, const std::set<std::string>& a,
                                        const std::set<std::string>& b, const Hardness& p = Hardness(1),
                                        std::optional<int> cap = default_bayes_cap) {
  if (a.empty()) throw std::invalid_argument("conditioning event is empty");
  for (const auto& s : {a, b})
    for (const auto& x : s)
      if (!d.mass.count(x)) throw std::invalid_argument("'" + x + "' is not an outcome");
  ConditionalOdds out;
  auto both = intersect(a, b);
  out.empty_intersection = both.empty();
  out.sequent = Sequent{Cedent{event_formula(a)}, Cedent{both.empty() ? Formula::bot() : event_formula(both)}};
  ProverOptions o;
  o.complexity_cap = cap;
  Prover pr(p, bayes_theory(d), o);
  auto r = pr.prove(out.sequent);
  out.value = r.value;
  out.witness = r.witness;
  return out;
}

// p(A and B) -o p(A), i.e. p(A and B)/p(A) with the residual's conventions at 0.
inline Value conditional_oracle(const Density& d, const std::set<std::string>& a, const std::set<std::string>& b,
                                const Hardness& p = Hardness(1)) {
  Value pa = Value::from_real(d.measure(a), p);
  Value pab = Value::from_real(d.measure(intersect(a, b)), p);
  return residual(pa, pab);
}

// `x,y,z` into a set.
inline std::set<std::string> parse_event(std::string_view text) {
  std::set<std::string> e;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    if (item.empty()) throw ParseError("empty outcome name", start);
    e.insert(item);
    start = end + 1;
  }
  return e;
}

}  // namespace qll
