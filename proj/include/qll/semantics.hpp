#pragma once

// Softales: enriched preorders with a *-autonomous tensor and soft joins.
// Concrete instances, an axiom checker, evaluation and soundness gaps.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qll/calculus.hpp"

namespace qll {

// [0, inf] with order a -o b.
struct RealSoftale {
  using Elem = Value;
  Hardness p;

  Value order(const Elem& a, const Elem& b) const { return residual(a, b); }
  Elem tensor(const Elem& a, const Elem& b) const { return qll::tensor(a, b); }
  Elem dual(const Elem& a) const { return qll::dual(a); }
  Elem unit() const { return Value::one(p); }
  Elem bot() const { return Value::zero(p); }
  Elem pjoin(const Elem& a, const Elem& b) const { return padd(a, b); }
  bool same(const Elem& a, const Elem& b) const { return a == b; }
  std::string show(const Elem& a) const { return a.literal(); }
  std::string name() const { return "real(p=" + p.str() + ")"; }
};

// n-tuples of values, structure pointwise, order the least componentwise residual.
struct PointwiseSoftale {
  using Elem = std::vector<Value>;
  std::size_t n;
  Hardness p;

  Value order(const Elem& a, const Elem& b) const {
    Value m = Value::infinity(p);
    for (std::size_t i = 0; i < n; ++i) m = vmin(m, residual(a[i], b[i]));
    return m;
  }
  Elem tensor(const Elem& a, const Elem& b) const { return zip(a, b, qll::tensor); }
  Elem dual(const Elem& a) const {
    Elem r;
    for (const auto& x : a) r.push_back(qll::dual(x));
    return r;
  }
  Elem unit() const { return Elem(n, Value::one(p)); }
  Elem bot() const { return Elem(n, Value::zero(p)); }
  Elem pjoin(const Elem& a, const Elem& b) const { return zip(a, b, padd); }
  bool same(const Elem& a, const Elem& b) const { return a == b; }
  std::string show(const Elem& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].literal();
    return s + ")";
  }
  std::string name() const { return "pointwise(" + std::to_string(n) + ", p=" + p.str() + ")"; }

 private:
  static Elem zip(const Elem& a, const Elem& b, Value (*f)(const Value&, const Value&)) {
    Elem r;
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(f(a[i], b[i]));
    return r;
  }
};

// The real softale with 0 (x) inf = inf; used to check that the checker rejects it.
struct CorruptedTensorSoftale : RealSoftale {
  Elem tensor(const Elem& a, const Elem& b) const {
    if ((a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero())) return Value::infinity(p);
    return qll::tensor(a, b);
  }
  std::string name() const { return "corrupted-tensor(p=" + p.str() + ")"; }
};

template <class S>
typename S::Elem par_of(const S& s, const typename S::Elem& a, const typename S::Elem& b) {
  return s.dual(s.tensor(s.dual(a), s.dual(b)));
}
template <class S>
typename S::Elem pmeet_of(const S& s, const typename S::Elem& a, const typename S::Elem& b) {
  return s.dual(s.pjoin(s.dual(a), s.dual(b)));
}
template <class S>
typename S::Elem top_of(const S& s) {
  return s.dual(s.bot());
}

struct AxiomViolation {
  std::string axiom;
  std::string witness;
  Value lhs, rhs;
};

struct AxiomReport {
  std::string softale;
  std::size_t grid_size = 0;
  std::map<std::string, std::size_t> instances, violation_count;
  std::vector<AxiomViolation> violations;
  std::vector<AxiomViolation> prelinearity;  // only when the check was requested

  bool ok() const { return violations.empty(); }
  bool failed(const std::string& axiom) const {
    for (const auto& v : violations) if (v.axiom == axiom) return true;
    return false;
  }
};

// Evaluates every axiom instance over the grid exactly; keeps at most
// `max_witnesses` violations per axiom.
template <class S>
AxiomReport check_softale_axioms(const S& s, const std::vector<typename S::Elem>& grid, bool prelinearity = true,
                                 std::size_t max_witnesses = 3) {
  using E = typename S::Elem;
  AxiomReport rep;
  rep.softale = s.name();
  rep.grid_size = grid.size();
  const Hardness& p = s.p;
  Value one = Value::one(p);
  std::map<std::string, std::size_t> kept;
  using Witness = std::function<std::string()>;
  auto record = [&](std::vector<AxiomViolation>& into, const std::string& ax, bool holds, const Witness& w,
                    const Value& l, const Value& r) {
    ++rep.instances[ax];
    if (holds) return;
    ++rep.violation_count[ax];
    if (kept[ax]++ < max_witnesses) into.push_back({ax, w(), l, r});
  };
  auto check_leq = [&](const std::string& ax, const Value& l, const Value& r, const Witness& w) {
    record(rep.violations, ax, leq(l, r), w, l, r);
  };
  auto check_eq = [&](const std::string& ax, const Value& l, const Value& r, const Witness& w) {
    record(rep.violations, ax, compare(l, r) == 0, w, l, r);
  };
  auto iso = [&](const std::string& ax, const E& a, const E& b, const Witness& w) {
    check_leq(ax, one, vmin(s.order(a, b), s.order(b, a)), w);
  };

  record(rep.violations, "involutivity", s.same(s.dual(s.unit()), s.unit()), [] { return std::string("unit"); },
         one, one);
  for (const E& a : grid) {
    Witness w1 = [&] { return "a=" + s.show(a); };
    check_leq("reflexivity", one, s.order(a, a), w1);
    iso("unit", s.tensor(a, s.unit()), a, w1);
    record(rep.violations, "involutivity", s.same(s.dual(s.dual(a)), a), w1, one, one);
    check_eq("soft-bottom", s.order(s.bot(), a), Value::infinity(p), w1);
    for (const E& b : grid) {
      Witness w2 = [&] { return w1() + " b=" + s.show(b); };
      iso("commutativity", s.tensor(a, b), s.tensor(b, a), w2);
      check_eq("duality", s.order(a, b), s.order(s.dual(b), s.dual(a)), w2);
      if (prelinearity) {
        Value l = qll::dual(s.order(a, b)), r = s.order(b, a);
        record(rep.prelinearity, "prelinearity", leq(l, r), w2, l, r);
      }
      E ab = s.tensor(a, b);
      E j = s.pjoin(a, b);
      Value oab = s.order(a, b);
      for (const E& c : grid) {
        Witness w3 = [&] { return w2() + " c=" + s.show(c); };
        check_leq("transitivity", qll::tensor(oab, s.order(b, c)), s.order(a, c), w3);
        iso("associativity", s.tensor(ab, c), s.tensor(a, s.tensor(b, c)), w3);
        check_eq("star-autonomy", s.order(ab, s.dual(c)), s.order(a, s.dual(s.tensor(b, c))), w3);
        check_leq("p-join-minimality", pcoadd(s.order(a, c), s.order(b, c)), s.order(j, c), w3);
        check_leq("p-join-upper-bound", padd(s.order(c, a), s.order(c, b)), s.order(c, j), w3);
        for (const E& d : grid)
          check_leq("interchange", qll::tensor(oab, s.order(c, d)), s.order(s.tensor(a, c), s.tensor(b, d)),
                    [&] { return w3() + " d=" + s.show(d); });
      }
    }
  }
  return rep;
}

template <class S>
using Valuation = std::map<std::string, typename S::Elem>;

template <class S>
typename S::Elem eval_formula(const Formula& f, const Valuation<S>& v, const S& s) {
  auto atom = [&](const std::string& a) -> const typename S::Elem& {
    auto it = v.find(a);
    if (it == v.end()) throw std::invalid_argument("valuation has no value for atom '" + a + "'");
    return it->second;
  };
  switch (f.kind()) {
    case FKind::Atom: return atom(f.name());
    case FKind::NegAtom: return s.dual(atom(f.name()));
    case FKind::One: return s.unit();
    case FKind::Bot: return s.bot();
    case FKind::Top: return top_of(s);
    case FKind::Tensor: return s.tensor(eval_formula(f.left(), v, s), eval_formula(f.right(), v, s));
    case FKind::Par: return par_of(s, eval_formula(f.left(), v, s), eval_formula(f.right(), v, s));
    case FKind::Plor: return s.pjoin(eval_formula(f.left(), v, s), eval_formula(f.right(), v, s));
    case FKind::Pland: return pmeet_of(s, eval_formula(f.left(), v, s), eval_formula(f.right(), v, s));
  }
  throw std::logic_error("eval_formula");
}

// order(tensor of the antecedent, par of the consequent); empty folds are the unit.
template <class S>
Value semantic_sequent_value(const Sequent& q, const Valuation<S>& v, const S& s) {
  auto l = s.unit(), r = s.unit();
  bool first = true;
  for (const auto& f : q.lhs) {
    auto x = eval_formula(f, v, s);
    l = first ? x : s.tensor(l, x);
    first = false;
  }
  first = true;
  for (const auto& f : q.rhs) {
    auto x = eval_formula(f, v, s);
    r = first ? x : par_of(s, r, x);
    first = false;
  }
  return s.order(l, r);
}

// (validity of the proof, semantic value of its conclusion).
template <class S>
std::pair<Value, Value> soundness_gap(const Derivation& proof, const Valuation<S>& v, const S& s) {
  if (!proof.bottom().is_leaf()) throw std::invalid_argument("proof must conclude a single sequent");
  return {validity(proof), semantic_sequent_value(proof.bottom().sequent(), v, s)};
}

// Lines `atom <name> = <rational|inf>` read into the real softale.
inline Valuation<RealSoftale> parse_valuation(std::string_view text, const Hardness& p) {
  Theory t = parse_theory(text);
  Valuation<RealSoftale> v;
  for (const auto& [a, r] : t.atoms) v[a] = at_hardness(r, p);
  return v;
}

// Lines `atom <name> = (<v>, <v>, ...)` for the pointwise softale.
inline Valuation<PointwiseSoftale> parse_tuple_valuation(std::string_view text, const Hardness& p) {
  Valuation<PointwiseSoftale> v;
  Reader r(text);
  std::size_t width = 0;
  while (!r.at_end()) {
    std::size_t at = r.pos();
    if (std::string(r.word()) != "atom") throw ParseError("expected 'atom'", at);
    std::string name(r.word());
    r.expect("=");
    r.expect("(");
    std::vector<Value> t;
    do {
      std::size_t vat = (r.skip(), r.pos());
      t.push_back(at_hardness(parse_real(r.word(), vat), p));
    } while (r.accept(","));
    r.expect(")");
    if (width && t.size() != width) throw ParseError("tuples must have equal length", at);
    width = t.size();
    v[name] = std::move(t);
  }
  return v;
}

// Grid of real values, e.g. "0,1/3,1/2,1,2,3,inf".
inline std::vector<Value> parse_grid(std::string_view text, const Hardness& p) {
  std::vector<Value> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(at_hardness(parse_real(item, start), p));
    start = end + 1;
  }
  return out;
}

// All n-tuples over the grid.
inline std::vector<std::vector<Value>> tuples_over(const std::vector<Value>& grid, std::size_t n) {
  std::vector<std::vector<Value>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Value>> next;
    for (const auto& t : out)
      for (const auto& g : grid) {
        auto u = t;
        u.push_back(g);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace qll
