#pragma once

// Cut elimination and structural schemas.

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qll/calculus.hpp"

namespace qll {

// (max cut rank, cuts of that rank, cuts, sum of cut depths); the depth of a
// cut is the number of rule instances above it.
struct CutMetric {
  int r_m = 0, n_m = 0, n = 0, d = 0;

  auto tie() const { return std::tie(r_m, n_m, n, d); }
  friend bool operator==(const CutMetric& a, const CutMetric& b) { return a.tie() == b.tie(); }
  friend bool operator<(const CutMetric& a, const CutMetric& b) { return a.tie() < b.tie(); }
  std::string str() const {
    return "<" + std::to_string(r_m) + "," + std::to_string(n_m) + "," + std::to_string(n) + "," +
           std::to_string(d) + ">";
  }
};

struct RewriteTrace {
  std::string rewrite_case;
  CutMetric before, after;
  Value validity_before, validity_after;

  std::string str() const {
    return "step " + rewrite_case + " metric " + before.str() + " -> " + after.str() + " validity " +
           validity_before.str() + " -> " + validity_after.str();
  }
};

inline CutMetric cut_metric(const ProofTree& t) {
  CutMetric m;
  std::function<void(const ProofTree&)> walk = [&](const ProofTree& n) {
    if (n.rule == Rule::CUT) {
      int r = connectives(*n.bind.A);
      if (r > m.r_m || m.n == 0) { m.r_m = r; m.n_m = 0; }
      if (r == m.r_m) ++m.n_m;
      ++m.n;
      m.d += size(n) - 1;
    }
    for (const auto& k : n.kids) walk(*k);
  };
  walk(t);
  return m;
}
inline CutMetric cut_metric(const Derivation& d) { return cut_metric(*to_tree(d)); }

namespace detail {

class CutReducer {
 public:
  CutReducer(Hardness p, const Theory& t) : p_(std::move(p)), t_(t) {}

  ProofPtr node(Rule r, Bindings b, std::vector<ProofPtr> kids) const {
    auto n = make_node(r, std::move(b), p_, std::move(kids), &t_);
    std::size_t i = 0;
    std::vector<Sequent> want;
    leaves(n->premise, want);
    if (want.size() != n->kids.size()) throw std::logic_error("rewrite: premise arity mismatch");
    for (const auto& k : n->kids)
      if (!(k->conclusion == want[i++]))
        throw std::logic_error(std::string("rewrite: premise mismatch under ") + rule_text(r));
    return n;
  }

  ProofPtr cut(const ProofPtr& l, const ProofPtr& r, const Formula& a) const {
    Bindings b;
    b.A = a;
    b.G = l->conclusion.lhs;
    b.D = l->conclusion.rhs.minus(a);
    b.G2 = r->conclusion.lhs.minus(a);
    b.D2 = r->conclusion.rhs;
    return node(Rule::CUT, std::move(b), {l, r});
  }

  // True when the rule introduces `a` on the right (resp. left) of its conclusion.
  static bool principal_right(const ProofTree& n, const Formula& a) {
    const Bindings& b = n.bind;
    switch (n.rule) {
      case Rule::AX: return *b.A == a;
      case Rule::TensorR: return a == Formula::tensor(*b.A, *b.B);
      case Rule::ParR: return a == Formula::par(*b.A, *b.B);
      case Rule::PlorR: case Rule::PlorR1: case Rule::PlorR2: return a == Formula::plor(*b.A, *b.B);
      case Rule::PlandR: return a == Formula::pland(*b.A, *b.B);
      case Rule::DualR: return a == negate(*b.A);
      case Rule::OneR: return a.kind() == FKind::One;
      case Rule::TopR: return a.kind() == FKind::Top;
      case Rule::AtomR: return a == Formula::atom(b.atom);
      default: return false;
    }
  }
  static bool principal_left(const ProofTree& n, const Formula& a) {
    const Bindings& b = n.bind;
    switch (n.rule) {
      case Rule::AX: return *b.A == a;
      case Rule::TensorL: return a == Formula::tensor(*b.A, *b.B);
      case Rule::ParL: return a == Formula::par(*b.A, *b.B);
      case Rule::PlorL: return a == Formula::plor(*b.A, *b.B);
      case Rule::PlandL: case Rule::PlandL1: case Rule::PlandL2: return a == Formula::pland(*b.A, *b.B);
      case Rule::DualL: return a == negate(*b.A);
      case Rule::OneL: return a.kind() == FKind::One;
      case Rule::BotL: return a.kind() == FKind::Bot;
      case Rule::AtomL: return a == Formula::atom(b.atom);
      default: return false;
    }
  }

  static bool is_split(Rule r) {
    return r == Rule::TensorR || r == Rule::ParL || r == Rule::MIX || r == Rule::MixStar || r == Rule::CUT;
  }
  static bool duplicates(Rule r) {
    return r == Rule::PlorL || r == Rule::PlorR || r == Rule::PlandL || r == Rule::PlandR;
  }

  // Which premise leaves carry the first (G, D) context and which the second.
  static std::vector<int> context_slots(const ProofTree& n) {
    std::vector<int> s(n.kids.size(), 0);
    if (is_split(n.rule) && s.size() == 2) s[1] = 1;
    return s;
  }

  // Replaces a context occurrence of `x` in the conclusion of `n`, pushing the
  // change into the premises that carry it. `on_right` says where x sits.
  // `rebind` edits (G, D) of the chosen slot; `down` rewrites each affected premise.
  ProofPtr through_context(const ProofTree& n, const Formula& x, bool on_right,
                           const std::function<void(Cedent&, Cedent&)>& rebind,
                           const std::function<ProofPtr(const ProofPtr&)>& down) const {
    Bindings b = n.bind;
    int slot;
    if (on_right) slot = b.D.contains(x) ? 0 : (b.D2.contains(x) ? 1 : -1);
    else slot = b.G.contains(x) ? 0 : (b.G2.contains(x) ? 1 : -1);
    if (slot < 0) throw std::logic_error("rewrite: formula is not in a context");
    if (slot == 0) rebind(b.G, b.D); else rebind(b.G2, b.D2);
    auto slots = context_slots(n);
    std::vector<ProofPtr> kids;
    for (std::size_t i = 0; i < n.kids.size(); ++i)
      kids.push_back(slots[i] == slot ? down(n.kids[i]) : n.kids[i]);
    return node(n.rule, std::move(b), std::move(kids));
  }

  // Proof of Γ ⊢ x^, Δ from a proof of Γ, x ⊢ Δ; no dual rule at the root
  // unless the occurrence ends at an axiom.
  ProofPtr move_right(const ProofPtr& s, const Formula& x) const {
    const ProofTree& n = *s;
    const Bindings& b = n.bind;
    Formula nx = negate(x);
    if (principal_left(n, x)) {
      switch (n.rule) {
        case Rule::AX: return node(Rule::DualR, dual_bind(x, {}, Cedent{x}), {s});
        case Rule::TensorL: {
          auto k = move_right(move_right(n.kids[0], *b.A), *b.B);
          return node(Rule::ParR, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {k});
        }
        case Rule::ParL: {
          Bindings nb = bind_AB(negate(*b.A), negate(*b.B), b.G, b.D);
          nb.G2 = b.G2;
          nb.D2 = b.D2;
          return node(Rule::TensorR, nb, {move_right(n.kids[0], *b.A), move_right(n.kids[1], *b.B)});
        }
        case Rule::PlorL:
          return node(Rule::PlandR, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D),
                      {move_right(n.kids[0], *b.A), move_right(n.kids[1], *b.B)});
        case Rule::PlandL:
          return node(Rule::PlorR, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D),
                      {move_right(n.kids[0], *b.A), move_right(n.kids[1], *b.B)});
        case Rule::PlandL1:
          return node(Rule::PlorR1, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {move_right(n.kids[0], *b.A)});
        case Rule::PlandL2:
          return node(Rule::PlorR2, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {move_right(n.kids[0], *b.B)});
        case Rule::OneL: return node(Rule::OneR, {}, {});
        case Rule::BotL: return node(Rule::TopR, bind_ctx(b.G, b.D), {});
        case Rule::DualL: return n.kids[0];
        case Rule::AtomL: return node(Rule::DualR, dual_bind(x, {}, {}), {s});
        default: break;
      }
    }
    if (n.rule == Rule::EFQ) return node(Rule::EFQ, bind_ctx(b.G.minus(x), b.D.plus(nx)), {});
    return through_context(
        n, x, false, [&](Cedent& g, Cedent& d) { g.remove(x); d = d.plus(nx); },
        [&](const ProofPtr& k) { return move_right(k, x); });
  }

  // Proof of Γ, x^ ⊢ Δ from a proof of Γ ⊢ x, Δ.
  ProofPtr move_left(const ProofPtr& s, const Formula& x) const {
    const ProofTree& n = *s;
    const Bindings& b = n.bind;
    Formula nx = negate(x);
    if (principal_right(n, x)) {
      switch (n.rule) {
        case Rule::AX: return node(Rule::DualL, dual_bind(x, Cedent{x}, {}), {s});
        case Rule::ParR: {
          auto k = move_left(move_left(n.kids[0], *b.A), *b.B);
          return node(Rule::TensorL, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {k});
        }
        case Rule::TensorR: {
          Bindings nb = bind_AB(negate(*b.A), negate(*b.B), b.G, b.D);
          nb.G2 = b.G2;
          nb.D2 = b.D2;
          return node(Rule::ParL, nb, {move_left(n.kids[0], *b.A), move_left(n.kids[1], *b.B)});
        }
        case Rule::PlorR:
          return node(Rule::PlandL, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D),
                      {move_left(n.kids[0], *b.A), move_left(n.kids[1], *b.B)});
        case Rule::PlandR:
          return node(Rule::PlorL, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D),
                      {move_left(n.kids[0], *b.A), move_left(n.kids[1], *b.B)});
        case Rule::PlorR1:
          return node(Rule::PlandL1, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {move_left(n.kids[0], *b.A)});
        case Rule::PlorR2:
          return node(Rule::PlandL2, bind_AB(negate(*b.A), negate(*b.B), b.G, b.D), {move_left(n.kids[0], *b.B)});
        case Rule::OneR: return node(Rule::OneL, {}, {});
        case Rule::TopR: return node(Rule::BotL, bind_ctx(b.G, b.D), {});
        case Rule::DualR: return n.kids[0];
        case Rule::AtomR: return node(Rule::DualL, dual_bind(x, {}, {}), {s});
        default: break;
      }
    }
    if (n.rule == Rule::EFQ) return node(Rule::EFQ, bind_ctx(b.G.plus(nx), b.D.minus(x)), {});
    return through_context(
        n, x, true, [&](Cedent& g, Cedent& d) { d.remove(x); g = g.plus(nx); },
        [&](const ProofPtr& k) { return move_left(k, x); });
  }

  // One reduction of the cut `c` (whose premises are cut-free). Returns the
  // replacement and a case label.
  std::pair<ProofPtr, std::string> reduce(const ProofTree& c) const {
    const Formula a = *c.bind.A;
    const ProofPtr& l = c.kids[0];
    const ProofPtr& r = c.kids[1];
    const Sequent& goal = c.conclusion;
    Rule R1 = l->rule, R2 = r->rule;
    bool pl = principal_right(*l, a), pr = principal_left(*r, a);

    if (R1 == Rule::AX) return {r, "ax-left"};
    if (R2 == Rule::AX) return {l, "ax-right"};
    if (R1 == Rule::EFQ || R2 == Rule::EFQ) return {node(Rule::EFQ, bind_ctx(goal.lhs, goal.rhs), {}), "efq"};
    if (pl && R1 == Rule::DualR && l->kids[0]->rule == Rule::AX) return {move_right(r, a), "dual-ax-left"};
    if (pr && R2 == Rule::DualL && r->kids[0]->rule == Rule::AX) return {move_left(l, a), "dual-ax-right"};

    if (pl && pr) {
      const Bindings& x = l->bind;
      const Bindings& y = r->bind;
      if (R1 == Rule::DualR && R2 == Rule::DualL)
        return {cut(r->kids[0], l->kids[0], *x.A), "principal-dual"};
      if (R1 == Rule::TensorR && R2 == Rule::TensorL) {
        auto inner = cut(l->kids[1], r->kids[0], *x.B);
        return {cut(l->kids[0], inner, *x.A), "principal-tensor"};
      }
      if (R1 == Rule::ParR && R2 == Rule::ParL) {
        auto inner = cut(l->kids[0], r->kids[0], *x.A);
        return {cut(inner, r->kids[1], *x.B), "principal-par"};
      }
      if ((R1 == Rule::PlorR && R2 == Rule::PlorL) || (R1 == Rule::PlandR && R2 == Rule::PlandL)) {
        auto ca = cut(l->kids[0], r->kids[0], *x.A);
        auto cb = cut(l->kids[1], r->kids[1], *x.B);
        Value va = tensor(validity(*l->kids[0]), validity(*r->kids[0]));
        Value vb = tensor(validity(*l->kids[1]), validity(*r->kids[1]));
        const char* lbl = R1 == Rule::PlorR ? "principal-plor" : "principal-pland";
        return {lt(va, vb) ? cb : ca, lbl};
      }
      if (R1 == Rule::PlorR1 && R2 == Rule::PlorL) return {cut(l->kids[0], r->kids[0], *x.A), "principal-plor-unary"};
      if (R1 == Rule::PlorR2 && R2 == Rule::PlorL) return {cut(l->kids[0], r->kids[1], *x.B), "principal-plor-unary"};
      if (R1 == Rule::PlandR && R2 == Rule::PlandL1) return {cut(l->kids[0], r->kids[0], *y.A), "principal-pland-unary"};
      if (R1 == Rule::PlandR && R2 == Rule::PlandL2) return {cut(l->kids[1], r->kids[0], *y.B), "principal-pland-unary"};
      if (R1 == Rule::OneR && R2 == Rule::OneL) return {node(Rule::EMP, {}, {}), "principal-one"};
      if (R1 == Rule::AtomR && R2 == Rule::AtomL) return {node(Rule::EMP, {}, {}), "principal-atom"};
    }

    // Commute a non-principal side upward, preferring a side that does not
    // duplicate the other premise.
    bool cl = !pl || (R1 != Rule::AX && count_right(*l, a) > 1);
    bool cr = !pr || (R2 != Rule::AX && count_left(*r, a) > 1);
    cl = cl && commutable_right(*l, a);
    cr = cr && commutable_left(*r, a);
    if (cl && cr && duplicates(R1) && !duplicates(R2)) cl = false;
    if (cl) {
      Cedent g2 = r->conclusion.lhs.minus(a);
      Cedent d2 = r->conclusion.rhs;
      auto out = through_context(
          *l, a, true, [&](Cedent& g, Cedent& d) { d.remove(a); d = d.plus(d2); g = g.plus(g2); },
          [&](const ProofPtr& k) { return cut(k, r, a); });
      return {out, std::string("commute-left-") + rule_text(R1)};
    }
    if (cr) {
      Cedent g1 = l->conclusion.lhs;
      Cedent d1 = l->conclusion.rhs.minus(a);
      auto out = through_context(
          *r, a, false, [&](Cedent& g, Cedent& d) { g.remove(a); g = g.plus(g1); d = d.plus(d1); },
          [&](const ProofPtr& k) { return cut(l, k, a); });
      return {out, std::string("commute-right-") + rule_text(R2)};
    }

    // Both sides principal, one of them through a dual rule.
    if (R1 == Rule::DualR) return {cut(move_right(l->kids[0], *l->bind.A), r, a), "dual-move-left"};
    if (R2 == Rule::DualL) return {cut(l, move_left(r->kids[0], *r->bind.A), a), "dual-move-right"};
    throw std::logic_error("rewrite: no case applies to cut on " + to_string(a));
  }

 private:
  static int count_right(const ProofTree& n, const Formula& a) {
    int k = 0;
    for (const auto& f : n.conclusion.rhs) k += f == a;
    return k;
  }
  static int count_left(const ProofTree& n, const Formula& a) {
    int k = 0;
    for (const auto& f : n.conclusion.lhs) k += f == a;
    return k;
  }
  static bool commutable_right(const ProofTree& n, const Formula& a) {
    return n.bind.D.contains(a) || n.bind.D2.contains(a);
  }
  static bool commutable_left(const ProofTree& n, const Formula& a) {
    return n.bind.G.contains(a) || n.bind.G2.contains(a);
  }
  static Bindings dual_bind(const Formula& a, Cedent g, Cedent d) {
    Bindings b = bind_A(a);
    b.G = std::move(g);
    b.D = std::move(d);
    return b;
  }

  Hardness p_;
  const Theory& t_;
};

// Path (child indices) to the deepest cut, leftmost on ties.
inline std::optional<std::vector<int>> pick_cut(const ProofTree& t) {
  std::optional<std::vector<int>> best;
  std::vector<int> path;
  std::function<void(const ProofTree&)> walk = [&](const ProofTree& n) {
    if (n.rule == Rule::CUT && (!best || path.size() > best->size())) best = path;
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
      path.push_back(static_cast<int>(i));
      walk(*n.kids[i]);
      path.pop_back();
    }
  };
  walk(t);
  return best;
}

inline ProofPtr replace_at(const ProofPtr& t, const std::vector<int>& path, std::size_t i, const ProofPtr& with) {
  if (i == path.size()) return with;
  auto n = std::make_shared<ProofTree>(*t);
  n->kids[static_cast<std::size_t>(path[i])] = replace_at(t->kids[static_cast<std::size_t>(path[i])], path, i + 1, with);
  return n;
}

inline const ProofTree& at_path(const ProofTree& t, const std::vector<int>& path) {
  const ProofTree* n = &t;
  for (int i : path) n = n->kids[static_cast<std::size_t>(i)].get();
  return *n;
}

}  // namespace detail

// One rewrite of the deepest (then leftmost) cut.
inline std::optional<std::pair<ProofPtr, RewriteTrace>> cut_step(const ProofPtr& t, const Hardness& p,
                                                                 const Theory& th = {}) {
  auto path = detail::pick_cut(*t);
  if (!path) return std::nullopt;
  detail::CutReducer red(p, th);
  auto [rep, label] = red.reduce(detail::at_path(*t, *path));
  ProofPtr out = detail::replace_at(t, *path, 0, rep);
  RewriteTrace tr{label, cut_metric(*t), cut_metric(*out), validity(*t), validity(*out)};
  return std::make_pair(out, tr);
}

inline std::optional<std::pair<Derivation, RewriteTrace>> cut_step(const Derivation& d, const Hardness& p,
                                                                   const Theory& th = {}) {
  auto r = cut_step(to_tree(d), p, th);
  if (!r) return std::nullopt;
  return std::make_pair(to_derivation(*r->first), r->second);
}

struct CutElimination {
  Derivation result = Derivation::id(Structure());
  std::vector<RewriteTrace> trace;
  // Steps where the metric failed to drop, validity dropped, or the
  // conclusion changed.
  std::vector<std::size_t> metric_not_decreasing, validity_decreasing, conclusion_changed;
};

inline CutElimination cut_eliminate(const Derivation& d, const Hardness& p, const Theory& th = {},
                                    std::size_t max_steps = 100000) {
  CutElimination out;
  ProofPtr t = to_tree(d);
  const Sequent goal = t->conclusion;
  while (true) {
    auto s = cut_step(t, p, th);
    if (!s) break;
    std::size_t i = out.trace.size();
    if (!(s->second.after < s->second.before)) out.metric_not_decreasing.push_back(i);
    if (lt(s->second.validity_after, s->second.validity_before)) out.validity_decreasing.push_back(i);
    if (!(s->first->conclusion == goal)) out.conclusion_changed.push_back(i);
    out.trace.push_back(s->second);
    t = s->first;
    if (out.trace.size() >= max_steps) throw std::runtime_error("cut elimination exceeded step limit");
  }
  out.result = to_derivation(*t);
  return out;
}

// ---------------------------------------------------------------------------
// Structural schemas: terms over variables x1..xn and constants.

class SchemaTerm {
 public:
  enum class Kind : unsigned char { Var, Const, Bin };
  static SchemaTerm var(int i) { SchemaTerm s; s.kind_ = Kind::Var; s.var_ = i; return s; }
  static SchemaTerm constant(RealValue v) { SchemaTerm s; s.kind_ = Kind::Const; s.c_ = std::move(v); return s; }
  static SchemaTerm bin(RedOp op, SchemaTerm a, SchemaTerm b) {
    SchemaTerm s;
    s.kind_ = Kind::Bin;
    s.op_ = op;
    s.kids_ = {std::move(a), std::move(b)};
    return s;
  }

  Kind kind() const { return kind_; }
  int var() const { return var_; }
  RedOp op() const { return op_; }
  const SchemaTerm& left() const { return kids_[0]; }
  const SchemaTerm& right() const { return kids_[1]; }

  Value eval(const std::vector<Value>& env, const Hardness& p) const {
    switch (kind_) {
      case Kind::Var: return env.at(static_cast<std::size_t>(var_));
      case Kind::Const: return at_hardness(c_, p);
      case Kind::Bin: return apply(op_, left().eval(env, p), right().eval(env, p));
    }
    return Value::zero(p);
  }
  int max_var() const {
    if (kind_ == Kind::Var) return var_;
    if (kind_ == Kind::Bin) return std::max(left().max_var(), right().max_var());
    return -1;
  }
  void occurrences(std::vector<int>& out) const {
    if (kind_ == Kind::Var) out.push_back(var_);
    if (kind_ == Kind::Bin) { left().occurrences(out); right().occurrences(out); }
  }

 private:
  Kind kind_ = Kind::Const;
  int var_ = 0;
  RealValue c_;
  RedOp op_ = RedOp::Ten;
  std::vector<SchemaTerm> kids_;
};

// `x1`, `(const r)`, `(ten T T)`, `(cot T T)`, `(padd T T)`, `(pcoadd T T)`.
// Variables are numbered from 1 in the text and from 0 in the API.
inline SchemaTerm parse_schema(Reader& r) {
  if (r.peek() == 'x') {
    std::size_t at = r.pos();
    std::string w(r.word());
    try {
      int i = std::stoi(w.substr(1));
      if (i < 1) throw std::out_of_range("");
      return SchemaTerm::var(i - 1);
    } catch (const std::exception&) {
      throw ParseError("bad schema variable '" + w + "'", at);
    }
  }
  r.expect("(");
  std::size_t at = r.pos();
  std::string head(r.word());
  SchemaTerm out;
  if (head == "const") {
    std::size_t vat = (r.skip(), r.pos());
    out = SchemaTerm::constant(parse_real(r.word(), vat));
  } else {
    RedOp op;
    if (head == "ten") op = RedOp::Ten;
    else if (head == "cot") op = RedOp::Cot;
    else if (head == "padd") op = RedOp::Padd;
    else if (head == "pcoadd") op = RedOp::Pcoadd;
    else throw ParseError("unknown schema form '" + head + "'", at);
    SchemaTerm a = parse_schema(r);
    SchemaTerm b = parse_schema(r);
    out = SchemaTerm::bin(op, std::move(a), std::move(b));
  }
  r.expect(")");
  return out;
}
inline SchemaTerm parse_schema(std::string_view text) {
  Reader r(text);
  SchemaTerm s = parse_schema(r);
  if (!r.at_end()) r.fail("trailing input");
  return s;
}

struct SchemaCounterexample {
  std::vector<Value> env;
  Value lhs, rhs;
};

// Looks for a valuation with t > s: all assignments from {0, 1, inf}, then
// `samples` random ones.
inline std::optional<SchemaCounterexample> refute_schema(const SchemaTerm& t, const SchemaTerm& s, const Hardness& p,
                                                         int samples = 1000, unsigned seed = 7) {
  int n = std::max(t.max_var(), s.max_var()) + 1;
  std::vector<Value> env(static_cast<std::size_t>(n), Value::zero(p));
  auto test = [&]() -> std::optional<SchemaCounterexample> {
    Value a = t.eval(env, p), b = s.eval(env, p);
    if (lt(b, a)) return SchemaCounterexample{env, a, b};
    return std::nullopt;
  };
  const Value corners[] = {Value::zero(p), Value::one(p), Value::infinity(p)};
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i) env[static_cast<std::size_t>(i)] = corners[digit[static_cast<std::size_t>(i)]];
    if (auto c = test()) return c;
    int i = 0;
    while (i < n && digit[static_cast<std::size_t>(i)] == 2) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++digit[static_cast<std::size_t>(i)];
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(0, 40), den(1, 12), pick(0, 9);
  for (int k = 0; k < samples; ++k) {
    for (auto& v : env) {
      int c = pick(rng);
      if (c == 0) v = Value::zero(p);
      else if (c == 1) v = Value::infinity(p);
      else v = Value::from_power(Rational(num(rng) + 1, den(rng)), p);
    }
    if (auto c = test()) return c;
  }
  return std::nullopt;
}

struct SchemaRejected : std::runtime_error {
  SchemaCounterexample witness;
  SchemaRejected(const std::string& m, SchemaCounterexample w) : std::runtime_error(m), witness(std::move(w)) {}
};

// Given proofs of t's variable occurrences (left to right), builds a derivation
// of s over the same sequents: each variable gets its best proof, and EFQ when
// t does not mention it. `seqs[i]` is the sequent of variable i.
inline Derivation apply_structural_schema(const SchemaTerm& t, const SchemaTerm& s, const std::vector<Sequent>& seqs,
                                          const std::vector<Derivation>& proofs, const Hardness& p) {
  if (auto c = refute_schema(t, s, p)) {
    std::string env;
    for (const auto& v : c->env) env += (env.empty() ? "" : ", ") + v.str();
    throw SchemaRejected("schema is not pointwise below: at (" + env + ") " + c->lhs.str() + " > " + c->rhs.str(), *c);
  }
  std::vector<int> occ;
  t.occurrences(occ);
  if (occ.size() != proofs.size()) throw std::invalid_argument("one proof per variable occurrence is required");
  std::vector<std::optional<Derivation>> best(seqs.size());
  for (std::size_t i = 0; i < occ.size(); ++i) {
    auto v = static_cast<std::size_t>(occ[i]);
    if (v >= seqs.size()) throw std::invalid_argument("variable without a sequent");
    if (!proofs[i].bottom().is_leaf() || !(proofs[i].bottom().sequent() == seqs[v]))
      throw std::invalid_argument("proof does not conclude its variable's sequent");
    if (!best[v] || lt(validity(*best[v]), validity(proofs[i]))) best[v] = proofs[i];
  }
  std::function<Derivation(const SchemaTerm&)> build = [&](const SchemaTerm& u) -> Derivation {
    switch (u.kind()) {
      case SchemaTerm::Kind::Var: {
        auto v = static_cast<std::size_t>(u.var());
        if (v >= seqs.size()) throw std::invalid_argument("variable without a sequent");
        return best[v] ? *best[v] : efq(seqs[v], p);
      }
      case SchemaTerm::Kind::Const: return Derivation::id(Structure::constant(u.eval({}, p)));
      case SchemaTerm::Kind::Bin: return Derivation::horiz(u.op(), build(u.left()), build(u.right()));
    }
    throw std::logic_error("schema");
  };
  return build(s);
}

}  // namespace qll
