#pragma once

// Rules, derivations, the proof checker and validity.

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qll/structure.hpp"
#include "qll/theory.hpp"

namespace qll {

enum class Rule : unsigned char {
  AX, EMP, EFQ, CUT, MIX, TensorL, TensorR, ParL, ParR, DualL, DualR, OneL, OneR,
  PlorL, PlorR, PlandL, PlandR, BotL, TopR, MixStar, AtomL, AtomR,
  // Unary additive rules, sound only at p = inf.
  PlorR1, PlorR2, PlandL1, PlandL2,
};

inline const char* rule_text(Rule r) {
  static const char* names[] = {"AX", "EMP", "EFQ", "CUT", "MIX", "TensorL", "TensorR", "ParL", "ParR",
                                "DualL", "DualR", "OneL", "OneR", "PlorL", "PlorR", "PlandL", "PlandR",
                                "BotL", "TopR", "MixStar", "AtomL", "AtomR", "PlorR1", "PlorR2",
                                "PlandL1", "PlandL2"};
  return names[static_cast<int>(r)];
}

inline std::optional<Rule> rule_from_text(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Rule::PlandL2); ++i)
    if (s == rule_text(static_cast<Rule>(i))) return static_cast<Rule>(i);
  return std::nullopt;
}

// Schema variables of a rule instance.
struct Bindings {
  std::optional<Formula> A, B;
  Cedent G, D, G2, D2;
  std::string atom;

  friend bool operator==(const Bindings& x, const Bindings& y) {
    return x.A == y.A && x.B == y.B && x.G == y.G && x.D == y.D && x.G2 == y.G2 && x.D2 == y.D2 &&
           x.atom == y.atom;
  }
};

struct Uses {
  bool A = false, B = false, G = false, D = false, split = false;
};

inline Uses uses(Rule r) {
  switch (r) {
    case Rule::AX: return {true, false, false, false, false};
    case Rule::EMP: case Rule::OneL: case Rule::OneR: case Rule::AtomL: case Rule::AtomR: return {};
    case Rule::EFQ: case Rule::BotL: case Rule::TopR: return {false, false, true, true, false};
    case Rule::CUT: return {true, false, true, true, true};
    case Rule::MIX: case Rule::MixStar: return {false, false, true, true, true};
    case Rule::TensorR: case Rule::ParL: return {true, true, true, true, true};
    case Rule::DualL: case Rule::DualR: return {true, false, true, true, false};
    default: return {true, true, true, true, false};
  }
}

inline bool is_unary_additive(Rule r) {
  return r == Rule::PlorR1 || r == Rule::PlorR2 || r == Rule::PlandL1 || r == Rule::PlandL2;
}

namespace detail {
inline const Formula& need(const std::optional<Formula>& f, const char* which, Rule r) {
  if (!f) throw std::invalid_argument(std::string(rule_text(r)) + " needs binding " + which);
  return *f;
}
}  // namespace detail

// Conclusion of a rule instance.
inline Sequent conclusion_of(Rule r, const Bindings& b) {
  auto A = [&] { return detail::need(b.A, "A", r); };
  auto B = [&] { return detail::need(b.B, "B", r); };
  switch (r) {
    case Rule::AX: return {Cedent{A()}, Cedent{A()}};
    case Rule::EMP: return {};
    case Rule::EFQ: return {b.G, b.D};
    case Rule::CUT: case Rule::MIX: case Rule::MixStar: return {b.G.plus(b.G2), b.D.plus(b.D2)};
    case Rule::TensorL: return {b.G.plus(Formula::tensor(A(), B())), b.D};
    case Rule::TensorR: return {b.G.plus(b.G2), b.D.plus(b.D2).plus(Formula::tensor(A(), B()))};
    case Rule::ParL: return {b.G.plus(b.G2).plus(Formula::par(A(), B())), b.D.plus(b.D2)};
    case Rule::ParR: return {b.G, b.D.plus(Formula::par(A(), B()))};
    case Rule::DualL: return {b.G.plus(negate(A())), b.D};
    case Rule::DualR: return {b.G, b.D.plus(negate(A()))};
    case Rule::OneL: return {Cedent{Formula::one()}, {}};
    case Rule::OneR: return {{}, Cedent{Formula::one()}};
    case Rule::PlorL: return {b.G.plus(Formula::plor(A(), B())), b.D};
    case Rule::PlorR: case Rule::PlorR1: case Rule::PlorR2: return {b.G, b.D.plus(Formula::plor(A(), B()))};
    case Rule::PlandL: case Rule::PlandL1: case Rule::PlandL2: return {b.G.plus(Formula::pland(A(), B())), b.D};
    case Rule::PlandR: return {b.G, b.D.plus(Formula::pland(A(), B()))};
    case Rule::BotL: return {b.G.plus(Formula::bot()), b.D};
    case Rule::TopR: return {b.G, b.D.plus(Formula::top())};
    case Rule::AtomL: return {Cedent{Formula::atom(b.atom)}, {}};
    case Rule::AtomR: return {{}, Cedent{Formula::atom(b.atom)}};
  }
  return {};
}

// Premise prescribed by the rule. Atom rules read the theory; without one the
// constant is left as zero and reported by the checker.
inline Structure premise_of(Rule r, const Bindings& b, const Hardness& p, const Theory* t = nullptr) {
  auto A = [&] { return detail::need(b.A, "A", r); };
  auto B = [&] { return detail::need(b.B, "B", r); };
  auto seq = [](Cedent l, Cedent rr) { return Structure(Sequent{std::move(l), std::move(rr)}); };
  auto bin = [](RedOp op, Structure x, Structure y) { return Structure::bin(op, std::move(x), std::move(y)); };
  switch (r) {
    case Rule::AX: case Rule::EMP: case Rule::OneL: case Rule::OneR: return Structure::constant(Value::one(p));
    case Rule::EFQ: return Structure::constant(Value::zero(p));
    case Rule::BotL: case Rule::TopR: return Structure::constant(Value::infinity(p));
    case Rule::AtomR:
    case Rule::AtomL: {
      Value v = (t && t->has(b.atom)) ? t->value(b.atom, p) : Value::zero(p);
      return Structure::constant(r == Rule::AtomR ? v : dual(v));
    }
    case Rule::CUT: return bin(RedOp::Ten, seq(b.G, b.D.plus(A())), seq(b.G2.plus(A()), b.D2));
    case Rule::MIX: return bin(RedOp::Ten, seq(b.G, b.D), seq(b.G2, b.D2));
    case Rule::MixStar: return bin(RedOp::Cot, seq(b.G, b.D), seq(b.G2, b.D2));
    case Rule::TensorL: return seq(b.G.plus(A()).plus(B()), b.D);
    case Rule::TensorR: return bin(RedOp::Ten, seq(b.G, b.D.plus(A())), seq(b.G2, b.D2.plus(B())));
    case Rule::ParL: return bin(RedOp::Ten, seq(b.G.plus(A()), b.D), seq(b.G2.plus(B()), b.D2));
    case Rule::ParR: return seq(b.G, b.D.plus(A()).plus(B()));
    case Rule::DualL: return seq(b.G, b.D.plus(A()));
    case Rule::DualR: return seq(b.G.plus(A()), b.D);
    case Rule::PlorL: return bin(RedOp::Pcoadd, seq(b.G.plus(A()), b.D), seq(b.G.plus(B()), b.D));
    case Rule::PlorR: return bin(RedOp::Padd, seq(b.G, b.D.plus(A())), seq(b.G, b.D.plus(B())));
    case Rule::PlandL: return bin(RedOp::Padd, seq(b.G.plus(A()), b.D), seq(b.G.plus(B()), b.D));
    case Rule::PlandR: return bin(RedOp::Pcoadd, seq(b.G, b.D.plus(A())), seq(b.G, b.D.plus(B())));
    case Rule::PlorR1: return seq(b.G, b.D.plus(A()));
    case Rule::PlorR2: return seq(b.G, b.D.plus(B()));
    case Rule::PlandL1: return seq(b.G.plus(A()), b.D);
    case Rule::PlandL2: return seq(b.G.plus(B()), b.D);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Derivations

class Derivation {
 public:
  enum class Kind : unsigned char { Id, RuleNode, Vert, Horiz };

  static Derivation id(Structure h) {
    Derivation d(Kind::Id);
    d.mut().top = h;
    d.mut().bottom = std::move(h);
    return d;
  }
  static Derivation rule(Rule r, Bindings b, Structure premise) {
    Derivation d(Kind::RuleNode);
    d.mut().bottom = Structure(conclusion_of(r, b));
    d.mut().rule = r;
    d.mut().bind = std::move(b);
    d.mut().top = std::move(premise);
    return d;
  }
  static Derivation vert(Derivation upper, Derivation lower) {
    Derivation d(Kind::Vert);
    d.mut().top = upper.top();
    d.mut().bottom = lower.bottom();
    d.mut().a = std::move(upper.n_);
    d.mut().b = std::move(lower.n_);
    return d;
  }
  static Derivation horiz(RedOp op, Derivation l, Derivation r) {
    Derivation d(Kind::Horiz);
    d.mut().op = op;
    d.mut().top = Structure::bin(op, l.top(), r.top());
    d.mut().bottom = Structure::bin(op, l.bottom(), r.bottom());
    d.mut().a = std::move(l.n_);
    d.mut().b = std::move(r.n_);
    return d;
  }

  Kind kind() const { return n_->kind; }
  const Structure& top() const { return n_->top; }
  const Structure& bottom() const { return n_->bottom; }
  Rule rule_name() const { return n_->rule; }
  const Bindings& bindings() const { return n_->bind; }
  RedOp op() const { return n_->op; }
  // Vert: upper/lower. Horiz: left/right.
  Derivation first() const { return Derivation(n_->a); }
  Derivation second() const { return Derivation(n_->b); }

 private:
  struct Node {
    Kind kind = Kind::Id;
    Structure top, bottom;
    Rule rule = Rule::AX;
    Bindings bind;
    RedOp op = RedOp::Ten;
    std::shared_ptr<const Node> a, b;
  };
  explicit Derivation(Kind k) : n_(std::make_shared<Node>()) { mut().kind = k; }
  explicit Derivation(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  Node& mut() { return const_cast<Node&>(*n_); }
  std::shared_ptr<const Node> n_;
};

// Value of the top structure; the derivation must be closed.
inline Value validity(const Derivation& d) { return eval_closed(d.top()); }

inline int count_rules(const Derivation& d, std::optional<Rule> which = std::nullopt) {
  switch (d.kind()) {
    case Derivation::Kind::Id: return 0;
    case Derivation::Kind::RuleNode: return (!which || d.rule_name() == *which) ? 1 : 0;
    default: return count_rules(d.first(), which) + count_rules(d.second(), which);
  }
}

// ---------------------------------------------------------------------------
// Checker

struct Violation {
  std::string path;
  std::string message;
};

namespace detail {

inline bool same_shape_but_ops(const Structure& a, const Structure& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() != Structure::Kind::Bin) return a == b;
  return same_shape_but_ops(a.left(), b.left()) && same_shape_but_ops(a.right(), b.right());
}

inline void check_rule(const Derivation& d, const Hardness& p, const Theory& t, const std::string& path,
                       std::vector<Violation>& out) {
  Rule r = d.rule_name();
  const Bindings& b = d.bindings();
  auto bad = [&](std::string m) { out.push_back({path, std::move(m)}); };
  if ((r == Rule::AtomL || r == Rule::AtomR) && !t.has(b.atom)) {
    bad("atom '" + b.atom + "' is not in the theory");
    return;
  }
  if (r == Rule::MixStar && !t.mix_star) bad("MixStar is not enabled by the theory");
  if (is_unary_additive(r) && !p.is_infinite()) bad("unary additive rule needs p = inf");
  Structure want;
  try {
    want = premise_of(r, b, p, &t);
  } catch (const std::exception& e) {
    bad(e.what());
    return;
  }
  if (want == d.top()) return;
  if (same_shape_but_ops(want, d.top())) bad("wrong red connective in premise");
  else bad("premise does not match rule schema: expected " + to_string(want) + ", got " + to_string(d.top()));
}

inline void check_hardness(const Structure& h, const Hardness& p, const std::string& path,
                           std::vector<Violation>& out) {
  if (h.kind() == Structure::Kind::Const && !(h.value().hardness() == p))
    out.push_back({path, "constant has hardness " + h.value().hardness().str()});
  if (h.kind() == Structure::Kind::Bin) {
    check_hardness(h.left(), p, path, out);
    check_hardness(h.right(), p, path, out);
  }
}

inline void check(const Derivation& d, const Hardness& p, const Theory& t, const std::string& path,
                  std::vector<Violation>& out) {
  switch (d.kind()) {
    case Derivation::Kind::Id:
      check_hardness(d.top(), p, path + "/id", out);
      return;
    case Derivation::Kind::RuleNode: {
      std::string here = path + "/" + rule_text(d.rule_name());
      check_hardness(d.top(), p, here, out);
      check_rule(d, p, t, here, out);
      return;
    }
    case Derivation::Kind::Vert:
      check(d.first(), p, t, path + "/vert.upper", out);
      check(d.second(), p, t, path + "/vert.lower", out);
      if (!(d.first().bottom() == d.second().top()))
        out.push_back({path + "/vert", "upper conclusion " + to_string(d.first().bottom()) +
                                           " does not match lower premise " + to_string(d.second().top())});
      return;
    case Derivation::Kind::Horiz:
      check(d.first(), p, t, path + "/horiz.left", out);
      check(d.second(), p, t, path + "/horiz.right", out);
      return;
  }
}

}  // namespace detail

// Empty result means the derivation is well formed. Closedness is a separate
// question, answered by is_closed(d.top()).
inline std::vector<Violation> check_derivation(const Derivation& d, const Hardness& p, const Theory& t = {}) {
  std::vector<Violation> out;
  detail::check(d, p, t, "", out);
  return out;
}

// A checked, closed derivation whose bottom is a single sequent.
inline bool is_proof_of(const Derivation& d, const Sequent& s, const Hardness& p, const Theory& t = {}) {
  return check_derivation(d, p, t).empty() && is_closed(d.top()) && d.bottom().is_leaf() &&
         d.bottom().sequent() == s;
}

// ---------------------------------------------------------------------------
// Building proofs bottom-up

// Applies a rule to derivations of its premise leaves (in left-to-right order).
inline Derivation infer(Rule r, const Bindings& b, const std::vector<Derivation>& above, const Hardness& p,
                        const Theory* t = nullptr) {
  Structure prem = premise_of(r, b, p, t);
  Derivation self = Derivation::rule(r, b, prem);
  if (is_closed(prem)) return self;
  std::size_t next = 0;
  std::function<Derivation(const Structure&)> build = [&](const Structure& h) -> Derivation {
    switch (h.kind()) {
      case Structure::Kind::Leaf:
        if (next >= above.size()) throw std::invalid_argument("too few premise derivations");
        return above[next++];
      case Structure::Kind::Const: return Derivation::id(h);
      case Structure::Kind::Bin: {
        Derivation l = build(h.left());
        Derivation rr = build(h.right());
        return Derivation::horiz(h.op(), std::move(l), std::move(rr));
      }
    }
    return Derivation::id(h);
  };
  Derivation up = build(prem);
  return Derivation::vert(std::move(up), std::move(self));
}

inline Bindings bind_A(Formula a) { Bindings b; b.A = std::move(a); return b; }
inline Bindings bind_AB(Formula a, Formula bb, Cedent g = {}, Cedent d = {}) {
  Bindings b;
  b.A = std::move(a);
  b.B = std::move(bb);
  b.G = std::move(g);
  b.D = std::move(d);
  return b;
}
inline Bindings bind_ctx(Cedent g, Cedent d) { Bindings b; b.G = std::move(g); b.D = std::move(d); return b; }
inline Bindings bind_split(Cedent g, Cedent d, Cedent g2, Cedent d2) {
  Bindings b;
  b.G = std::move(g);
  b.D = std::move(d);
  b.G2 = std::move(g2);
  b.D2 = std::move(d2);
  return b;
}

inline Derivation ax(const Formula& a, const Hardness& p) { return infer(Rule::AX, bind_A(a), {}, p); }
inline Derivation efq(const Sequent& s, const Hardness& p) { return infer(Rule::EFQ, bind_ctx(s.lhs, s.rhs), {}, p); }

// ---------------------------------------------------------------------------
// Proof trees: the same proofs, one node per rule instance with the proofs of
// its premise leaves as children. Rewriting works on this form.

struct ProofTree;
using ProofPtr = std::shared_ptr<const ProofTree>;

struct ProofTree {
  Rule rule;
  Bindings bind;
  Structure premise;
  Sequent conclusion;
  std::vector<ProofPtr> kids;
};

inline ProofPtr make_node(Rule r, Bindings b, const Hardness& p, std::vector<ProofPtr> kids,
                          const Theory* t = nullptr) {
  auto n = std::make_shared<ProofTree>();
  n->rule = r;
  n->premise = premise_of(r, b, p, t);
  n->conclusion = conclusion_of(r, b);
  n->bind = std::move(b);
  n->kids = std::move(kids);
  return n;
}

namespace detail {
inline std::size_t leaf_count(const Structure& h) {
  switch (h.kind()) {
    case Structure::Kind::Leaf: return 1;
    case Structure::Kind::Const: return 0;
    case Structure::Kind::Bin: return leaf_count(h.left()) + leaf_count(h.right());
  }
  return 0;
}

inline std::vector<ProofPtr> normalize(const Derivation& d, std::vector<ProofPtr> in) {
  switch (d.kind()) {
    case Derivation::Kind::Id: return in;
    case Derivation::Kind::RuleNode: {
      auto n = std::make_shared<ProofTree>();
      n->rule = d.rule_name();
      n->bind = d.bindings();
      n->premise = d.top();
      n->conclusion = d.bottom().sequent();
      n->kids = std::move(in);
      return {n};
    }
    case Derivation::Kind::Vert: return normalize(d.second(), normalize(d.first(), std::move(in)));
    case Derivation::Kind::Horiz: {
      std::size_t k = leaf_count(d.first().top());
      std::vector<ProofPtr> a(in.begin(), in.begin() + static_cast<long>(std::min(k, in.size())));
      std::vector<ProofPtr> b(in.begin() + static_cast<long>(std::min(k, in.size())), in.end());
      auto x = normalize(d.first(), std::move(a));
      auto y = normalize(d.second(), std::move(b));
      x.insert(x.end(), y.begin(), y.end());
      return x;
    }
  }
  return in;
}
}  // namespace detail

// Requires a checked, closed derivation with a sequent at the bottom.
inline ProofPtr to_tree(const Derivation& d) {
  auto v = detail::normalize(d, {});
  if (v.size() != 1) throw std::invalid_argument("derivation is not a proof of one sequent");
  return v[0];
}

inline Derivation to_derivation(const ProofTree& n) {
  Derivation self = Derivation::rule(n.rule, n.bind, n.premise);
  if (n.kids.empty()) return self;
  std::size_t next = 0;
  std::function<Derivation(const Structure&)> build = [&](const Structure& h) -> Derivation {
    switch (h.kind()) {
      case Structure::Kind::Leaf: return to_derivation(*n.kids.at(next++));
      case Structure::Kind::Const: return Derivation::id(h);
      case Structure::Kind::Bin: {
        Derivation l = build(h.left());
        Derivation r = build(h.right());
        return Derivation::horiz(h.op(), std::move(l), std::move(r));
      }
    }
    return Derivation::id(h);
  };
  return Derivation::vert(build(n.premise), std::move(self));
}

inline Value validity(const ProofTree& n) {
  std::size_t next = 0;
  return evaluate(n.premise, [&](const Sequent&) { return validity(*n.kids.at(next++)); });
}

inline int size(const ProofTree& n) {
  int s = 1;
  for (const auto& k : n.kids) s += size(*k);
  return s;
}

// ---------------------------------------------------------------------------
// Text form
//
//   (rule NAME (bind (A f) (B f) (G f, ...) (D ...) (G2 ...) (D2 ...)) PREMISE)
//   (vert D D)   (horiz OP D D)   (id H)
//
// Atom rules are named AtomL:a / AtomR:a.

inline void print(std::ostream& os, const Derivation& d, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  switch (d.kind()) {
    case Derivation::Kind::Id: os << pad << "(id " << d.top() << ')'; return;
    case Derivation::Kind::RuleNode: {
      Rule r = d.rule_name();
      const Bindings& b = d.bindings();
      os << pad << "(rule " << rule_text(r);
      if (r == Rule::AtomL || r == Rule::AtomR) os << ':' << b.atom;
      os << " (bind";
      Uses u = uses(r);
      auto cedent = [&](const char* key, const Cedent& c) {
        os << " (" << key;
        if (!c.empty()) os << ' ' << c;
        os << ')';
      };
      if (u.A && b.A) os << " (A " << *b.A << ')';
      if (u.B && b.B) os << " (B " << *b.B << ')';
      if (u.G) cedent("G", b.G);
      if (u.D) cedent("D", b.D);
      if (u.split) {
        cedent("G2", b.G2);
        cedent("D2", b.D2);
      }
      os << ") " << d.top() << ')';
      return;
    }
    case Derivation::Kind::Vert:
      os << pad << "(vert\n";
      print(os, d.first(), indent + 2);
      os << '\n';
      print(os, d.second(), indent + 2);
      os << ')';
      return;
    case Derivation::Kind::Horiz:
      os << pad << "(horiz " << red_name(d.op()) << '\n';
      print(os, d.first(), indent + 2);
      os << '\n';
      print(os, d.second(), indent + 2);
      os << ')';
      return;
  }
}

inline std::string to_string(const Derivation& d) {
  std::ostringstream os;
  print(os, d);
  return os.str();
}

inline Derivation parse_derivation(Reader& r, const Hardness& p) {
  r.expect("(");
  std::size_t at = r.pos();
  std::string head(r.word());
  Derivation out = Derivation::id(Structure());
  if (head == "id") {
    out = Derivation::id(parse_structure(r, p));
  } else if (head == "vert") {
    Derivation a = parse_derivation(r, p);
    Derivation b = parse_derivation(r, p);
    out = Derivation::vert(std::move(a), std::move(b));
  } else if (head == "horiz") {
    std::size_t oat = (r.skip(), r.pos());
    std::string op(r.word());
    RedOp o;
    if (op == "ten") o = RedOp::Ten;
    else if (op == "cot") o = RedOp::Cot;
    else if (op == "padd") o = RedOp::Padd;
    else if (op == "pcoadd") o = RedOp::Pcoadd;
    else throw ParseError("unknown red connective '" + op + "'", oat);
    Derivation a = parse_derivation(r, p);
    Derivation b = parse_derivation(r, p);
    out = Derivation::horiz(o, std::move(a), std::move(b));
  } else if (head == "rule") {
    std::size_t nat = (r.skip(), r.pos());
    std::string name(r.word());
    Bindings b;
    auto colon = name.find(':');
    if (colon != std::string::npos) {
      b.atom = name.substr(colon + 1);
      name = name.substr(0, colon);
    }
    auto rule = rule_from_text(name);
    if (!rule) throw ParseError("unknown rule '" + name + "'", nat);
    if ((*rule == Rule::AtomL || *rule == Rule::AtomR) && b.atom.empty())
      throw ParseError("atom rule needs a name, e.g. AtomR:a", nat);
    r.expect("(");
    r.expect("bind");
    while (r.accept("(")) {
      std::size_t kat = (r.skip(), r.pos());
      std::string key(r.word());
      if (key == "A" || key == "B") {
        Formula f = detail::parse_formula_top(r);
        (key == "A" ? b.A : b.B) = f;
      } else if (key == "G") b.G = detail::parse_cedent(r);
      else if (key == "D") b.D = detail::parse_cedent(r);
      else if (key == "G2") b.G2 = detail::parse_cedent(r);
      else if (key == "D2") b.D2 = detail::parse_cedent(r);
      else throw ParseError("unknown binding '" + key + "'", kat);
      r.expect(")");
    }
    r.expect(")");
    Structure prem = parse_structure(r, p);
    try {
      out = Derivation::rule(*rule, std::move(b), std::move(prem));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  } else {
    throw ParseError("unknown derivation form '" + head + "'", at);
  }
  r.expect(")");
  return out;
}

inline Derivation parse_derivation(std::string_view text, const Hardness& p) {
  Reader r(text);
  Derivation d = parse_derivation(r, p);
  if (!r.at_end()) r.fail("trailing input");
  return d;
}

// ---------------------------------------------------------------------------
// Fixtures

struct Fixture {
  std::string name;
  Sequent conclusion;
  Derivation proof;
};

// Soft idempotency, the injection into a p-sum, and the eta-expanded identity
// on a p-meet; all over atoms a, b.
inline std::vector<Fixture> fixture_proofs(const Hardness& p) {
  Formula a = Formula::atom("a"), b = Formula::atom("b");
  std::vector<Fixture> out;
  {
    Derivation d = infer(Rule::PlorL, bind_AB(a, a, {}, Cedent{a}), {ax(a, p), ax(a, p)}, p);
    out.push_back({"soft-idempotency", parse_sequent("a + a |- a"), d});
  }
  {
    Derivation d = infer(Rule::PlorR, bind_AB(a, b, Cedent{a}, {}), {ax(a, p), efq({Cedent{a}, Cedent{b}}, p)}, p);
    out.push_back({"inj", parse_sequent("a |- a + b"), d});
  }
  {
    Formula ab = Formula::pland(a, b);
    Derivation l = infer(Rule::PlandL, bind_AB(a, b, {}, Cedent{a}), {ax(a, p), efq({Cedent{b}, Cedent{a}}, p)}, p);
    Derivation r = infer(Rule::PlandL, bind_AB(a, b, {}, Cedent{b}), {efq({Cedent{a}, Cedent{b}}, p), ax(b, p)}, p);
    Derivation d = infer(Rule::PlandR, bind_AB(a, b, Cedent{ab}, {}), {l, r}, p);
    out.push_back({"eta", parse_sequent("a & b |- a & b"), d});
  }
  return out;
}

// Left fold of p-sums over the names, in the given order.
inline Formula sum_of_atoms(const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("empty event");
  Formula f = Formula::atom(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) f = Formula::plor(f, Formula::atom(names[i]));
  return f;
}

// Proof of A |- A∩B whose validity is the conditional probability, built from
// MIX of AtomL/AtomR leaves. `both` must be nonempty.
inline Derivation bayes_template_proof(const std::vector<std::string>& given, const std::vector<std::string>& both,
                                       const Hardness& p, const Theory& t) {
  auto atom_rule = [&](Rule r, const std::string& name) {
    Bindings x;
    x.atom = name;
    return infer(r, x, {}, p, &t);
  };
  auto leaf = [&](const std::string& a, const std::string& b) {
    return infer(Rule::MIX, bind_split(Cedent{Formula::atom(a)}, {}, {}, Cedent{Formula::atom(b)}),
                 {atom_rule(Rule::AtomL, a), atom_rule(Rule::AtomR, b)}, p, &t);
  };
  auto prefix = [](const std::vector<std::string>& v, std::size_t n) {
    return std::vector<std::string>(v.begin(), v.begin() + static_cast<long>(n));
  };
  // fold(given[0..n)) |- b
  std::function<Derivation(std::size_t, const std::string&)> left = [&](std::size_t n, const std::string& b) {
    if (n == 1) return leaf(given[0], b);
    Formula bf = Formula::atom(b);
    return infer(Rule::PlorL, bind_AB(sum_of_atoms(prefix(given, n - 1)), Formula::atom(given[n - 1]), {}, Cedent{bf}),
                 {left(n - 1, b), leaf(given[n - 1], b)}, p, &t);
  };
  Formula lhs = sum_of_atoms(given);
  // lhs |- fold(both[0..n))
  std::function<Derivation(std::size_t)> right = [&](std::size_t n) {
    if (n == 1) return left(given.size(), both[0]);
    return infer(Rule::PlorR, bind_AB(sum_of_atoms(prefix(both, n - 1)), Formula::atom(both[n - 1]), Cedent{lhs}, {}),
                 {right(n - 1), left(given.size(), both[n - 1])}, p, &t);
  };
  return right(both.size());
}

}  // namespace qll
