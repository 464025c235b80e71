#pragma once

// Structures: terms built from sequents and constants by red connectives.

#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qll/alethic.hpp"
#include "qll/formula.hpp"

namespace qll {

enum class RedOp : unsigned char { Ten, Cot, Padd, Pcoadd };

inline const char* red_name(RedOp op) {
  switch (op) {
    case RedOp::Ten: return "ten";
    case RedOp::Cot: return "cot";
    case RedOp::Padd: return "padd";
    case RedOp::Pcoadd: return "pcoadd";
  }
  return "?";
}

inline Value apply(RedOp op, const Value& a, const Value& b) {
  switch (op) {
    case RedOp::Ten: return tensor(a, b);
    case RedOp::Cot: return cotensor(a, b);
    case RedOp::Padd: return padd(a, b);
    case RedOp::Pcoadd: return pcoadd(a, b);
  }
  return a;
}

class Structure {
 public:
  enum class Kind : unsigned char { Leaf, Const, Bin };

  Structure() : Structure(Sequent{}) {}
  Structure(Sequent s) : n_(std::make_shared<Node>()) { mut().kind = Kind::Leaf; mut().seq = std::move(s); }
  static Structure constant(Value v) {
    Structure h;
    h.mut().kind = Kind::Const;
    h.mut().val = std::move(v);
    return h;
  }
  static Structure bin(RedOp op, Structure l, Structure r) {
    Structure h;
    h.mut().kind = Kind::Bin;
    h.mut().op = op;
    h.mut().l = std::move(l.n_);
    h.mut().r = std::move(r.n_);
    return h;
  }

  Kind kind() const { return n_->kind; }
  bool is_leaf() const { return kind() == Kind::Leaf; }
  const Sequent& sequent() const { return n_->seq; }
  const Value& value() const { return n_->val; }
  RedOp op() const { return n_->op; }
  Structure left() const { return Structure(n_->l); }
  Structure right() const { return Structure(n_->r); }

  friend bool operator==(const Structure& a, const Structure& b) {
    if (a.n_ == b.n_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Leaf: return a.sequent() == b.sequent();
      case Kind::Const: return a.value() == b.value();
      case Kind::Bin: return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    Sequent seq;
    Value val;
    RedOp op = RedOp::Ten;
    std::shared_ptr<const Node> l, r;
  };
  explicit Structure(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  Node& mut() { return const_cast<Node&>(*n_); }
  std::shared_ptr<const Node> n_;
};

inline void print(std::ostream& os, const Structure& h) {
  switch (h.kind()) {
    case Structure::Kind::Leaf: os << "(seq " << h.sequent() << ')'; return;
    case Structure::Kind::Const: os << "(const " << h.value().literal() << ')'; return;
    case Structure::Kind::Bin:
      os << '(' << red_name(h.op()) << ' ';
      print(os, h.left());
      os << ' ';
      print(os, h.right());
      os << ')';
  }
}
inline std::ostream& operator<<(std::ostream& os, const Structure& h) { print(os, h); return os; }
inline std::string to_string(const Structure& h) {
  std::ostringstream os;
  print(os, h);
  return os.str();
}

inline Structure parse_structure(Reader& r, const Hardness& p) {
  r.expect("(");
  std::size_t at = r.pos();
  std::string head(r.word());
  Structure out;
  if (head == "seq") {
    out = Structure(parse_sequent(r));
  } else if (head == "const") {
    std::size_t vat = (r.skip(), r.pos());
    out = Structure::constant(Value::parse(r.word(), p, vat));
  } else {
    RedOp op;
    if (head == "ten") op = RedOp::Ten;
    else if (head == "cot") op = RedOp::Cot;
    else if (head == "padd") op = RedOp::Padd;
    else if (head == "pcoadd") op = RedOp::Pcoadd;
    else throw ParseError("unknown structure form '" + head + "'", at);
    Structure a = parse_structure(r, p);
    Structure b = parse_structure(r, p);
    out = Structure::bin(op, std::move(a), std::move(b));
  }
  r.expect(")");
  return out;
}

inline Structure parse_structure(std::string_view text, const Hardness& p) {
  Reader r(text);
  Structure h = parse_structure(r, p);
  if (!r.at_end()) r.fail("trailing input");
  return h;
}

// Evaluates a structure, sending each leaf through `leaf`.
inline Value evaluate(const Structure& h, const std::function<Value(const Sequent&)>& leaf) {
  switch (h.kind()) {
    case Structure::Kind::Leaf: return leaf(h.sequent());
    case Structure::Kind::Const: return h.value();
    case Structure::Kind::Bin: return apply(h.op(), evaluate(h.left(), leaf), evaluate(h.right(), leaf));
  }
  return h.value();
}

inline bool is_closed(const Structure& h) {
  switch (h.kind()) {
    case Structure::Kind::Leaf: return false;
    case Structure::Kind::Const: return true;
    case Structure::Kind::Bin: return is_closed(h.left()) && is_closed(h.right());
  }
  return false;
}

// Value of a closed structure.
inline Value eval_closed(const Structure& h) {
  return evaluate(h, [](const Sequent& s) -> Value {
    throw std::invalid_argument("structure is not closed: " + to_string(s));
  });
}

inline void leaves(const Structure& h, std::vector<Sequent>& out) {
  if (h.is_leaf()) out.push_back(h.sequent());
  else if (h.kind() == Structure::Kind::Bin) { leaves(h.left(), out); leaves(h.right(), out); }
}

}  // namespace qll
