#pragma once

// Formulas in negation normal form, cedents and sequents.

#include <algorithm>
#include <cctype>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qll/reader.hpp"

namespace qll {

enum class FKind : unsigned char { Atom, NegAtom, One, Bot, Top, Tensor, Par, Plor, Pland };

class Formula {
 public:
  Formula() : Formula(FKind::One) {}

  static Formula atom(std::string name) { return Formula(FKind::Atom, std::move(name)); }
  static Formula neg_atom(std::string name) { return Formula(FKind::NegAtom, std::move(name)); }
  static Formula one() { return Formula(FKind::One); }
  static Formula bot() { return Formula(FKind::Bot); }
  static Formula top() { return Formula(FKind::Top); }
  static Formula binary(FKind k, const Formula& l, const Formula& r) {
    Formula f(k);
    auto n = std::make_shared<Node>(Node{k, "", l.n_, r.n_});
    f.n_ = std::move(n);
    return f;
  }
  static Formula tensor(const Formula& l, const Formula& r) { return binary(FKind::Tensor, l, r); }
  static Formula par(const Formula& l, const Formula& r) { return binary(FKind::Par, l, r); }
  static Formula plor(const Formula& l, const Formula& r) { return binary(FKind::Plor, l, r); }
  static Formula pland(const Formula& l, const Formula& r) { return binary(FKind::Pland, l, r); }

  FKind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  bool is_binary() const { return kind() >= FKind::Tensor; }
  bool is_literal() const { return kind() == FKind::Atom || kind() == FKind::NegAtom; }
  Formula left() const { return Formula(n_->l); }
  Formula right() const { return Formula(n_->r); }

  friend int compare(const Formula& a, const Formula& b) { return cmp(a.n_.get(), b.n_.get()); }
  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    FKind kind;
    std::string name;
    std::shared_ptr<const Node> l, r;
  };
  static int cmp(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (int c = a->name.compare(b->name); c != 0) return c < 0 ? -1 : 1;
    if (!a->l) return 0;
    if (int c = cmp(a->l.get(), b->l.get()); c != 0) return c;
    return cmp(a->r.get(), b->r.get());
  }
  explicit Formula(FKind k, std::string name = "")
      : n_(std::make_shared<Node>(Node{k, std::move(name), nullptr, nullptr})) {}
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

inline const char* connective_symbol(FKind k) {
  switch (k) {
    case FKind::Tensor: return "*";
    case FKind::Par: return "|";
    case FKind::Plor: return "+";
    case FKind::Pland: return "&";
    default: return "?";
  }
}

inline void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case FKind::Atom: os << f.name(); return;
    case FKind::NegAtom: os << '~' << f.name(); return;
    case FKind::One: os << '1'; return;
    case FKind::Bot: os << "bot"; return;
    case FKind::Top: os << "top"; return;
    default:
      os << '(';
      print(os, f.left());
      os << ' ' << connective_symbol(f.kind()) << ' ';
      print(os, f.right());
      os << ')';
  }
}
inline std::ostream& operator<<(std::ostream& os, const Formula& f) { print(os, f); return os; }
inline std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

// De Morgan dual; 1 is self-dual and bot/top swap.
inline Formula negate(const Formula& f) {
  switch (f.kind()) {
    case FKind::Atom: return Formula::neg_atom(f.name());
    case FKind::NegAtom: return Formula::atom(f.name());
    case FKind::One: return Formula::one();
    case FKind::Bot: return Formula::top();
    case FKind::Top: return Formula::bot();
    case FKind::Tensor: return Formula::par(negate(f.left()), negate(f.right()));
    case FKind::Par: return Formula::tensor(negate(f.left()), negate(f.right()));
    case FKind::Plor: return Formula::pland(negate(f.left()), negate(f.right()));
    case FKind::Pland: return Formula::plor(negate(f.left()), negate(f.right()));
  }
  return f;
}

// Number of binary connectives.
inline int connectives(const Formula& f) {
  return f.is_binary() ? 1 + connectives(f.left()) + connectives(f.right()) : 0;
}

// A multiset of formulas, kept sorted.
class Cedent {
 public:
  Cedent() = default;
  Cedent(std::initializer_list<Formula> fs) : fs_(fs) { std::sort(fs_.begin(), fs_.end()); }
  explicit Cedent(std::vector<Formula> fs) : fs_(std::move(fs)) { std::sort(fs_.begin(), fs_.end()); }

  const std::vector<Formula>& items() const { return fs_; }
  std::size_t size() const { return fs_.size(); }
  bool empty() const { return fs_.empty(); }
  auto begin() const { return fs_.begin(); }
  auto end() const { return fs_.end(); }

  Cedent plus(const Formula& f) const {
    Cedent c = *this;
    c.fs_.insert(std::upper_bound(c.fs_.begin(), c.fs_.end(), f), f);
    return c;
  }
  Cedent plus(const Cedent& o) const {
    Cedent c;
    c.fs_.reserve(fs_.size() + o.fs_.size());
    std::merge(fs_.begin(), fs_.end(), o.fs_.begin(), o.fs_.end(), std::back_inserter(c.fs_));
    return c;
  }
  bool contains(const Formula& f) const { return std::binary_search(fs_.begin(), fs_.end(), f); }
  // Removes one occurrence; false if absent.
  bool remove(const Formula& f) {
    auto it = std::lower_bound(fs_.begin(), fs_.end(), f);
    if (it == fs_.end() || !(*it == f)) return false;
    fs_.erase(it);
    return true;
  }
  Cedent minus(const Formula& f) const { Cedent c = *this; c.remove(f); return c; }
  // Multiset difference; false if `o` is not contained.
  bool remove_all(const Cedent& o) {
    for (const auto& f : o) if (!remove(f)) return false;
    return true;
  }
  bool includes(const Cedent& o) const {
    return std::includes(fs_.begin(), fs_.end(), o.fs_.begin(), o.fs_.end());
  }
  Cedent negated() const {
    std::vector<Formula> v;
    v.reserve(fs_.size());
    for (const auto& f : fs_) v.push_back(negate(f));
    return Cedent(std::move(v));
  }

  friend bool operator==(const Cedent& a, const Cedent& b) { return a.fs_ == b.fs_; }
  friend bool operator<(const Cedent& a, const Cedent& b) {
    return std::lexicographical_compare(a.fs_.begin(), a.fs_.end(), b.fs_.begin(), b.fs_.end());
  }

 private:
  std::vector<Formula> fs_;
};

inline std::ostream& operator<<(std::ostream& os, const Cedent& c) {
  bool first = true;
  for (const auto& f : c) {
    if (!first) os << ", ";
    first = false;
    os << f;
  }
  return os;
}

struct Sequent {
  Cedent lhs, rhs;

  friend bool operator==(const Sequent& a, const Sequent& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
  friend bool operator<(const Sequent& a, const Sequent& b) {
    if (a.lhs == b.lhs) return a.rhs < b.rhs;
    return a.lhs < b.lhs;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Sequent& s) {
  os << s.lhs;
  os << (s.lhs.empty() ? "|-" : " |-");
  if (!s.rhs.empty()) os << ' ' << s.rhs;
  return os;
}
inline std::string to_string(const Sequent& s) {
  std::string out;
  for (const auto& f : s.lhs) out += (out.empty() ? "" : ", ") + to_string(f);
  out += s.lhs.empty() ? "|-" : " |-";
  bool first = true;
  for (const auto& f : s.rhs) { out += (first ? " " : ", ") + to_string(f); first = false; }
  return out;
}

// Formulas plus binary connectives.
inline int complexity(const Sequent& s) {
  int n = 0;
  for (const auto& f : s.lhs) n += 1 + connectives(f);
  for (const auto& f : s.rhs) n += 1 + connectives(f);
  return n;
}

inline int total_connectives(const Sequent& s) {
  int n = 0;
  for (const auto& f : s.lhs) n += connectives(f);
  for (const auto& f : s.rhs) n += connectives(f);
  return n;
}

// |- neg(lhs), rhs
inline Sequent one_sided(const Sequent& s) { return Sequent{Cedent{}, s.lhs.negated().plus(s.rhs)}; }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool ident_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

inline Formula parse_formula_top(Reader& r);

inline Formula parse_unary(Reader& r) {
  char c = r.peek();
  if (c == '(') {
    r.expect("(");
    Formula f = parse_formula_top(r);
    r.expect(")");
    return f;
  }
  if (c == '~') {
    r.expect("~");
    return negate(parse_unary(r));
  }
  if (c == '1') {
    r.expect("1");
    if (r.pos() < r.text().size() && ident_char(r.text()[r.pos()])) r.fail("unexpected character after 1");
    return Formula::one();
  }
  if (!ident_start(c)) r.fail("expected formula");
  std::string name(r.take(ident_char));
  if (name == "bot") return Formula::bot();
  if (name == "top") return Formula::top();
  if (name == "neg" && r.peek() == '(') {
    r.expect("(");
    Formula f = parse_formula_top(r);
    r.expect(")");
    return negate(f);
  }
  return Formula::atom(std::move(name));
}

inline bool peek_binop(Reader& r, FKind& k) {
  char c = r.peek();
  if (c == '*') { k = FKind::Tensor; return true; }
  if (c == '+') { k = FKind::Plor; return true; }
  if (c == '&') { k = FKind::Pland; return true; }
  if (c == '|' && !r.starts_with("|-")) { k = FKind::Par; return true; }
  return false;
}

// One binary connective may appear without enclosing parentheses; chains must
// be parenthesized.
inline Formula parse_formula_top(Reader& r) {
  Formula f = parse_unary(r);
  FKind k;
  if (!peek_binop(r, k)) return f;
  r.expect(std::string_view(connective_symbol(k)));
  Formula g = parse_unary(r);
  FKind k2;
  if (peek_binop(r, k2)) r.fail("ambiguous connective chain, add parentheses");
  return Formula::binary(k, std::move(f), std::move(g));
}

inline Cedent parse_cedent(Reader& r) {
  std::vector<Formula> fs;
  char c = r.peek();
  if (c == '\0' || c == ')' || r.starts_with("|-")) return Cedent{};
  fs.push_back(parse_formula_top(r));
  while (r.accept(",")) fs.push_back(parse_formula_top(r));
  return Cedent(std::move(fs));
}

}  // namespace detail

inline Sequent parse_sequent(Reader& r) {
  Sequent s;
  s.lhs = detail::parse_cedent(r);
  r.expect("|-");
  s.rhs = detail::parse_cedent(r);
  return s;
}

inline Formula parse_formula(std::string_view text) {
  Reader r(text);
  Formula f = detail::parse_formula_top(r);
  if (!r.at_end()) r.fail("trailing input");
  return f;
}

inline Sequent parse_sequent(std::string_view text) {
  Reader r(text);
  Sequent s = parse_sequent(r);
  if (!r.at_end()) r.fail("trailing input");
  return s;
}

}  // namespace qll
