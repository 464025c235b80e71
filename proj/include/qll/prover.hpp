#pragma once

// Exact provability: the best validity among reduced proofs of the one-sided
// form, by memoized search over canonical cedents.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "qll/calculus.hpp"

namespace qll {

struct ProverOptions {
  // At p = inf use unary additive rules and no EFQ; the witness then contains
  // EFQ only when nothing better exists.
  bool unary_additives_at_infinity = false;
  std::optional<int> complexity_cap;
  std::function<void(const std::string&)> trace;
};

// Three-point abstraction {0, finite positive, inf}, closed under every
// connective; used for the qualitative search.
enum class Sign : unsigned char { Zero, Pos, Inf };

struct ExactDomain {
  using V = Value;
  Hardness p;
  V zero() const { return Value::zero(p); }
  V one() const { return Value::one(p); }
  V inf() const { return Value::infinity(p); }
  V lift(const Value& v) const { return v; }
  V ten(const V& a, const V& b) const { return tensor(a, b); }
  V cot(const V& a, const V& b) const { return cotensor(a, b); }
  V add(const V& a, const V& b) const { return padd(a, b); }
  V coadd(const V& a, const V& b) const { return pcoadd(a, b); }
  V star(const V& a) const { return dual(a); }
  int cmp(const V& a, const V& b) const { return compare(a, b); }
};

struct SignDomain {
  using V = Sign;
  Hardness p;
  V zero() const { return Sign::Zero; }
  V one() const { return Sign::Pos; }
  V inf() const { return Sign::Inf; }
  V lift(const Value& v) const { return v.is_zero() ? Sign::Zero : v.is_infinite() ? Sign::Inf : Sign::Pos; }
  V ten(V a, V b) const { return (a == Sign::Zero || b == Sign::Zero) ? Sign::Zero : std::max(a, b); }
  V cot(V a, V b) const { return (a == Sign::Inf || b == Sign::Inf) ? Sign::Inf : std::min(a, b); }
  V add(V a, V b) const { return std::max(a, b); }
  V coadd(V a, V b) const { return std::min(a, b); }
  V star(V a) const { return a == Sign::Zero ? Sign::Inf : a == Sign::Inf ? Sign::Zero : Sign::Pos; }
  int cmp(V a, V b) const { return a < b ? -1 : (a == b ? 0 : 1); }
};

// One-sided rule choices.
enum class Step : unsigned char {
  None, EFQ, EMP, AX, OneR, TopR, AtomR, AtomL, ParR, TensorR, PlorR, PlorR1, PlorR2, PlandR, MIX, MixStar
};

inline const char* step_text(Step s) {
  static const char* n[] = {"None", "EFQ", "EMP", "AX", "OneR", "TopR", "AtomR", "AtomL",
                            "ParR", "TensorR", "PlorR", "PlorR1", "PlorR2", "PlandR", "MIX", "MixStar"};
  return n[static_cast<int>(s)];
}

template <class Dom>
class Search {
 public:
  using V = typename Dom::V;
  using Key = std::vector<std::uint32_t>;

  struct Choice {
    Step step = Step::None;
    std::uint32_t principal = 0;
    Key part1, part2;  // premise cedents
  };
  struct Entry {
    std::optional<V> value;  // nullopt: no proof (only without EFQ)
    Choice choice;
  };

  Search(Dom dom, Theory theory, ProverOptions opts)
      : dom_(std::move(dom)), theory_(std::move(theory)), opts_(std::move(opts)) {
    drop_efq_ = opts_.unary_additives_at_infinity && dom_.p.is_infinite();
  }

  std::uint32_t intern(const Formula& f) {
    auto it = ids_.find(f);
    if (it != ids_.end()) return it->second;
    Info info{f, f.kind(), 0, 0, 0};
    if (f.is_binary()) {
      info.l = intern(f.left());
      info.r = intern(f.right());
    }
    auto id = static_cast<std::uint32_t>(infos_.size());
    infos_.push_back(info);
    ids_.emplace(f, id);
    infos_[id].neg = intern_neg(id);
    return id;
  }

  Key key_of(const Cedent& c) {
    Key k;
    for (const auto& f : c) k.push_back(intern(f));
    std::sort(k.begin(), k.end());
    return k;
  }
  Cedent cedent_of(const Key& k) const {
    std::vector<Formula> v;
    for (auto id : k) v.push_back(infos_[id].f);
    return Cedent(std::move(v));
  }
  const Formula& formula(std::uint32_t id) const { return infos_[id].f; }
  std::uint32_t neg(std::uint32_t id) const { return infos_[id].neg; }

  const Entry& solve(const Key& k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Entry e = compute(k);
    return memo_.emplace(k, std::move(e)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }
  const Dom& dom() const { return dom_; }
  const Theory& theory() const { return theory_; }
  bool drops_efq() const { return drop_efq_; }

 private:
  struct Info {
    Formula f;
    FKind kind;
    std::uint32_t l, r, neg;
  };

  std::uint32_t intern_neg(std::uint32_t id) {
    Formula n = negate(infos_[id].f);
    auto it = ids_.find(n);
    if (it != ids_.end()) {
      infos_[it->second].neg = id;
      return it->second;
    }
    Info info{n, n.kind(), 0, 0, id};
    if (n.is_binary()) {
      info.l = intern(n.left());
      info.r = intern(n.right());
    }
    auto nid = static_cast<std::uint32_t>(infos_.size());
    infos_.push_back(info);
    ids_.emplace(n, nid);
    return nid;
  }

  int measure_formulas(const Key& k) const {
    int n = 0;
    for (auto id : k) n += 1 + connectives(infos_[id].f);
    return n;
  }

  // Lexicographic (complexity, connectives) must fall for every premise.
  void check_decrease(const Key& parent, const Key& child) const {
    int pc = measure_formulas(parent), cc = measure_formulas(child);
    int pn = pc - static_cast<int>(parent.size()), cn = cc - static_cast<int>(child.size());
    if (cc > pc || (cc == pc && cn >= pn)) throw std::logic_error("search measure did not decrease");
  }

  static Key with(Key k, std::initializer_list<std::uint32_t> add) {
    for (auto a : add) k.insert(std::upper_bound(k.begin(), k.end(), a), a);
    return k;
  }
  static Key without_at(const Key& k, std::size_t i) {
    Key r = k;
    r.erase(r.begin() + static_cast<long>(i));
    return r;
  }

  // All sub-multisets of k, each once, as (part, rest).
  static void partitions(const Key& k, const std::function<void(const Key&, const Key&)>& f) {
    std::vector<std::pair<std::uint32_t, int>> groups;
    for (auto id : k) {
      if (!groups.empty() && groups.back().first == id) ++groups.back().second;
      else groups.push_back({id, 1});
    }
    std::vector<int> take(groups.size(), 0);
    while (true) {
      Key a, b;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int i = 0; i < take[g]; ++i) a.push_back(groups[g].first);
        for (int i = take[g]; i < groups[g].second; ++i) b.push_back(groups[g].first);
      }
      f(a, b);
      std::size_t g = 0;
      while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
      if (g == groups.size()) break;
      ++take[g];
    }
  }

  struct Best {
    const Search* s;
    std::optional<V> value;
    Choice choice;
    void offer(std::optional<V> v, Choice c) {
      if (!v) return;
      if (!value) { value = v; choice = std::move(c); return; }
      int d = s->dom_.cmp(*v, *value);
      if (d > 0 || (d == 0 && s->order(c, choice) < 0)) { value = v; choice = std::move(c); }
    }
  };

  std::optional<V> sub(const Key& parent, const Key& k) {
    check_decrease(parent, k);
    return solve(k).value;
  }
  template <class Op>
  std::optional<V> both(const std::optional<V>& a, const std::optional<V>& b, Op op) {
    if (!a || !b) return std::nullopt;
    return op(*a, *b);
  }

  Entry compute(const Key& k) {
    if (opts_.complexity_cap && measure_formulas(k) > *opts_.complexity_cap)
      throw CapExceeded("complexity " + std::to_string(measure_formulas(k)) + " exceeds cap " +
                        std::to_string(*opts_.complexity_cap));
    Best best{this, std::nullopt, {}};
    auto mk = [](Step s, std::uint32_t pr = 0, Key a = {}, Key b = {}) {
      return Choice{s, pr, std::move(a), std::move(b)};
    };
    for (auto id : k) {
      if (infos_[id].kind == FKind::Top) {
        best.offer(dom_.inf(), mk(Step::TopR, id));
        return {best.value, best.choice};
      }
    }
    if (!drop_efq_) best.offer(dom_.zero(), mk(Step::EFQ));
    if (k.empty()) best.offer(dom_.one(), mk(Step::EMP));
    if (k.size() == 1) {
      const Info& f = infos_[k[0]];
      if (f.kind == FKind::One) best.offer(dom_.one(), mk(Step::OneR, k[0]));
      if (f.kind == FKind::Atom && theory_.has(f.f.name()))
        best.offer(dom_.lift(theory_.value(f.f.name(), dom_.p)), mk(Step::AtomR, k[0]));
      if (f.kind == FKind::NegAtom && theory_.has(f.f.name()))
        best.offer(dom_.star(dom_.lift(theory_.value(f.f.name(), dom_.p))), mk(Step::AtomL, k[0]));
    }
    if (k.size() == 2 && infos_[k[0]].neg == k[1]) best.offer(dom_.one(), mk(Step::AX, k[0]));

    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0 && k[i] == k[i - 1]) continue;
      std::uint32_t id = k[i];
      const Info f = infos_[id];
      Key rest = without_at(k, i);
      switch (f.kind) {
        case FKind::Par: {
          Key prem = with(rest, {f.l, f.r});
          best.offer(sub(k, prem), mk(Step::ParR, id, prem));
          break;
        }
        case FKind::Tensor:
          partitions(rest, [&](const Key& a, const Key& b) {
            Key x = with(a, {f.l}), y = with(b, {f.r});
            auto vx = sub(k, x);
            auto vy = sub(k, y);
            best.offer(both(vx, vy, [&](const V& u, const V& w) { return dom_.ten(u, w); }),
                       mk(Step::TensorR, id, x, y));
          });
          break;
        case FKind::Plor: {
          Key x = with(rest, {f.l}), y = with(rest, {f.r});
          auto vx = sub(k, x);
          auto vy = sub(k, y);
          if (drop_efq_) {
            best.offer(vx, mk(Step::PlorR1, id, x));
            best.offer(vy, mk(Step::PlorR2, id, y));
          } else {
            best.offer(both(vx, vy, [&](const V& u, const V& w) { return dom_.add(u, w); }),
                       mk(Step::PlorR, id, x, y));
          }
          break;
        }
        case FKind::Pland: {
          Key x = with(rest, {f.l}), y = with(rest, {f.r});
          auto vx = sub(k, x);
          auto vy = sub(k, y);
          best.offer(both(vx, vy, [&](const V& u, const V& w) { return dom_.coadd(u, w); }),
                     mk(Step::PlandR, id, x, y));
          break;
        }
        default: break;
      }
    }
    if (k.size() >= 2) {
      // Split with k[0] always in the first part, so each unordered split is seen once.
      Key rest = without_at(k, 0);
      partitions(rest, [&](const Key& a, const Key& b) {
        if (b.empty()) return;
        Key x = with(a, {k[0]});
        auto vx = sub(k, x);
        auto vy = sub(k, b);
        best.offer(both(vx, vy, [&](const V& u, const V& w) { return dom_.ten(u, w); }), mk(Step::MIX, 0, x, b));
        if (theory_.mix_star)
          best.offer(both(vx, vy, [&](const V& u, const V& w) { return dom_.cot(u, w); }),
                     mk(Step::MixStar, 0, x, b));
      });
    }
    if (opts_.trace) {
      std::string line = "cedent {" + to_string_key(k) + "} -> " + step_text(best.choice.step);
      opts_.trace(line);
    }
    return {best.value, best.choice};
  }

  std::string to_string_key(const Key& k) const {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ", " : "") + to_string(infos_[k[i]].f);
    return s;
  }

  // Tie order between candidate proofs: lexicographic on the preorder token
  // sequence (rule name, principal formula, then premises). EFQ's token carries
  // its cedent.
  int order(const Choice& a, const Choice& b) const {
    std::vector<std::string> ta, tb;
    std::size_t limit = 1;
    // Token streams can be long; grow them until they differ.
    while (true) {
      ta.clear();
      tb.clear();
      tokens(a, ta, limit);
      tokens(b, tb, limit);
      std::size_t n = std::min(ta.size(), tb.size());
      for (std::size_t i = 0; i < n; ++i)
        if (ta[i] != tb[i]) return ta[i] < tb[i] ? -1 : 1;
      if (ta.size() < limit || tb.size() < limit) {
        if (ta.size() == tb.size()) return 0;
        return ta.size() < tb.size() ? -1 : 1;
      }
      limit *= 4;
    }
  }

  void tokens(const Choice& c, std::vector<std::string>& out, std::size_t limit) const {
    if (out.size() >= limit) return;
    out.push_back(step_text(c.step));
    switch (c.step) {
      case Step::EFQ: case Step::EMP: case Step::None: return;
      case Step::MIX: case Step::MixStar: break;
      default: out.push_back(to_string(infos_[c.principal].f));
    }
    for (const Key* part : {&c.part1, &c.part2}) {
      if (part->empty() && !(c.step == Step::MIX || c.step == Step::MixStar || c.step == Step::TensorR)) continue;
      if (out.size() >= limit) return;
      auto it = memo_.find(*part);
      if (it == memo_.end()) { out.push_back("?"); continue; }
      if (it->second.choice.step == Step::EFQ) {
        out.push_back("EFQ{" + to_string_key(*part) + "}");
        continue;
      }
      tokens(it->second.choice, out, limit);
    }
  }

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : k) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };

  Dom dom_;
  Theory theory_;
  ProverOptions opts_;
  bool drop_efq_ = false;
  std::map<Formula, std::uint32_t> ids_;
  std::vector<Info> infos_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

struct ProvabilityResult {
  Value value;
  Derivation witness = Derivation::id(Structure());
};

// Prover bound to one hardness and theory; the memo table persists across calls.
class Prover {
 public:
  Prover(Hardness p, Theory t = {}, ProverOptions o = {})
      : p_(p), search_(ExactDomain{p}, std::move(t), std::move(o)) {}

  const Hardness& hardness() const { return p_; }
  const Theory& theory() const { return search_.theory(); }

  Value value(const Sequent& s) {
    auto k = search_.key_of(one_sided(s).rhs);
    const auto& e = search_.solve(k);
    return e.value ? *e.value : Value::zero(p_);
  }

  ProvabilityResult prove(const Sequent& s) {
    ProvabilityResult r{value(s)};
    r.witness = to_derivation(*witness(s));
    return r;
  }

  // Cut-free proof of s (two-sided) following the memoized choices.
  ProofPtr witness(const Sequent& s) {
    std::vector<Occ> occ;
    for (const auto& f : s.lhs) occ.push_back({true, f, search_.intern(negate(f))});
    for (const auto& f : s.rhs) occ.push_back({false, f, search_.intern(f)});
    return build(occ);
  }

  std::size_t memo_size() const { return search_.memo_size(); }

 private:
  using S = Search<ExactDomain>;
  using Key = S::Key;

  // A formula occurrence of the two-sided sequent and its one-sided image.
  struct Occ {
    bool left;
    Formula f;
    std::uint32_t id;
  };

  static Sequent sequent_of(const std::vector<Occ>& occ) {
    std::vector<Formula> l, r;
    for (const auto& o : occ) (o.left ? l : r).push_back(o.f);
    return {Cedent(std::move(l)), Cedent(std::move(r))};
  }

  // Occurrence for a one-sided id, preferring the right-hand side.
  static std::size_t find(const std::vector<Occ>& occ, std::uint32_t id) {
    std::size_t hit = occ.size();
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i].id != id) continue;
      if (!occ[i].left) return i;
      if (hit == occ.size()) hit = i;
    }
    if (hit == occ.size()) throw std::logic_error("witness: principal formula not found");
    return hit;
  }

  // Split `rest` so the first part's images are exactly `part` (multiset).
  static std::pair<std::vector<Occ>, std::vector<Occ>> split(const std::vector<Occ>& rest, Key part) {
    std::vector<Occ> a, b;
    for (const auto& o : rest) {
      auto it = std::find(part.begin(), part.end(), o.id);
      if (it != part.end()) {
        part.erase(it);
        a.push_back(o);
      } else {
        b.push_back(o);
      }
    }
    return {a, b};
  }

  static std::vector<Occ> drop(const std::vector<Occ>& occ, std::size_t i) {
    std::vector<Occ> r = occ;
    r.erase(r.begin() + static_cast<long>(i));
    return r;
  }

  Occ occ_of(bool left, const Formula& f) {
    return {left, f, search_.intern(left ? negate(f) : f)};
  }

  static Cedent side(const std::vector<Occ>& occ, bool left) {
    std::vector<Formula> v;
    for (const auto& o : occ) if (o.left == left) v.push_back(o.f);
    return Cedent(std::move(v));
  }

  ProofPtr node(Rule r, Bindings b, std::vector<ProofPtr> kids) {
    return make_node(r, std::move(b), p_, std::move(kids), &search_.theory());
  }

  ProofPtr build(const std::vector<Occ>& occ) {
    Key k;
    for (const auto& o : occ) k.push_back(o.id);
    std::sort(k.begin(), k.end());
    const auto& e = search_.solve(k);
    Sequent here = sequent_of(occ);
    const auto& c = e.choice;
    switch (c.step) {
      case Step::None:
      case Step::EFQ: return node(Rule::EFQ, bind_ctx(here.lhs, here.rhs), {});
      case Step::EMP: return node(Rule::EMP, {}, {});
      case Step::TopR: {
        std::size_t i = find(occ, c.principal);
        auto rest = drop(occ, i);
        return node(occ[i].left ? Rule::BotL : Rule::TopR, bind_ctx(side(rest, true), side(rest, false)), {});
      }
      case Step::OneR: return node(occ[0].left ? Rule::OneL : Rule::OneR, {}, {});
      case Step::AtomR: {
        Bindings b;
        b.atom = search_.formula(c.principal).name();
        ProofPtr leaf = node(Rule::AtomR, b, {});
        if (!occ[0].left) return leaf;
        // a^ on the left: dualize ⊢ a.
        return node(Rule::DualL, bind_dual(Formula::atom(b.atom), {}, {}), {leaf});
      }
      case Step::AtomL: {
        Bindings b;
        b.atom = search_.formula(c.principal).name();
        ProofPtr leaf = node(Rule::AtomL, b, {});
        if (occ[0].left) return leaf;
        return node(Rule::DualR, bind_dual(Formula::atom(b.atom), {}, {}), {leaf});
      }
      case Step::AX: {
        const Occ& x = occ[0];
        const Occ& y = occ[1];
        if (x.left != y.left) return node(Rule::AX, bind_A(x.f), {});
        if (!x.left) {  // |- X^, X from X |- X
          return node(Rule::DualR, bind_dual(y.f, {}, Cedent{y.f}), {node(Rule::AX, bind_A(y.f), {})});
        }
        // X, X^ |- from X |- X
        return node(Rule::DualL, bind_dual(y.f, Cedent{y.f}, {}), {node(Rule::AX, bind_A(y.f), {})});
      }
      case Step::ParR: {
        std::size_t i = find(occ, c.principal);
        const Occ o = occ[i];
        auto rest = drop(occ, i);
        Formula a = o.f.left(), b = o.f.right();
        auto prem = rest;
        prem.push_back(occ_of(o.left, a));
        prem.push_back(occ_of(o.left, b));
        Rule r = o.left ? Rule::TensorL : Rule::ParR;
        return node(r, bind_AB(a, b, side(rest, true), side(rest, false)), {build(prem)});
      }
      case Step::TensorR: {
        std::size_t i = find(occ, c.principal);
        const Occ o = occ[i];
        auto rest = drop(occ, i);
        Formula a = o.f.left(), b = o.f.right();
        Key part = c.part1;
        part.erase(std::find(part.begin(), part.end(), search_.intern(o.left ? negate(a) : a)));
        auto [p1, p2] = split(rest, part);
        Bindings bd = bind_AB(a, b, side(p1, true), side(p1, false));
        bd.G2 = side(p2, true);
        bd.D2 = side(p2, false);
        p1.push_back(occ_of(o.left, a));
        p2.push_back(occ_of(o.left, b));
        Rule r = o.left ? Rule::ParL : Rule::TensorR;
        return node(r, std::move(bd), {build(p1), build(p2)});
      }
      case Step::PlorR:
      case Step::PlandR:
      case Step::PlorR1:
      case Step::PlorR2: {
        std::size_t i = find(occ, c.principal);
        const Occ o = occ[i];
        auto rest = drop(occ, i);
        Formula a = o.f.left(), b = o.f.right();
        Bindings bd = bind_AB(a, b, side(rest, true), side(rest, false));
        auto pa = rest, pb = rest;
        pa.push_back(occ_of(o.left, a));
        pb.push_back(occ_of(o.left, b));
        Rule r;
        switch (c.step) {
          case Step::PlorR: r = o.left ? Rule::PlandL : Rule::PlorR; break;
          case Step::PlandR: r = o.left ? Rule::PlorL : Rule::PlandR; break;
          case Step::PlorR1: r = o.left ? Rule::PlandL1 : Rule::PlorR1; break;
          default: r = o.left ? Rule::PlandL2 : Rule::PlorR2; break;
        }
        if (c.step == Step::PlorR1) return node(r, std::move(bd), {build(pa)});
        if (c.step == Step::PlorR2) return node(r, std::move(bd), {build(pb)});
        return node(r, std::move(bd), {build(pa), build(pb)});
      }
      case Step::MIX:
      case Step::MixStar: {
        auto [p1, p2] = split(occ, c.part1);
        Bindings bd = bind_split(side(p1, true), side(p1, false), side(p2, true), side(p2, false));
        return node(c.step == Step::MIX ? Rule::MIX : Rule::MixStar, std::move(bd), {build(p1), build(p2)});
      }
    }
    throw std::logic_error("witness: unknown step");
  }

  static Bindings bind_dual(Formula a, Cedent g, Cedent d) {
    Bindings b = bind_A(std::move(a));
    b.G = std::move(g);
    b.D = std::move(d);
    return b;
  }

  Hardness p_;
  S search_;
};

inline ProvabilityResult provability(const Sequent& s, const Hardness& p, const Theory& t = {},
                                     const ProverOptions& o = {}) {
  Prover pr(p, t, o);
  return pr.prove(s);
}

// Leaves are replaced by their provability.
inline Value structure_provability(const Structure& h, Prover& pr) {
  return evaluate(h, [&](const Sequent& s) { return pr.value(s); });
}

inline bool qualitative_provable(const Sequent& s, const Hardness& p, const Theory& t = {},
                                 const ProverOptions& o = {}) {
  Search<SignDomain> search(SignDomain{p}, t, o);
  auto k = search.key_of(one_sided(s).rhs);
  const auto& e = search.solve(k);
  return e.value && *e.value != Sign::Zero;
}

// Exhaustive search without memoization over the same rule set, for small
// sequents; an independent check on the memoized prover.
inline Value brute_force_provability(const Sequent& s, const Hardness& p, const Theory& t = {}) {
  std::function<Value(const std::vector<Formula>&)> go = [&](const std::vector<Formula>& c) -> Value {
    Value best = Value::zero(p);
    auto offer = [&](const Value& v) { if (lt(best, v)) best = v; };
    for (const auto& f : c) if (f.kind() == FKind::Top) return Value::infinity(p);
    if (c.empty()) offer(Value::one(p));
    if (c.size() == 1 && c[0].kind() == FKind::One) offer(Value::one(p));
    if (c.size() == 1 && c[0].kind() == FKind::Atom && t.has(c[0].name())) offer(t.value(c[0].name(), p));
    if (c.size() == 1 && c[0].kind() == FKind::NegAtom && t.has(c[0].name())) offer(dual(t.value(c[0].name(), p)));
    if (c.size() == 2 && c[0] == negate(c[1])) offer(Value::one(p));
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Formula& f = c[i];
      if (!f.is_binary()) continue;
      std::vector<Formula> rest;
      for (std::size_t j = 0; j < n; ++j) if (j != i) rest.push_back(c[j]);
      auto plus = [&](std::vector<Formula> v, const Formula& g) { v.push_back(g); return v; };
      switch (f.kind()) {
        case FKind::Par: offer(go(plus(plus(rest, f.left()), f.right()))); break;
        case FKind::Plor: offer(padd(go(plus(rest, f.left())), go(plus(rest, f.right())))); break;
        case FKind::Pland: offer(pcoadd(go(plus(rest, f.left())), go(plus(rest, f.right())))); break;
        case FKind::Tensor:
          for (std::size_t m = 0; m < (std::size_t{1} << rest.size()); ++m) {
            std::vector<Formula> a{f.left()}, b{f.right()};
            for (std::size_t j = 0; j < rest.size(); ++j) ((m >> j) & 1 ? a : b).push_back(rest[j]);
            offer(tensor(go(a), go(b)));
          }
          break;
        default: break;
      }
    }
    for (std::size_t m = 1; n >= 2 && m + 1 < (std::size_t{1} << n); ++m) {
      std::vector<Formula> a, b;
      for (std::size_t j = 0; j < n; ++j) ((m >> j) & 1 ? a : b).push_back(c[j]);
      Value x = go(a), y = go(b);
      offer(tensor(x, y));
      if (t.mix_star) offer(cotensor(x, y));
    }
    return best;
  };
  return go(one_sided(s).rhs.items());
}

}  // namespace qll
