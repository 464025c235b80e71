#pragma once

// Exact alethic values: elements of [0, inf] under a hardness p in (0, inf].
//
// A finite positive value v is stored by its power coordinate v^p (or v itself
// when p = inf). Every connective is then a rational operation on coordinates.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "qll/error.hpp"

namespace qll {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

// Nonnegative literal `n` or `n/m`. Throws ParseError with offsets relative to `text`.
inline Rational parse_rational(std::string_view text, std::size_t base = 0) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == start) throw ParseError("expected digits", base + start);
    return j;
  };
  std::size_t e = digits(i);
  Integer num(std::string(text.substr(0, e)));
  Integer den = 1;
  if (e < text.size() && text[e] == '/') {
    std::size_t f = digits(e + 1);
    den = Integer(std::string(text.substr(e + 1, f - e - 1)));
    if (den == 0) throw ParseError("zero denominator", base + e + 1);
    e = f;
  }
  if (e != text.size()) throw ParseError("unexpected character in rational", base + e);
  return Rational(num, den);
}

// Largest r with r^k <= x, for x >= 0.
inline Integer integer_root(const Integer& x, unsigned k) {
  if (x < 2 || k == 1) return x;
  unsigned bits = boost::multiprecision::msb(x) / k + 1;
  Integer lo = 0, hi = Integer(1) << (bits + 1);
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

class Hardness {
 public:
  Hardness() : inf_(false), q_(1) {}
  explicit Hardness(Rational q) : inf_(false), q_(std::move(q)) {
    if (q_ <= 0) throw std::domain_error("hardness must be positive");
  }
  static Hardness infinity() { Hardness h; h.inf_ = true; h.q_ = 0; return h; }
  static Hardness parse(std::string_view text) {
    if (text == "inf") return infinity();
    Rational q = parse_rational(text);
    if (q == 0) throw ParseError("hardness must be positive", 0);
    return Hardness(q);
  }

  bool is_infinite() const { return inf_; }
  const Rational& exponent() const { return q_; }
  double to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : q_.convert_to<double>();
  }
  std::string str() const { return inf_ ? "inf" : to_string(q_); }

  friend bool operator==(const Hardness& a, const Hardness& b) {
    return a.inf_ == b.inf_ && a.q_ == b.q_;
  }

 private:
  bool inf_;
  Rational q_;
};

inline std::ostream& operator<<(std::ostream& os, const Hardness& h) { return os << h.str(); }

class Value {
 public:
  enum class Kind : std::uint8_t { Zero, Finite, Infinite };

  Value() = default;
  static Value zero(Hardness p) { return Value(std::move(p), Kind::Zero, 0); }
  static Value infinity(Hardness p) { return Value(std::move(p), Kind::Infinite, 0); }
  static Value one(Hardness p) { return Value(std::move(p), Kind::Finite, 1); }

  // Build from the stored coordinate directly (v^p, or v at p = inf).
  static Value from_power(const Rational& c, Hardness p) {
    if (c < 0) throw std::domain_error("negative coordinate");
    if (c == 0) return zero(std::move(p));
    return Value(std::move(p), Kind::Finite, c);
  }

  // Build from a real value r; requires r^p to be rational.
  static Value from_real(const Rational& r, Hardness p) {
    if (r < 0) throw std::domain_error("negative value");
    if (r == 0) return zero(std::move(p));
    if (p.is_infinite()) return Value(std::move(p), Kind::Finite, r);
    const Rational& e = p.exponent();
    unsigned n = boost::multiprecision::numerator(e).convert_to<unsigned>();
    unsigned m = boost::multiprecision::denominator(e).convert_to<unsigned>();
    Integer a = boost::multiprecision::pow(boost::multiprecision::numerator(r), n);
    Integer b = boost::multiprecision::pow(boost::multiprecision::denominator(r), n);
    Integer ra = integer_root(a, m), rb = integer_root(b, m);
    if (boost::multiprecision::pow(ra, m) != a || boost::multiprecision::pow(rb, m) != b)
      throw NotRepresentable(to_string(r) + "^" + p.str() + " is irrational");
    return Value(std::move(p), Kind::Finite, Rational(ra, rb));
  }

  // `n`, `n/m` or `inf`, read as a real value; `pc:<rational>` gives the
  // coordinate directly.
  static Value parse(std::string_view text, const Hardness& p, std::size_t base = 0) {
    if (text == "inf") return infinity(p);
    if (text.starts_with("pc:")) return from_power(parse_rational(text.substr(3), base + 3), p);
    try {
      return from_real(parse_rational(text, base), p);
    } catch (const NotRepresentable& e) {
      throw ParseError(e.what(), base);
    }
  }

  const Hardness& hardness() const { return p_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_finite_positive() const { return kind_ == Kind::Finite; }
  // Meaningful only for finite positive values.
  const Rational& coordinate() const { return c_; }

  double to_float() const {
    switch (kind_) {
      case Kind::Zero: return 0.0;
      case Kind::Infinite: return std::numeric_limits<double>::infinity();
      default: break;
    }
    if (p_.is_infinite()) return c_.convert_to<double>();
    using F = boost::multiprecision::cpp_bin_float_50;
    F num(boost::multiprecision::numerator(c_)), den(boost::multiprecision::denominator(c_));
    F e = F(boost::multiprecision::denominator(p_.exponent())) /
          F(boost::multiprecision::numerator(p_.exponent()));
    return boost::multiprecision::pow(num / den, e).convert_to<double>();
  }

  // Exact real value when it is rational.
  std::optional<Rational> real() const {
    if (is_zero()) return Rational(0);
    if (is_infinite()) return std::nullopt;
    if (p_.is_infinite()) return c_;
    unsigned n = boost::multiprecision::numerator(p_.exponent()).convert_to<unsigned>();
    unsigned m = boost::multiprecision::denominator(p_.exponent()).convert_to<unsigned>();
    Integer a = boost::multiprecision::pow(boost::multiprecision::numerator(c_), m);
    Integer b = boost::multiprecision::pow(boost::multiprecision::denominator(c_), m);
    Integer ra = integer_root(a, n), rb = integer_root(b, n);
    if (boost::multiprecision::pow(ra, n) != a || boost::multiprecision::pow(rb, n) != b) return std::nullopt;
    return Rational(ra, rb);
  }

  // Text accepted by parse(): the real value when rational, else `pc:` form.
  std::string literal() const {
    if (is_infinite()) return "inf";
    if (auto r = real()) return to_string(*r);
    return "pc:" + to_string(c_);
  }

  // Coordinate text: `0`, `inf`, or the rational coordinate.
  std::string str() const {
    switch (kind_) {
      case Kind::Zero: return "0";
      case Kind::Infinite: return "inf";
      default: return to_string(c_);
    }
  }

  // Coordinate plus a decimal. The `@p=` suffix appears unless the coordinate
  // already is the value (p = 1 or p = inf).
  std::string display() const {
    std::string s = str();
    bool plain = p_.is_infinite() || p_.exponent() == 1;
    if (!plain && is_finite_positive()) s += "@p=" + p_.str();
    if (is_finite_positive()) {
      std::ostringstream os;
      os.precision(6);
      os << to_float();
      s += " (" + os.str() + ")";
    }
    return s;
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.p_ == b.p_ && a.kind_ == b.kind_ && a.c_ == b.c_;
  }

 private:
  Value(Hardness p, Kind k, Rational c) : p_(std::move(p)), kind_(k), c_(std::move(c)) {}

  Hardness p_;
  Kind kind_ = Kind::Zero;
  Rational c_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

namespace detail {
inline const Hardness& same(const Value& a, const Value& b) {
  if (!(a.hardness() == b.hardness())) throw HardnessMismatch();
  return a.hardness();
}
}  // namespace detail

inline int compare(const Value& a, const Value& b) {
  detail::same(a, b);
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (!a.is_finite_positive()) return 0;
  return a.coordinate() < b.coordinate() ? -1 : (a.coordinate() == b.coordinate() ? 0 : 1);
}
inline bool leq(const Value& a, const Value& b) { return compare(a, b) <= 0; }
inline bool lt(const Value& a, const Value& b) { return compare(a, b) < 0; }
inline const Value& vmax(const Value& a, const Value& b) { return leq(a, b) ? b : a; }
inline const Value& vmin(const Value& a, const Value& b) { return leq(a, b) ? a : b; }

// a (x) b; zero absorbs, so 0 (x) inf = 0.
inline Value tensor(const Value& a, const Value& b) {
  const Hardness& p = detail::same(a, b);
  if (a.is_zero() || b.is_zero()) return Value::zero(p);
  if (a.is_infinite() || b.is_infinite()) return Value::infinity(p);
  return Value::from_power(a.coordinate() * b.coordinate(), p);
}

// a (x)* b; infinity absorbs, so 0 (x)* inf = inf.
inline Value cotensor(const Value& a, const Value& b) {
  const Hardness& p = detail::same(a, b);
  if (a.is_infinite() || b.is_infinite()) return Value::infinity(p);
  if (a.is_zero() || b.is_zero()) return Value::zero(p);
  return Value::from_power(a.coordinate() * b.coordinate(), p);
}

inline Value dual(const Value& a) {
  if (a.is_zero()) return Value::infinity(a.hardness());
  if (a.is_infinite()) return Value::zero(a.hardness());
  return Value::from_power(1 / a.coordinate(), a.hardness());
}

// p-sum: (a^p + b^p)^(1/p); max at p = inf.
inline Value padd(const Value& a, const Value& b) {
  const Hardness& p = detail::same(a, b);
  if (p.is_infinite()) return vmax(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_infinite() || b.is_infinite()) return Value::infinity(p);
  return Value::from_power(a.coordinate() + b.coordinate(), p);
}

// Harmonic p-sum: (a^-p + b^-p)^(-1/p); min at p = inf. Unit inf, absorber 0.
inline Value pcoadd(const Value& a, const Value& b) {
  const Hardness& p = detail::same(a, b);
  if (p.is_infinite()) return vmin(a, b);
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_zero() || b.is_zero()) return Value::zero(p);
  const Rational& x = a.coordinate();
  const Rational& y = b.coordinate();
  return Value::from_power(x * y / (x + y), p);
}

// a -o b = a* (x)* b.
inline Value residual(const Value& a, const Value& b) { return cotensor(dual(a), b); }

inline bool qualitative_additive(const Value& a) { return !a.is_zero(); }
inline bool qualitative_multiplicative(const Value& a) { return leq(Value::one(a.hardness()), a); }

}  // namespace qll
