#pragma once

// Theories: atom valuations plus the MIX* switch.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qll/alethic.hpp"
#include "qll/reader.hpp"

namespace qll {

// A real value in [0, inf]; nullopt is inf.
using RealValue = std::optional<Rational>;

inline Value at_hardness(const RealValue& r, const Hardness& p) {
  return r ? Value::from_real(*r, p) : Value::infinity(p);
}

inline RealValue parse_real(std::string_view text, std::size_t base = 0) {
  if (text == "inf") return std::nullopt;
  return parse_rational(text, base);
}

struct Theory {
  std::map<std::string, RealValue> atoms;
  bool mix_star = false;

  bool has(const std::string& a) const { return atoms.count(a) != 0; }
  Value value(const std::string& a, const Hardness& p) const { return at_hardness(atoms.at(a), p); }
};

// Lines `atom <name> = <rational|inf>` and `mix_star = true|false`.
inline Theory parse_theory(std::string_view text) {
  Theory t;
  Reader r(text);
  while (!r.at_end()) {
    std::size_t at = r.pos();
    std::string key(r.word());
    if (key == "atom") {
      std::string name(r.word());
      if (name.empty()) r.fail("expected atom name");
      r.expect("=");
      std::size_t vat = (r.skip(), r.pos());
      t.atoms[name] = parse_real(r.word(), vat);
    } else if (key == "mix_star") {
      r.expect("=");
      std::string b(r.word());
      if (b != "true" && b != "false") r.fail("expected true or false");
      t.mix_star = b == "true";
    } else {
      throw ParseError("unknown theory entry '" + key + "'", at);
    }
  }
  return t;
}

}  // namespace qll
