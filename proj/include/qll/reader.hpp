#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "qll/error.hpp"

namespace qll {

// Cursor over a text buffer shared by every parser. `;` starts a line comment.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) { ++pos_; continue; }
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
  }
  bool at_end() { skip(); return pos_ >= text_.size(); }
  char peek() { skip(); return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool starts_with(std::string_view s) { skip(); return text_.substr(pos_).starts_with(s); }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  // Maximal run of characters satisfying `ok`, possibly empty.
  template <class Pred>
  std::string_view take(Pred ok) {
    skip();
    std::size_t s = pos_;
    while (pos_ < text_.size() && ok(text_[pos_])) ++pos_;
    return text_.substr(s, pos_ - s);
  }
  std::string_view word() {
    return take([](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '/';
    });
  }
  void restore(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace qll
