#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

namespace qsc::detail {

/// Character cursor shared by the textual parsers. Errors carry the byte
/// offset of the offending input.
class Cursor {
 public:
  /// `base` is added to reported positions when `text` is a slice of a
  /// larger input.
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  bool at_end() { skip_ws(); return pos_ >= text_.size(); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  /// Next non-blank character, or '\0' at end of input.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  /// Character at the cursor without skipping blanks.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  BigInt natural() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  long small_natural() {
    const std::size_t start = pos_;
    const BigInt v = natural();
    if (v > 1000000) {
      pos_ = start;
      fail("number too large");
    }
    return v.get_si();
  }

  long signed_integer() {
    const bool negative = consume('-');
    if (!negative) consume('+');
    const long v = small_natural();
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string near = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::Parse,
                what + " at position " + std::to_string(base_ + pos_) + " (found " + near + ")",
                base_ + pos_);
  }

  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t base_ = 0;
  std::size_t pos_ = 0;
};

/// parse_poly on a slice starting at byte `base` of the full input.
Poly parse_poly_slice(std::string_view text, const std::vector<std::string>& variables,
                      std::size_t base);

}  // namespace qsc::detail
