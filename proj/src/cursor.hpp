#pragma once

#include "treehopf/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace treehopf::detail {

// Shared scanning state for the hand-written recursive-descent parsers.
class Cursor {
public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), pos_(offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  std::string_view text() const { return text_; }
  void advance(std::size_t k = 1) { pos_ += k; }
  void reset(std::size_t pos) { pos_ = pos; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
  std::string_view text_;
  std::size_t pos_;
};

} // namespace treehopf::detail
