#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "beliefkit/formula.hpp"

namespace beliefkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Grammar, loosest binding first:
//
//   iff  := imp ("<->" imp)*            left associative
//   imp  := or ("->" imp)?              right associative
//   or   := and ("|" and)*
//   and  := unary ("&" unary)*
//   unary:= "!" unary | "(" iff ")" | "true" | "false" | atom
//
// `a -> b` is stored as `!a | b` and `a <-> b` as `(!a | b) & (!b | a)`;
// the Formula type itself never holds either connective.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty input");
    Formula f = iff();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return f;
  }

 private:
  Formula iff() {
    Formula f = imp();
    while (eat("<->")) {
      Formula r = imp();
      f = (((!f) | r) & ((!r) | f));
    }
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (eat("->")) {
      Formula r = imp();
      return (!f) | r;
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (true) {
      skip_ws();
      // Don't confuse "|" with nothing else; no "||" token exists, a second
      // bar is simply the next disjunction.
      if (!eat("|")) return f;
      f = f | conj();
    }
  }

  Formula conj() {
    Formula f = unary();
    while (eat("&")) f = f & unary();
    return f;
  }

  Formula unary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return !unary();
    }
    if (c == '(') {
      ++pos_;
      Formula f = iff();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError(pos_, "expected ')'");
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return Formula::constant(true);
      if (word == "false") return Formula::constant(false);
      return Formula::variable(std::move(word));
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    // "<->" must not be half-eaten by "->": the only ambiguity is "-",
    // which starts no other token, so a plain prefix match is enough.
    pos_ += tok.size();
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::Parser(text).run();
}

}  // namespace beliefkit
