#include "sst/word.hpp"

#include <cctype>
#include <cstdlib>

#include "sst/errors.hpp"

namespace sst {

namespace {

void append(ElementWord& out, const WordLetter& letter) {
  if (letter.exponent == 0) return;
  if (!out.empty() && out.back().label == letter.label) {
    out.back().exponent += letter.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(letter);
}

void append(ElementWord& out, const ElementWord& word) {
  for (const auto& l : word) append(out, l);
}

ElementWord power(const ElementWord& word, long long k) {
  ElementWord out;
  const ElementWord base = k < 0 ? inverse(word) : word;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) append(out, base);
  return out;
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ElementWord parse_top() {
    ElementWord lhs = parse_product();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      ElementWord rhs = parse_product();
      append(lhs, inverse(rhs));
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return lhs;
  }

 private:
  ElementWord parse_product() {
    ElementWord out;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (is_label_start(c) || c == '(' || c == '[') {
        append(out, parse_factor());
        continue;
      }
      if (c == '1' && !out.empty()) fail("identity symbol inside a product");
      if (c == '1') {
        ++pos_;
        skip_ws();
        if (is_label_start(peek()) || peek() == '(' || peek() == '[')
          fail("identity symbol inside a product");
        continue;
      }
      return out;
    }
  }

  ElementWord parse_factor() {
    ElementWord base = parse_atom();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      if (is_label_start(peek())) {
        // conjugation: a^t = t^-1 a t
        const std::string t = parse_label();
        ElementWord conj;
        append(conj, WordLetter{t, -1});
        append(conj, base);
        append(conj, WordLetter{t, 1});
        base = std::move(conj);
      } else {
        base = power(base, parse_int());
      }
    }
    return base;
  }

  ElementWord parse_atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ElementWord inner = parse_product();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      ElementWord a = parse_product();
      expect(',');
      ElementWord b = parse_product();
      expect(']');
      // [a,b] = a^-1 b^-1 a b
      ElementWord out;
      append(out, inverse(a));
      append(out, inverse(b));
      append(out, a);
      append(out, b);
      return out;
    }
    return ElementWord{WordLetter{parse_label(), 1}};
  }

  std::string parse_label() {
    if (!is_label_start(peek())) fail("expected a generator label");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word \"" + std::string(text_) + "\" at column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ElementWord parse_word(std::string_view text) { return Parser(text).parse_top(); }

ElementWord inverse(const ElementWord& word) {
  ElementWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    append(out, WordLetter{it->label, -it->exponent});
  return out;
}

std::string to_string(const ElementWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += l.label;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace sst
