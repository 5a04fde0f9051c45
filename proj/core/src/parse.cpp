#include <cctype>
#include <stdexcept>
#include <string>

#include "cherednik/poly.hpp"

namespace cherednik {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  std::uint64_t integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }
  /// Extracts the text up to the parenthesis matching an already-consumed '('.
  std::string_view balanced() {
    std::size_t depth = 1, start = pos_;
    while (pos_ < text_.size()) {
      char ch = text_[pos_++];
      if (ch == '(') ++depth;
      if (ch == ')' && --depth == 0) return text_.substr(start, pos_ - 1 - start);
    }
    fail("unbalanced parenthesis");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial parse_monomial(Cursor& cur, std::size_t slots) {
  Monomial m(slots);
  do {
    if (!cur.accept('x')) cur.fail("expected variable x<i>");
    std::uint64_t index = cur.integer();
    if (index == 0 || index > slots)
      cur.fail("variable index x" + std::to_string(index) + " outside 1.." + std::to_string(slots));
    std::uint64_t e = 1;
    if (cur.accept('^')) e = cur.integer();
    m.set(index - 1, static_cast<unsigned>(m[index - 1] + e));
  } while (cur.peek() == '*' && cur.accept('*'));
  return m;
}

}  // namespace

UPoly parse_c_polynomial(std::string_view text, std::uint32_t p) {
  Cursor cur(text);
  UPoly acc(p);
  if (cur.at_end()) cur.fail("empty coefficient");
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    std::uint64_t coeff = 1;
    unsigned degree = 0;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.integer();
      have_number = true;
      if (cur.peek() == '*') {
        cur.accept('*');
        if (cur.peek() != 'c') cur.fail("expected 'c'");
      }
    }
    if (cur.accept('c')) {
      degree = 1;
      if (cur.accept('^')) degree = static_cast<unsigned>(cur.integer());
    } else if (!have_number) {
      cur.fail("expected integer or 'c'");
    }
    UPoly term = UPoly::monomial(p, modp::reduce(static_cast<std::int64_t>(coeff % p), p), degree);
    acc = negative ? acc - term : acc + term;
  }
  return acc;
}

std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t slots, std::uint32_t p) {
  Cursor cur(text);
  std::vector<ParsedTerm> out;
  if (cur.at_end()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    ParsedTerm term{UPoly::constant(p, 1), UPoly::constant(p, 1), Monomial(slots)};
    bool have_coeff = false;
    const char next = cur.peek();
    if (next == '(') {
      cur.accept('(');
      term.num = parse_c_polynomial(cur.balanced(), p);
      if (cur.accept('/')) {
        cur.expect('(');
        term.den = parse_c_polynomial(cur.balanced(), p);
        if (term.den.is_zero()) cur.fail("zero denominator");
      }
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(next))) {
      term.num = UPoly::constant(p, modp::reduce(static_cast<std::int64_t>(cur.integer() % p), p));
      have_coeff = true;
    }
    if (have_coeff) {
      if (cur.accept('*')) term.monomial = parse_monomial(cur, slots);
    } else {
      term.monomial = parse_monomial(cur, slots);
    }
    if (negative) term.num = -term.num;
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace cherednik
