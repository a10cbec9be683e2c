#include "koszul/expression.hpp"

#include "koszul/error.hpp"

#include <cctype>

namespace koszul {

namespace {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  // expr := ['+'|'-'] term { ('+'|'-') term }
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Polynomial acc = term();
    if (negate) acc = ring_.neg(acc);
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = ring_.add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = ring_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  // term := factor { ['*'] factor }; juxtaposition is not accepted
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = ring_.mul(acc, factor());
    }
  }

  // factor := primary [ '^' integer ]
  Polynomial factor() {
    Polynomial base = primary();
    skip_space();
    if (peek('^')) {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      std::uint64_t e = integer();
      if (e > 65535) fail("exponent too large");
      base = ring_.pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Polynomial inner = factor();
      return c == '-' ? ring_.neg(inner) : inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // reduce digit by digit so arbitrarily long literals are fine
      const auto& F = ring_.field();
      Coeff v = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = F.add(F.mul(v, 10 % F.characteristic()), F.from_int(text_[pos_] - '0'));
        ++pos_;
      }
      return ring_.monomial(Monomial(ring_.nvars()), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_.variable_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.variable(static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial canonical_poly(std::string_view text, const PolyRing& ring) {
  return ExpressionParser(text, ring).parse();
}

}  // namespace koszul
