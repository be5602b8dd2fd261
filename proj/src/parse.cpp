#include "dyadic/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace dyadic {

namespace {

class Parser {
 public:
  Parser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  Elem parse() {
    Elem x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("element '" + std::string(s_) + "': " + msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Elem expr() {
    Elem x = term();
    while (true) {
      if (eat('+')) {
        x = x + term();
      } else if (eat('-')) {
        x = x - term();
      } else {
        return x;
      }
    }
  }

  Elem term() {
    Elem x = unary();
    while (true) {
      if (eat('*')) {
        x = x * unary();
      } else if (eat('/')) {
        Elem y = unary();
        if (y.is_zero()) throw DomainError("division by zero in '" + std::string(s_) + "'");
        x = x / y;
      } else {
        return x;
      }
    }
  }

  Elem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Elem power() {
    Elem x = primary();
    if (eat('^')) {
      bool paren = eat('(');
      long k = signed_integer();
      if (paren) expect(')');
      if (x.is_zero() && k <= 0) throw DomainError("zero to a non-positive power");
      x = x.pow(k);
    }
    return x;
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int dgt = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - dgt) / 10) fail("integer literal too large");
      v = v * 10 + dgt;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::int64_t signed_integer() {
    bool neg = eat('-');
    if (!neg) eat('+');
    std::int64_t v = integer();
    return neg ? -v : v;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Elem primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem x = expr();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return f_.from_int(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = ident();
      if (id == "pi") return f_.pi();
      if (id == "Delta" || id == "delta") return f_.delta();
      if (id == "rho") return f_.rho();
      if (id == "sqrt") {
        bool paren = eat('(');
        std::int64_t num = signed_integer();
        std::int64_t den = 1;
        if (paren && eat('/')) den = integer();
        if (paren) expect(')');
        if (den == 0) throw DomainError("zero denominator in sqrt");
        return f_.sqrt_rational(num, den);
      }
      fail("unknown name '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem parse_elem(const Field& field, std::string_view text) { return Parser(field, text).parse(); }

std::vector<Elem> parse_elem_list(const Field& field, std::string_view text) {
  std::vector<Elem> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view piece = text.substr(start, i - start);
      bool blank = true;
      for (char ch : piece)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (blank) {
        if (i == text.size() && out.empty() && start == 0) return out;
        throw ParseError("empty entry in list '" + std::string(text) + "'");
      }
      out.push_back(parse_elem(field, piece));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  return out;
}

}  // namespace dyadic
