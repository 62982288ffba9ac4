#include <cctype>
#include <charconv>
#include <limits>

#include "fbvp/expr.hpp"

namespace fbvp::expr {

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression parse_all() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    Expression e = parse_expr();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == src_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expression::binary(Op::add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expression::binary(Op::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_term() {
    Expression lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expression::binary(Op::mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expression::binary(Op::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_unary() {
    if (accept('-')) return Expression::unary(Op::neg, parse_unary());
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_atom();
    while (accept('^')) base = Expression::power(base, parse_exponent());
    return base;
  }

  int parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ == src_.size()) throw ParseError("missing exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError("exponent must be a non-negative integer literal", start);
    }
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E')) {
      throw ParseError("exponent must be a non-negative integer literal", start);
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, n);
    if (ec != std::errc()) throw ParseError("exponent out of range", start);
    return n;
  }

  Expression parse_atom() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "x") return Expression::variable(Var::x);
      if (name == "y") return Expression::variable(Var::y);
      Op fn;
      if (name == "sin") {
        fn = Op::sin;
      } else if (name == "cos") {
        fn = Op::cos;
      } else if (name == "exp") {
        fn = Op::exp;
      } else if (name == "step") {
        fn = Op::step;
      } else {
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      }
      expect('(');
      Expression arg = parse_expr();
      expect(')');
      return Expression::unary(fn, arg);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expression parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) throw ParseError("malformed number", start);
    return Expression::number(value);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view src) { return Parser(src).parse_all(); }

}  // namespace fbvp::expr
