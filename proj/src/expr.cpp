#include "galoiskit/expr.hpp"

#include <cctype>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

namespace {

constexpr unsigned long kMaxExponent = 10000;

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& symbols) : s_(text), symbols_(symbols) {}

  NodePtr parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression, expected a number, symbol or '('");
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "', expected an operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  static NodePtr make(Node::Kind k, std::size_t column, NodePtr l = {}, NodePtr r = {}) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->column = column;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const auto kind = s_[pos_] == '+' ? Node::Kind::Add : Node::Kind::Sub;
        const std::size_t col = ++pos_;
        left = make(kind, col, left, term());
      } else {
        return left;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  NodePtr term() {
    NodePtr left = unary();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        const auto kind = s_[pos_] == '*' ? Node::Kind::Mul : Node::Kind::Div;
        const std::size_t col = ++pos_;
        left = make(kind, col, left, unary());
      } else if (starts_factor()) {
        left = make(Node::Kind::Mul, pos_ + 1, left, power());
      } else {
        return left;
      }
    }
  }

  NodePtr unary() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      const bool neg = s_[pos_] == '-';
      const std::size_t col = ++pos_;
      NodePtr operand = unary();
      return neg ? make(Node::Kind::Neg, col, operand) : operand;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!peek('^')) return base;
    const std::size_t col = ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent " + digits + " is too large");
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->column = col;
    n->exponent = std::stoul(digits);
    n->left = base;
    return n;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input, expected a number, symbol or '('");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol();
    fail(std::string("unexpected '") + c + "', expected a number, symbol or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    std::string digits;
    std::size_t decimals = 0;
    bool point = false;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (point) ++decimals;
      } else if (c == '.' && !point) {
        point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    Integer den = 1;
    for (std::size_t i = 0; i < decimals; ++i) den *= 10;
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->column = start + 1;
    n->value = Rational(Integer(digits), den);
    n->value.canonicalize();
    return n;
  }

  NodePtr symbol() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Symbol;
        n->column = start + 1;
        n->symbol = i;
        return n;
      }
    pos_ = start;
    fail("unknown symbol " + name);
  }

  const std::string& s_;
  const std::vector<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text, const std::vector<std::string>& symbols) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text, symbols).parse();
  return e;
}

QPoly parse_poly(const std::string& text) {
  const Expression e = Expression::parse(text, {"x"});
  return e.evaluate<QPoly>([](std::size_t) { return QPoly::x(Rational(1)); },
                           [](const Rational& c) { return QPoly::constant(c); },
                           [](const QPoly& a, const QPoly& b, std::size_t column) {
                             if (b.is_zero()) throw ParseError("division by zero", column);
                             if (b.degree() > 0) throw ParseError("division by a non-constant polynomial", column);
                             return a * (Rational(1) / b[0]);
                           });
}

std::vector<std::string> radical_symbols(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("r" + std::to_string(i));
  return v;
}

}  // namespace galoiskit
