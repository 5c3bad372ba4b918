#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "galoiskit/errors.hpp"
#include "galoiskit/polynomial.hpp"
#include "galoiskit/scalar.hpp"

namespace galoiskit {

/// Parsed arithmetic expression over Q in a fixed list of symbols.
///
/// Grammar: integers and decimals, symbols, `+ - * / ^`, parentheses,
/// implicit multiplication before a symbol or parenthesis ("2x", "3(x+1)").
/// Exponents are non-negative integer literals.
class Expression {
 public:
  struct Node {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Rational value;       // Number
    std::size_t symbol;   // Symbol
    unsigned long exponent = 0;
    std::size_t column;   // 1-based position of the token, for errors
    std::shared_ptr<const Node> left, right;
  };

  static Expression parse(const std::string& text, const std::vector<std::string>& symbols);

  const std::string& text() const noexcept { return text_; }
  const Node& root() const { return *root_; }

  /// Evaluates with `value(i)` for symbol i. `divide(a, b, column)` performs
  /// division and reports invalid divisors.
  template <class T, class Value, class Constant, class Divide>
  T evaluate(Value&& value, Constant&& constant, Divide&& divide) const {
    return eval<T>(*root_, value, constant, divide);
  }

 private:
  template <class T, class Value, class Constant, class Divide>
  static T eval(const Node& n, Value& value, Constant& constant, Divide& divide) {
    switch (n.kind) {
      case Node::Kind::Number:
        return constant(n.value);
      case Node::Kind::Symbol:
        return value(n.symbol);
      case Node::Kind::Neg:
        return constant(Rational(0)) - eval<T>(*n.left, value, constant, divide);
      case Node::Kind::Add:
        return eval<T>(*n.left, value, constant, divide) + eval<T>(*n.right, value, constant, divide);
      case Node::Kind::Sub:
        return eval<T>(*n.left, value, constant, divide) - eval<T>(*n.right, value, constant, divide);
      case Node::Kind::Mul:
        return eval<T>(*n.left, value, constant, divide) * eval<T>(*n.right, value, constant, divide);
      case Node::Kind::Div:
        return divide(eval<T>(*n.left, value, constant, divide), eval<T>(*n.right, value, constant, divide),
                      n.column);
      case Node::Kind::Pow: {
        const T base = eval<T>(*n.left, value, constant, divide);
        return power(base, n.exponent, constant(Rational(1)));
      }
    }
    throw Error("unreachable expression node");
  }

  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// Polynomial in x with rational coefficients. Division is allowed only by
/// nonzero constants.
QPoly parse_poly(const std::string& text);

/// Names r1 .. rn used for earlier radicals in radicand expressions.
std::vector<std::string> radical_symbols(std::size_t n);

}  // namespace galoiskit
