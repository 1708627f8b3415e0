#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lehmer/errors.hpp"

namespace lehmer {

/// Closed-form constant expressions: integer/rational/decimal literals, pi,
/// log/sqrt/atan/acot, the four arithmetic operators, unary minus and
/// integer powers. This is the language the identity registry uses for
/// right-hand sides.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-')? atom ('^' integer)?
///   atom   := number | 'pi' | func '(' expr ')' | '(' expr ')'
///   func   := 'log' | 'sqrt' | 'atan' | 'acot'
///   number := integer | integer '/' integer | decimal
///
/// Precedence: unary minus > power > mul/div > add/sub. A rational literal
/// is a single lexeme (no spaces around '/', not followed by '^'); anything
/// else with '/' is ordinary division.
class ConstExpr {
 public:
  enum class Kind { Integer, Rational, Decimal, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };
  enum class Func { Log, Sqrt, Atan, Acot };

  struct Node {
    Kind kind = Kind::Integer;
    long long int_value = 0;         // Integer
    long long num = 0, den = 1;      // Rational
    double dec_value = 0.0;          // Decimal
    std::string spelling;            // Decimal (original text)
    Func func = Func::Log;           // Call
    int exponent = 0;                // Pow
    std::shared_ptr<const Node> a, b;
  };

  ConstExpr() = default;
  explicit ConstExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  bool valid() const { return root_ != nullptr; }
  const Node& root() const { return *root_; }

  double evaluate() const { return eval_node(*root_); }
  std::string str() const { return print_node(*root_); }

  friend bool operator==(const ConstExpr& x, const ConstExpr& y) {
    return equal_nodes(x.root_.get(), y.root_.get());
  }

 private:
  std::shared_ptr<const Node> root_;

  static double eval_node(const Node& n) {
    switch (n.kind) {
      case Kind::Integer: return static_cast<double>(n.int_value);
      case Kind::Rational: return static_cast<double>(n.num) / static_cast<double>(n.den);
      case Kind::Decimal: return n.dec_value;
      case Kind::Pi: return std::numbers::pi;
      case Kind::Neg: return -eval_node(*n.a);
      case Kind::Add: return eval_node(*n.a) + eval_node(*n.b);
      case Kind::Sub: return eval_node(*n.a) - eval_node(*n.b);
      case Kind::Mul: return eval_node(*n.a) * eval_node(*n.b);
      case Kind::Div: {
        const double d = eval_node(*n.b);
        if (d == 0.0) throw domain_error("constant expression: division by zero");
        return eval_node(*n.a) / d;
      }
      case Kind::Pow: {
        const double base = eval_node(*n.a);
        if (base == 0.0 && n.exponent < 0)
          throw domain_error("constant expression: zero raised to a negative power");
        double r = 1.0;
        const double b = n.exponent < 0 ? 1.0 / base : base;
        for (int i = 0; i < std::abs(n.exponent); ++i) r *= b;
        return r;
      }
      case Kind::Call: {
        const double x = eval_node(*n.a);
        switch (n.func) {
          case Func::Log:
            if (x <= 0.0) throw domain_error("constant expression: log of non-positive value");
            return std::log(x);
          case Func::Sqrt:
            if (x < 0.0) throw domain_error("constant expression: sqrt of negative value");
            return std::sqrt(x);
          case Func::Atan: return std::atan(x);
          case Func::Acot:
            // restricted to positive arguments, as used in the source identities
            if (x <= 0.0) throw domain_error("constant expression: acot of non-positive value");
            return std::atan(1.0 / x);
        }
        throw error("constant expression: unreachable function");
      }
    }
    throw error("constant expression: unreachable kind");
  }

  static std::string func_name(Func f) {
    switch (f) {
      case Func::Log: return "log";
      case Func::Sqrt: return "sqrt";
      case Func::Atan: return "atan";
      case Func::Acot: return "acot";
    }
    return "?";
  }

  // Canonical serialization; compound nodes are parenthesized so the output
  // reparses to the identical tree.
  static std::string print_node(const Node& n) {
    switch (n.kind) {
      case Kind::Integer: return std::to_string(n.int_value);
      case Kind::Rational: return std::to_string(n.num) + "/" + std::to_string(n.den);
      case Kind::Decimal: return n.spelling;
      case Kind::Pi: return "pi";
      case Kind::Neg: return "(-" + print_node(*n.a) + ")";
      case Kind::Add: return "(" + print_node(*n.a) + " + " + print_node(*n.b) + ")";
      case Kind::Sub: return "(" + print_node(*n.a) + " - " + print_node(*n.b) + ")";
      case Kind::Mul: return "(" + print_node(*n.a) + " * " + print_node(*n.b) + ")";
      case Kind::Div: return "(" + print_node(*n.a) + " / " + print_node(*n.b) + ")";
      case Kind::Pow: {
        const bool bare = n.a->kind == Kind::Integer || n.a->kind == Kind::Pi;
        const std::string base = bare ? print_node(*n.a) : "(" + print_node(*n.a) + ")";
        return base + "^" + std::to_string(n.exponent);
      }
      case Kind::Call: return func_name(n.func) + "(" + print_node(*n.a) + ")";
    }
    return "?";
  }

  static bool equal_nodes(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x == nullptr || y == nullptr) return false;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::Integer: return x->int_value == y->int_value;
      case Kind::Rational: return x->num == y->num && x->den == y->den;
      case Kind::Decimal: return x->spelling == y->spelling;
      case Kind::Pi: return true;
      case Kind::Neg: return equal_nodes(x->a.get(), y->a.get());
      case Kind::Add:
      case Kind::Sub:
      case Kind::Mul:
      case Kind::Div:
        return equal_nodes(x->a.get(), y->a.get()) && equal_nodes(x->b.get(), y->b.get());
      case Kind::Pow: return x->exponent == y->exponent && equal_nodes(x->a.get(), y->a.get());
      case Kind::Call: return x->func == y->func && equal_nodes(x->a.get(), y->a.get());
    }
    return false;
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::shared_ptr<const ConstExpr::Node> parse() {
    skip_spaces();
    auto node = parse_expr();
    skip_spaces();
    if (pos_ != text_.size())
      throw parse_error("syntax error: unexpected '" + std::string(1, text_[pos_]) +
                            "' at offset " + std::to_string(pos_),
                        pos_);
    return node;
  }

 private:
  using Node = ConstExpr::Node;
  using Kind = ConstExpr::Kind;
  using Func = ConstExpr::Func;
  using NodePtr = std::shared_ptr<const Node>;

  std::string_view text_;
  std::size_t pos_ = 0;

  static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() { return pos_ >= text_.size(); }
  char peek() { return text_[pos_]; }

  bool consume(char c) {
    skip_spaces();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr left = parse_term();
    for (;;) {
      skip_spaces();
      if (consume('+')) {
        Node n;
        n.kind = Kind::Add;
        n.a = left;
        n.b = parse_term();
        left = make(std::move(n));
      } else if (consume('-')) {
        Node n;
        n.kind = Kind::Sub;
        n.a = left;
        n.b = parse_term();
        left = make(std::move(n));
      } else {
        return left;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr left = parse_factor();
    for (;;) {
      skip_spaces();
      if (consume('*')) {
        Node n;
        n.kind = Kind::Mul;
        n.a = left;
        n.b = parse_factor();
        left = make(std::move(n));
      } else if (consume('/')) {
        Node n;
        n.kind = Kind::Div;
        n.a = left;
        n.b = parse_factor();
        left = make(std::move(n));
      } else {
        return left;
      }
    }
  }

  NodePtr parse_factor() {
    skip_spaces();
    bool negated = false;
    if (consume('-')) negated = true;
    NodePtr node = parse_atom();
    if (negated) {
      // unary minus binds tighter than '^'
      Node n;
        n.kind = Kind::Neg;
      n.a = std::move(node);
      node = make(std::move(n));
    }
    skip_spaces();
    if (consume('^')) {
      Node n;
        n.kind = Kind::Pow;
      n.a = std::move(node);
      n.exponent = parse_exponent();
      node = make(std::move(n));
    }
    return node;
  }

  int parse_exponent() {
    skip_spaces();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("syntax error: integer exponent expected at offset " +
                            std::to_string(pos_),
                        pos_);
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  NodePtr parse_atom() {
    skip_spaces();
    if (at_end()) throw parse_error("syntax error: unexpected end of input", pos_);

    if (peek() == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!consume(')'))
        throw parse_error("syntax error: ')' expected at offset " + std::to_string(pos_), pos_);
      return inner;
    }

    if (std::isdigit(static_cast<unsigned char>(peek()))) return parse_number();

    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "pi") {
        Node n;
        n.kind = Kind::Pi;
        return make(std::move(n));
      }
      Func func;
      if (name == "log") func = Func::Log;
      else if (name == "sqrt") func = Func::Sqrt;
      else if (name == "atan") func = Func::Atan;
      else if (name == "acot") func = Func::Acot;
      else
        throw parse_error("unknown identifier '" + name + "' at offset " + std::to_string(start),
                          start);
      if (!consume('('))
        throw parse_error("syntax error: '(' expected after '" + name + "' at offset " +
                              std::to_string(pos_),
                          pos_);
      Node n;
        n.kind = Kind::Call;
      n.func = func;
      n.a = parse_expr();
      if (!consume(')'))
        throw parse_error("syntax error: ')' expected at offset " + std::to_string(pos_), pos_);
      return make(std::move(n));
    }

    throw parse_error("syntax error: unexpected '" + std::string(1, peek()) + "' at offset " +
                          std::to_string(pos_),
                      pos_);
  }

  long long read_integer() {
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    const long long integer_part = read_integer();

    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Node n;
        n.kind = Kind::Decimal;
      n.spelling = std::string(text_.substr(start, pos_ - start));
      n.dec_value = std::stod(n.spelling);
      return make(std::move(n));
    }

    // rational lexeme: digits '/' digits with no spaces, not followed by '^'
    if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t probe = pos_ + 1;
      while (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe])))
        ++probe;
      if (probe >= text_.size() || text_[probe] != '^') {
        ++pos_;  // '/'
        Node n;
        n.kind = Kind::Rational;
        n.num = integer_part;
        n.den = read_integer();
        if (n.den == 0)
          throw parse_error("syntax error: rational with zero denominator at offset " +
                                std::to_string(start),
                            start);
        return make(std::move(n));
      }
    }

    Node n;
        n.kind = Kind::Integer;
    n.int_value = integer_part;
    return make(std::move(n));
  }
};

}  // namespace detail

/// Parse a constant expression; throws parse_error (with position) on syntax
/// problems or unknown identifiers.
inline ConstExpr parse_const_expr(std::string_view text) {
  detail::ExprParser parser(text);
  return ConstExpr(parser.parse());
}

}  // namespace lehmer
