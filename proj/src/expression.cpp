#include "ospbi/expression.hpp"

#include <cctype>
#include <optional>

#include "ospbi/errors.hpp"

namespace ospbi {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  template <class F>
  Expression located(F&& f) {
    skip_space();
    const std::size_t l = line_, c = col_;
    Expression e = f();
    e.line = l;
    e.column = c;
    return e;
  }

  Expression sum() {
    return located([&] {
      Expression left = tensor();
      for (;;) {
        if (accept('+'))
          left = Expression::node(Expression::Kind::sum, {std::move(left), tensor()});
        else if (accept('-'))
          left = Expression::node(Expression::Kind::difference, {std::move(left), tensor()});
        else
          return left;
      }
    });
  }

  Expression tensor() {
    return located([&] {
      Expression first = term();
      if (peek() != '#') return first;
      std::vector<Expression> legs{std::move(first)};
      while (accept('#')) legs.push_back(term());
      return Expression::node(Expression::Kind::tensor, std::move(legs));
    });
  }

  bool starts_factor() {
    const auto c = peek();
    return c && (std::isdigit(static_cast<unsigned char>(*c)) || std::isalpha(static_cast<unsigned char>(*c)) ||
                 *c == '(' || *c == '[' || *c == '{');
  }

  Expression term() {
    return located([&] {
      Expression left = unary();
      for (;;) {
        if (accept('*')) {
          left = Expression::node(Expression::Kind::product, {std::move(left), unary()});
        } else if (starts_factor()) {
          left = Expression::node(Expression::Kind::product, {std::move(left), unary()});
        } else {
          return left;
        }
      }
    });
  }

  Expression unary() {
    return located([&] {
      if (accept('-')) return Expression::node(Expression::Kind::negate, {unary()});
      if (accept('+')) return unary();
      return power();
    });
  }

  Expression power() {
    return located([&] {
      Expression base = primary();
      while (accept('^')) {
        skip_space();
        const auto digits = natural();
        if (digits.empty()) fail("expected a non-negative integer exponent");
        Expression p = Expression::node(Expression::Kind::power, {std::move(base)});
        p.exponent = static_cast<unsigned>(std::stoul(digits));
        base = std::move(p);
      }
      return base;
    });
  }

  std::string natural() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      d += text_[pos_];
      advance();
    }
    return d;
  }

  Expression bracket(char close, Expression::Kind kind) {
    Expression a = sum();
    expect(',');
    Expression b = sum();
    expect(close);
    return Expression::node(kind, {std::move(a), std::move(b)});
  }

  Expression primary() {
    return located([&]() -> Expression {
      const auto c = peek();
      if (!c) fail("unexpected end of input");
      if (accept('(')) {
        Expression e = sum();
        expect(')');
        return e;
      }
      if (accept('[')) return bracket(']', Expression::Kind::commutator);
      if (accept('{')) return bracket('}', Expression::Kind::anticommutator);
      if (std::isdigit(static_cast<unsigned char>(*c))) {
        std::string num = natural();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          advance();
          const std::string den = natural();
          if (den.empty()) fail("expected a denominator");
          if (std::stoull(den) == 0) fail("zero denominator");
          num += "/" + den;
        }
        return Expression::number(parse_rational(num));
      }
      if (std::isalpha(static_cast<unsigned char>(*c))) {
        const std::size_t l = line_, col = col_;
        std::string id;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
          id += text_[pos_];
          advance();
        }
        if (id == "C") return Expression::node(Expression::Kind::casimir, {});
        if (auto g = generator_from_name(id)) return Expression::generator(*g);
        throw ParseError("unknown identifier '" + id + "'", l, col);
      }
      fail("unexpected '" + std::string(1, *c) + "'");
    });
  }
};

/// Scalar-or-element value used during evaluation; arity 0 means pure scalar.
struct Value {
  std::size_t arity = 0;
  Rational scalar;
  TensorElement element{1};

  TensorElement as(std::size_t n) const {
    if (arity == 0) {
      TensorElement u = TensorElement::unit(n);
      u *= scalar;
      return u;
    }
    return element;
  }
};

std::string where(const Expression& e) {
  return " at line " + std::to_string(e.line) + ", column " + std::to_string(e.column);
}

std::size_t unify(const Expression& e, const Value& a, const Value& b, const char* what) {
  if (a.arity && b.arity && a.arity != b.arity)
    throw ArityError(std::string(what) + " of arity " + std::to_string(a.arity) + " and " + std::to_string(b.arity) +
                     where(e));
  return a.arity ? a.arity : b.arity;
}

Value eval(const Expression& e) {
  using K = Expression::Kind;
  switch (e.kind) {
  case K::number: return {0, e.value, TensorElement(1)};
  case K::symbol: return {1, 0, TensorElement::from_pbw(generator(e.symbol))};
  case K::casimir: return {1, 0, TensorElement::from_pbw(casimir())};
  case K::negate: {
    Value v = eval(e.children.at(0));
    v.scalar = -v.scalar;
    v.element *= Rational(-1);
    return v;
  }
  case K::sum:
  case K::difference: {
    const Value a = eval(e.children.at(0)), b = eval(e.children.at(1));
    const std::size_t n = unify(e, a, b, "sum");
    const Rational sign = e.kind == K::sum ? Rational(1) : Rational(-1);
    if (n == 0) return {0, a.scalar + sign * b.scalar, TensorElement(1)};
    TensorElement r = a.as(n);
    r += sign * b.as(n);
    return {n, 0, std::move(r)};
  }
  case K::product:
  case K::commutator:
  case K::anticommutator: {
    const Value a = eval(e.children.at(0)), b = eval(e.children.at(1));
    const std::size_t n = unify(e, a, b, "product");
    if (n == 0) {
      if (e.kind == K::product) return {0, a.scalar * b.scalar, TensorElement(1)};
      if (e.kind == K::commutator) return {0, 0, TensorElement(1)};
      return {0, 2 * a.scalar * b.scalar, TensorElement(1)};
    }
    if (a.arity == 0 && e.kind == K::product) return {n, 0, a.scalar * b.element};
    if (b.arity == 0 && e.kind == K::product) return {n, 0, a.element * b.scalar};
    const TensorElement x = a.as(n), y = b.as(n);
    if (e.kind == K::product) return {n, 0, x * y};
    if (e.kind == K::commutator) return {n, 0, commutator(x, y)};
    return {n, 0, anticommutator(x, y)};
  }
  case K::power: {
    const Value base = eval(e.children.at(0));
    if (base.arity == 0) {
      Rational r = 1;
      for (unsigned k = 0; k < e.exponent; ++k) r *= base.scalar;
      return {0, r, TensorElement(1)};
    }
    TensorElement r = TensorElement::unit(base.arity);
    for (unsigned k = 0; k < e.exponent; ++k) r = r * base.element;
    return {base.arity, 0, std::move(r)};
  }
  case K::tensor: {
    TensorElement acc = eval(e.children.at(0)).as(1);
    for (std::size_t k = 1; k < e.children.size(); ++k) {
      const Value leg = eval(e.children[k]);
      acc = outer(acc, leg.arity ? leg.element : leg.as(1));
    }
    return {acc.arity(), 0, std::move(acc)};
  }
  }
  throw std::logic_error("unhandled expression kind");
}

} // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::size_t arity(const Expression& e) { return eval(e).arity; }

TensorElement evaluate(const Expression& e, std::size_t scalar_arity) {
  const Value v = eval(e);
  return v.arity ? v.element : v.as(scalar_arity);
}

PBWElement normal_form(const Expression& e) {
  const Value v = eval(e);
  if (v.arity > 1) throw ArityError("normal_form expects an arity-1 expression, got arity " + std::to_string(v.arity));
  return v.as(1).to_pbw();
}

TensorElement evaluate(std::string_view text) { return evaluate(parse_expression(text)); }

} // namespace ospbi
