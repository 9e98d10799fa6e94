#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ospbi/pbw.hpp"
#include "ospbi/rational.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

/// Syntax tree of an algebra expression in the notation
///   8*[Fp,Fm]*P + P      {Fp,Fm} - 1/2*H      Fp # P + 1 # Fp
/// where '#' separates tensor legs.
struct Expression {
  enum class Kind {
    number,         ///< rational literal
    symbol,         ///< Em Fm H Fp Ep P
    casimir,        ///< C
    negate,
    sum,
    difference,
    product,
    power,          ///< children[0] ^ exponent
    commutator,
    anticommutator,
    tensor,         ///< children[0] # children[1] # ...
  };

  Kind kind = Kind::number;
  Rational value;                ///< number
  Generator symbol = Generator::P;
  unsigned exponent = 0;         ///< power
  std::vector<Expression> children;
  std::size_t line = 1, column = 1;

  static Expression number(Rational q) { Expression e; e.kind = Kind::number; e.value = std::move(q); return e; }
  static Expression generator(Generator g) { Expression e; e.kind = Kind::symbol; e.symbol = g; return e; }
  static Expression node(Kind k, std::vector<Expression> children) {
    Expression e;
    e.kind = k;
    e.children = std::move(children);
    return e;
  }
};

/// Grammar (whitespace insignificant, '*' optional between factors):
///   sum     := tensor (('+' | '-') tensor)*
///   tensor  := term ('#' term)*
///   term    := unary ('*'? unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' nat)*
///   primary := rational | ident | '[' sum ',' sum ']' | '{' sum ',' sum '}' | '(' sum ')'
///   rational:= nat ('/' nat)?
///   ident   := Em | Fm | H | Fp | Ep | P | C
/// Throws ParseError carrying line and column.
Expression parse_expression(std::string_view text);

/// Arity of the expression: 0 for a pure scalar, otherwise the tensor arity.
/// Throws ArityError when parts of a sum or product disagree.
std::size_t arity(const Expression& e);

/// Normalized value. Pure scalars evaluate to arity `scalar_arity`.
TensorElement evaluate(const Expression& e, std::size_t scalar_arity = 1);

/// Normal form of an arity-1 (or scalar) expression; ArityError otherwise.
PBWElement normal_form(const Expression& e);

/// Convenience: parse then evaluate.
TensorElement evaluate(std::string_view text);

} // namespace ospbi
