#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oscalg/polynomial.hpp"

namespace oscalg {

/// Parse tree of the coefficient DSL. Grammar (recursive descent):
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' natural)?
///   atom   := rational | 'n' | identifier | '(' expr ')'
///
/// Rational literals are "p" or "p/q"; there is no division operator.
/// 'n' is the index variable, any other identifier is a named parameter
/// that must be bound before lowering to a polynomial.
struct Expr {
  enum class Kind { literal, index_var, parameter, add, sub, mul, pow };

  Kind kind = Kind::literal;
  Rational value;            // literal
  std::string name;          // parameter
  std::vector<Expr> kids;    // add/sub/mul: two, pow: one
  unsigned exponent = 0;     // pow
  std::size_t pos = 0;       // source offset, for error reporting
};

using Bindings = std::map<std::string, Rational, std::less<>>;

/// Parses the DSL; throws ParseError with the offending offset.
Expr parse_expr(std::string_view text);

/// Direct tree-walking evaluation at a given index value.
Rational interpret(const Expr& e, const Rational& n, const Bindings& bindings);

/// Expands the tree into a canonical polynomial in n, substituting bound
/// parameters. Unbound identifiers are reported as ParseError.
Polynomial lower_to_polynomial(const Expr& e, const Bindings& bindings);

/// parse + lower in one step; the form every spec file field goes through.
Polynomial parse_coeff_expr(std::string_view text, const Bindings& bindings = {});

}  // namespace oscalg
