#pragma once

#include <string_view>
#include <variant>

#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

namespace growcap {

template <class S>
struct Gaussian {
  S re;
  S im;
};

// Literal grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//   unary   := ('+' | '-') unary | primary
//   primary := decimal | 'i' | 'phi' | 'psi' | 'sqrt' '(' expr ')' | '(' expr ')'
// Decimals such as 5.3 are read as exact rationals. Errors are ParseError with
// the byte offset of the offending token.

/// Parses a real quadratic surd such as "(11+sqrt(221))/10" or "sqrt(7)-1".
Surd parse_surd(std::string_view text);

/// A point literal such as "phi + i/10" or "(1+sqrt(3)*i)/2". Evaluated
/// exactly when every radicand agrees, otherwise at the current Real
/// precision.
struct ComplexLiteral {
  std::variant<Gaussian<Surd>, Gaussian<Real>> value;

  bool exact() const { return value.index() == 0; }
};

ComplexLiteral parse_complex(std::string_view text);

}  // namespace growcap
