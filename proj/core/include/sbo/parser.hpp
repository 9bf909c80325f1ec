#pragma once

#include <stdexcept>
#include <string>

#include "sbo/op_expr.hpp"

namespace sbo {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Integer bindings available inside operator expressions.
struct Bindings {
  int n = 0;
  int p = 0;
  int N = 0;
};

/// Parse an operator expression.  Juxtaposition is composition (rightmost
/// factor applied first), a scalar factor scales, '^' binds tighter than
/// juxtaposition, '+'/'-' form sums.  The source signature is inferred from
/// the rightmost factors (ambient if they act on R^n, else the hyperplane).
OpExpr parse_op(const std::string& text, const Bindings& b);

/// Parse a pure scalar (polynomial in lambda, Gaussian-rational coefficients).
Scalar parse_scalar(const std::string& text, const Bindings& b);

/// Inverse of parse_op up to flattening of nested sums and compositions.
std::string pretty_print(const OpExpr& e);

std::string atom_token(AtomKind k);

}  // namespace sbo
