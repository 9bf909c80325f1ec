#pragma once

#include <string>
#include <vector>

#include "sbo/op_expr.hpp"

namespace sbo {

/// Basis elements of the conformal Lie algebra used in the equivariance
/// checks; indices are 1-based and restricted to 1..dim-1 when acting for the
/// subalgebra of the hyperplane problem.
struct Generator {
  enum class Kind { EPlus, EMinus, Grading, Rotation };
  Kind kind;
  int i = 0;  // EPlus/EMinus index, or first rotation index
  int j = 0;  // second rotation index (i < j)

  static Generator eplus(int j) { return {Kind::EPlus, j, 0}; }
  static Generator eminus(int j) { return {Kind::EMinus, j, 0}; }
  static Generator grading() { return {Kind::Grading, 0, 0}; }
  static Generator rotation(int i, int j) { return {Kind::Rotation, i, j}; }

  std::string str() const;
};

/// All subalgebra generators for the dim-dimensional model, indices <= sub.
std::vector<Generator> subalgebra_generators(int sub);

/// Infinitesimal action on Poly-coefficient p-forms on R^dim in the
/// non-compact dual model; lambda enters the raising and grading operators.
PolyForm act_dual(int dim, const Scalar& lambda, const Generator& g, const PolyForm& w);

/// Fourier-side second-order operator P_j(lambda) on xi-polynomial forms.
PolyForm fourier_P(int n, const Scalar& lambda, int j, const PolyForm& v);

struct IntertwiningFailure {
  Generator generator;
  std::string basis_form;
  PolyForm residual;
};

struct IntertwiningReport {
  int cases_checked = 0;
  std::vector<IntertwiningFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks D o act(lambda, source) - act(lambda - order, target) o D = 0 on
/// all monomial basis forms of coefficient degree <= max_degree, for all
/// subalgebra generators (indices <= n-1).  lambda may be symbolic.
IntertwiningReport check_intertwining(const OpExpr& D, int order, const Scalar& lambda,
                                      int max_degree);

}  // namespace sbo
