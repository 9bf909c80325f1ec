#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sbo/families.hpp"
#include "sbo/rep.hpp"
#include "sbo/singular.hpp"

namespace sbo {

struct Witness {
  std::string basis_form;
  std::string residual;
};

struct OpEqualResult {
  bool equal = true;
  std::optional<Witness> witness;
};

/// Decide equality of two operator expressions by applying both to every
/// monomial form of coefficient degree <= degree_bound.  For operators of
/// order <= degree_bound this is a complete decision procedure.
OpEqualResult op_equal(const OpExpr& a, const OpExpr& b, int degree_bound);
/// Same against the zero operator.
OpEqualResult op_is_zero(const OpExpr& a, int degree_bound);
/// Equality via the full constant-coefficient symbol (no degree bound
/// needed); the suites use this route, cross-checked against op_equal.
OpEqualResult op_equal_symbolic(const OpExpr& a, const OpExpr& b);
/// Equality restricted to closed ambient forms, tested on the spanning family
/// of exact forms d(monomials of degree <= span_degree) plus constant forms.
OpEqualResult op_equal_on_closed(const OpExpr& a, const OpExpr& b, int span_degree);

struct CaseResult {
  std::string params;
  bool pass = true;
  std::string counterexample;
  double ms = 0.0;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;
  double total_ms = 0.0;
  int failures() const {
    int f = 0;
    for (const auto& c : cases) f += !c.pass;
    return f;
  }
  bool passed() const { return failures() == 0; }
};

// -- named theorem suites -----------------------------------------------------

SuiteReport suite_coefficients(int n_max, int N_max);
SuiteReport suite_presentation(int n_max, int order_max);
SuiteReport suite_equivariance(int n_max, int order_max);
SuiteReport suite_hodge(int n_max, int order_max);
SuiteReport suite_main_factorizations(int n_max, int order_max);
SuiteReport suite_supplementary(int n_max, int order_max);
SuiteReport suite_gauge_and_q(int n_max);
SuiteReport suite_singular(int n_max, int order_max);
SuiteReport suite_kkp();

/// Runs the named suite ("all" runs every suite); names match the CLI.
std::vector<SuiteReport> run_suites(const std::string& which, int n_max, int order_max);

}  // namespace sbo
