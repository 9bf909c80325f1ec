#pragma once

#include <map>
#include <optional>

#include "sbo/coeffs.hpp"
#include "sbo/op_expr.hpp"
#include "sbo/rep.hpp"

namespace sbo {

enum class VType { First, Second, Third, Fourth, FirstMiddle, SecondMiddle };

/// A homogeneous equivariant homomorphism from constant forms on the
/// hyperplane into xi-polynomial forms on R^n, stored by its values on the
/// source basis (axis masks over 1..n-1).  The spectral parameter stays
/// symbolic in the coefficients unless fixed_lambda is set.
struct SingularVector {
  int n = 0;
  VType vtype = VType::First;
  int homogeneity = 0;
  int source_degree = 0;  // q
  int target_degree = 0;  // form degree of the values on R^n
  std::optional<GaussianRational> fixed_lambda;
  std::map<AxisMask, PolyForm> components;

  /// t-polynomials of the closed-form ansatz (present for built vectors).
  struct Structure {
    std::vector<Scalar> P, Q, R;
  };
  std::optional<Structure> structure;

  bool is_zero() const {
    for (const auto& [a, w] : components)
      if (!w.is_zero()) return false;
    return true;
  }
};

// -- builders (values on the source basis, spectral parameter symbolic) ------

/// v_M^{(p -> p)}; 0 <= p <= n-1, homogeneity M >= 0.
SingularVector build_first(int n, int p, int homogeneity);
/// v_M^{(p-1 -> p)}; 1 <= p <= n.
SingularVector build_second(int n, int p, int homogeneity);
/// v_M^{(p -> p-1)}; p = 1 with any M >= 2, or M = 1 with 1 <= p <= n-1.
/// Fixed spectral value.
SingularVector build_third(int n, int p, int homogeneity);
/// v_M^{(p -> p+2)}; p = n-2 with any M >= 2, or M = 1 with 0 <= p <= n-2.
/// Fixed spectral value.
SingularVector build_fourth(int n, int p, int homogeneity);

/// Middle-degree projections: for odd n and q = (n-1)/2 restricts the source
/// to a star eigenspace; for even n and target n/2 projects the values.
SingularVector middle_projections(const SingularVector& v, int sign);
/// Post-compose the values with the ambient Hodge star.
SingularVector star_postcompose(const SingularVector& v);

// -- checks -------------------------------------------------------------------

struct AnnihilationFailure {
  AxisMask source;
  int j;
  PolyForm residual;
};
struct AnnihilationReport {
  int cases_checked = 0;
  std::vector<AnnihilationFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// fourier_P(lambda, j, component) = 0 for all j <= n-1 and source elements.
AnnihilationReport verify_annihilated(const SingularVector& v);

/// The six residual polynomials (in t) of the coupled ODE system satisfied by
/// the ansatz polynomials; parity = homogeneity mod 2.
std::vector<UniPoly> ode_residuals(int n, int p, int N, int parity, const UniPoly& P,
                                   const UniPoly& Q, const UniPoly& R);

/// Assemble the homogeneous ansatz for source degree q, target degree p,
/// homogeneity M, and return an exact kernel basis of the annihilation
/// conditions at rational lambda0.
std::vector<SingularVector> solve_ansatz(int n, int p, int q, int homogeneity,
                                         const GaussianRational& lambda0);

/// Dualization into a differential operator; `op` carries the real-form
/// coefficients and `phase` the recorded power of i (one factor per
/// homogeneity step).
struct TranslatedOperator {
  OpExpr op;
  GaussianRational phase;
};
TranslatedOperator translate(const SingularVector& v);

// -- component algebra used by the identity checks ----------------------------

SingularVector specialize_vector(const SingularVector& v, const GaussianRational& lambda0);
SingularVector derivative_vector(const SingularVector& v);
/// v o (insertion of the xi Euler field on the source side).
SingularVector compose_euler_insert(const SingularVector& v);
/// v o (alpha wedge on the source side).
SingularVector compose_alpha_wedge(const SingularVector& v);
SingularVector subtract(const SingularVector& a, const SingularVector& b);

}  // namespace sbo
