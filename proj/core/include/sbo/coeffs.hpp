#pragma once

#include <vector>

#include "sbo/scalar.hpp"

namespace sbo {

/// Univariate polynomial (in an auxiliary variable, usually t or z) with
/// Scalar coefficients; index = power.
struct UniPoly {
  std::vector<Scalar> c;

  static UniPoly zero() { return {}; }
  static UniPoly constant(Scalar s) {
    UniPoly p;
    p.c.push_back(std::move(s));
    p.trim();
    return p;
  }
  static UniPoly var() { return {{Scalar(0), Scalar(1)}}; }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Scalar coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Scalar(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Scalar& s) const;
  UniPoly deriv() const;
  /// Multiply by t^k.
  UniPoly shifted_up(int k) const;
  bool operator==(const UniPoly& o) const { return c == o.c; }
};

// -- hypergeometric machinery ------------------------------------------------

/// Terminating 2F1(-m, b; c; z).  The l-th coefficient (-m)_l (b)_l / ((c)_l l!)
/// must be computable by exact Scalar division (always the case when c is a
/// nonvanishing constant); otherwise throws std::domain_error.
UniPoly f21_terminating(int m, const Scalar& b, const Scalar& c, const UniPoly& z);

/// (c)_m * 2F1(-m, b; c; z), denominator-free:
///   sum_l (-m)_l (b)_l (c+l)_{m-l} z^l / l!.
UniPoly f21_cleared(int m, const Scalar& b, const Scalar& c, const UniPoly& z);

/// Gegenbauer polynomial C_m^alpha(z), coefficients polynomial in alpha.
UniPoly gegenbauer_C(int m, const Scalar& alpha);

/// Jacobi polynomial P_m^{(alpha,beta)}(z), coefficients polynomial in
/// alpha, beta (computed denominator-free).
UniPoly jacobi_P(int m, const Scalar& alpha, const Scalar& beta);

// -- coefficient families of the operator construction -----------------------
// All take the ambient dimension n explicitly and return exact lambda
// polynomials.  Out-of-range indices (j = -1, j > N) give zero, matching the
// conventions used in the shifted sums.

/// Even-order coefficients a_j^{(N)}(lambda), normalized a_N^{(N)} = 1.
Scalar coeff_a(int n, int N, int j);
/// Odd-order coefficients b_j^{(N)}(lambda), normalized b_N^{(N)} = 1.
Scalar coeff_b(int n, int N, int j);
/// alpha_i^{(N)}(lambda).
Scalar coeff_alpha(int n, int N, int i);
/// beta_i^{(N)}(lambda).
Scalar coeff_beta(int n, int N, int i);
/// gamma_i^{(N)}(lambda; p), i = 1..N.
Scalar coeff_gamma(int n, int N, int i, int p);
/// The two summands of gamma: sign = +1 or -1.
Scalar coeff_gamma_pm(int n, int N, int i, int p, int sign);

}  // namespace sbo
