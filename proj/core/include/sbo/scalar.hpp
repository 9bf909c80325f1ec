#pragma once

#include <initializer_list>
#include <vector>

#include "sbo/rational.hpp"

namespace sbo {

/// Dense polynomial in the spectral parameter over Q(i).  The coefficient
/// vector never stores trailing zeros, so degree() is just the size.
/// Division is supported only when it is exact in the polynomial ring.
class Scalar {
 public:
  Scalar() = default;
  Scalar(GaussianRational c) { c_.push_back(std::move(c)); trim(); }  // NOLINT
  Scalar(Rational c) : Scalar(GaussianRational(std::move(c))) {}      // NOLINT
  Scalar(long c) : Scalar(GaussianRational(Rational(c))) {}           // NOLINT
  explicit Scalar(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The generator: the polynomial "lambda".
  static Scalar lambda() { return Scalar(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GaussianRational();
  }
  GaussianRational constant_term() const { return coeff(0); }
  GaussianRational leading() const { return c_.empty() ? GaussianRational() : c_.back(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact division; throws std::domain_error on zero divisor or nonzero
  /// remainder.
  Scalar divide_exact(const Scalar& divisor) const;

  /// Horner evaluation at a point of Q(i).
  GaussianRational eval_at(const GaussianRational& x) const;

  /// Formal derivative.
  Scalar derivative() const;

  /// p(lambda) -> p(lambda + c).
  Scalar shift(const GaussianRational& c) const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

Scalar pochhammer(const Scalar& a, unsigned l);

}  // namespace sbo
