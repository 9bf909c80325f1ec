#include "sbo/coeffs.hpp"

namespace sbo {

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r = *this;
  if (r.c.size() < o.c.size()) r.c.resize(o.c.size());
  for (size_t k = 0; k < o.c.size(); ++k) r.c[k] += o.c[k];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r = *this;
  if (r.c.size() < o.c.size()) r.c.resize(o.c.size());
  for (size_t k = 0; k < o.c.size(); ++k) r.c[k] -= o.c[k];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  UniPoly r;
  r.c.assign(c.size() + o.c.size() - 1, Scalar());
  for (size_t k = 0; k < c.size(); ++k)
    for (size_t l = 0; l < o.c.size(); ++l) r.c[k + l] += c[k] * o.c[l];
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  UniPoly r;
  r.c.reserve(c.size());
  for (const auto& x : c) r.c.push_back(s * x);
  r.trim();
  return r;
}

UniPoly UniPoly::deriv() const {
  UniPoly r;
  for (size_t k = 1; k < c.size(); ++k) r.c.push_back(Scalar(static_cast<long>(k)) * c[k]);
  r.trim();
  return r;
}

UniPoly UniPoly::shifted_up(int k) const {
  if (is_zero()) return {};
  UniPoly r;
  r.c.assign(k, Scalar());
  r.c.insert(r.c.end(), c.begin(), c.end());
  return r;
}

UniPoly f21_terminating(int m, const Scalar& b, const Scalar& c, const UniPoly& z) {
  UniPoly sum;
  UniPoly zpow = UniPoly::constant(Scalar(1));
  for (int l = 0; l <= m; ++l) {
    Scalar num = pochhammer(Scalar(-static_cast<long>(m)), l) * pochhammer(b, l);
    Scalar den = pochhammer(c, l) * Scalar(Rational::factorial(l));
    sum = sum + zpow.scaled(num.divide_exact(den));
    zpow = zpow * z;
  }
  return sum;
}

UniPoly f21_cleared(int m, const Scalar& b, const Scalar& c, const UniPoly& z) {
  UniPoly sum;
  UniPoly zpow = UniPoly::constant(Scalar(1));
  for (int l = 0; l <= m; ++l) {
    Scalar coeff = pochhammer(Scalar(-static_cast<long>(m)), l) * pochhammer(b, l) *
                   pochhammer(c + Scalar(l), m - l);
    coeff = coeff.divide_exact(Scalar(Rational::factorial(l)));
    sum = sum + zpow.scaled(coeff);
    zpow = zpow * z;
  }
  return sum;
}

UniPoly gegenbauer_C(int m, const Scalar& alpha) {
  UniPoly sum;
  for (int k = 0; 2 * k <= m; ++k) {
    Scalar coeff = pochhammer(alpha, m - k) * Scalar(Rational::pow2(m - 2 * k));
    coeff = coeff.divide_exact(Scalar(Rational::factorial(k) * Rational::factorial(m - 2 * k)));
    if (k & 1) coeff = -coeff;
    sum = sum + UniPoly::constant(coeff).shifted_up(m - 2 * k);
  }
  return sum;
}

UniPoly jacobi_P(int m, const Scalar& alpha, const Scalar& beta) {
  // (alpha+1)_m / m! * 2F1(-m, 1+alpha+beta+m; alpha+1; (1-z)/2), computed
  // denominator-free via (alpha+1)_m / (alpha+1)_l = (alpha+1+l)_{m-l}.
  UniPoly half_one_minus_z;
  half_one_minus_z.c = {Scalar(Rational(1, 2)), Scalar(Rational(-1, 2))};
  UniPoly sum;
  UniPoly zpow = UniPoly::constant(Scalar(1));
  for (int l = 0; l <= m; ++l) {
    Scalar coeff = pochhammer(Scalar(-static_cast<long>(m)), l) *
                   pochhammer(Scalar(1) + alpha + beta + Scalar(m), l) *
                   pochhammer(alpha + Scalar(1 + l), m - l);
    coeff = coeff.divide_exact(Scalar(Rational::factorial(l) * Rational::factorial(m)));
    sum = sum + zpow.scaled(coeff);
    zpow = zpow * half_one_minus_z;
  }
  return sum;
}

namespace {
Scalar lin(long a, long b) {  // a*lambda + b
  return Scalar(a) * Scalar::lambda() + Scalar(b);
}
}  // namespace

Scalar coeff_a(int n, int N, int j) {
  if (j < 0 || j > N) return Scalar();
  if (j == N) return Scalar(1);
  Scalar prod(1);
  for (int k = j; k <= N - 1; ++k) prod = prod * lin(2, -4L * N + 2 * k + n + 1);
  Rational front = Rational::pow2(N - j) * Rational::factorial(N) /
                   (Rational::factorial(j) * Rational::factorial(2 * N - 2 * j));
  if ((N - j) & 1) front = -front;
  return Scalar(front) * prod;
}

Scalar coeff_b(int n, int N, int j) {
  if (j < 0 || j > N) return Scalar();
  if (j == N) return Scalar(1);
  Scalar prod(1);
  for (int k = j; k <= N - 1; ++k) prod = prod * lin(2, -4L * N + 2 * k + n - 1);
  Rational front = Rational::pow2(N - j) * Rational::factorial(N) /
                   (Rational::factorial(j) * Rational::factorial(2 * N - 2 * j + 1));
  if ((N - j) & 1) front = -front;
  return Scalar(front) * prod;
}

Scalar coeff_alpha(int n, int N, int i) {
  if (i < 0 || i > N) return Scalar();
  Scalar prod(1);
  for (int k = i + 1; k <= N; ++k) prod = prod * lin(2, n - 2L * k);
  for (int k = 1; k <= i; ++k) prod = prod * lin(2, n - 2L * k - 2 * N + 1);
  Rational front = Rational::pow2(N) * Rational::factorial(N) * Rational::binomial(N, i) /
                   Rational::factorial(2 * N);
  if (i & 1) front = -front;
  return Scalar(front) * prod;
}

Scalar coeff_beta(int n, int N, int i) {
  if (i < 0 || i > N) return Scalar();
  Scalar prod(1);
  for (int k = i + 1; k <= N; ++k) prod = prod * lin(2, n - 2L * k);
  for (int k = 1; k <= i; ++k) prod = prod * lin(2, n - 2L * k - 2 * N - 1);
  Rational front = Rational::pow2(N) * Rational::factorial(N) * Rational::binomial(N, i) /
                   Rational::factorial(2 * N + 1);
  if (i & 1) front = -front;
  return Scalar(front) * prod;
}

Scalar coeff_gamma(int n, int N, int i, int p) {
  if (i < 1 || i > N) throw std::out_of_range("coeff_gamma: index out of range");
  Scalar bracket = lin(1, p - 2L * N - 1) * Scalar(N + 1) * lin(2, n - 2L * i) +
                   lin(1, n - static_cast<long>(p)) * Scalar(2L * N + 1) * Scalar(N - i + 1L);
  Scalar prod(1);
  for (int k = i + 1; k <= N; ++k) prod = prod * lin(2, n - 2L * k);
  for (int k = 1; k <= i - 1; ++k) prod = prod * lin(2, n - 2L * k - 2 * N - 1);
  Rational front = Rational::pow2(N) * Rational::factorial(N) * Rational::binomial(N + 1, i) /
                   (Rational(N + 1) * Rational::factorial(2 * N + 1));
  if (i & 1) front = -front;
  return Scalar(front) * bracket * prod;
}

Scalar coeff_gamma_pm(int n, int N, int i, int p, int sign) {
  if (i < 1 || i > N) throw std::out_of_range("coeff_gamma_pm: index out of range");
  Scalar prod(1);
  for (int k = 1; k <= i - 1; ++k) prod = prod * lin(2, n - 2L * k - 2 * N - 1);
  if (sign > 0) {
    for (int k = i; k <= N; ++k) prod = prod * lin(2, n - 2L * k);
    Rational front = Rational::pow2(N) * Rational::factorial(N) * Rational::binomial(N + 1, i) /
                     Rational::factorial(2 * N + 1);
    if (i & 1) front = -front;
    return Scalar(front) * lin(1, p - 2L * N - 1) * prod;
  }
  for (int k = i + 1; k <= N; ++k) prod = prod * lin(2, n - 2L * k);
  Rational front = Rational::pow2(N) * Rational::factorial(N) * Rational::binomial(N, i) /
                   Rational::factorial(2 * N);
  if (i & 1) front = -front;
  return Scalar(front) * lin(1, n - static_cast<long>(p)) * prod;
}

}  // namespace sbo
