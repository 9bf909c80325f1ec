#include "sbo/scalar.hpp"

#include <sstream>

namespace sbo {

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::ostringstream os;
  if (!re_.is_zero()) os << re_.str() << (im_.sign() > 0 ? " + " : " - ");
  else if (im_.sign() < 0) os << "-";
  Rational a = im_.sign() < 0 ? -im_ : im_;
  if (!a.is_one()) os << a.str() << " ";
  os << "i";
  return os.str();
}

Scalar Scalar::operator-() const {
  std::vector<GaussianRational> r(c_);
  for (auto& x : r) x = -x;
  return Scalar(std::move(r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t k = 0; k < a.c_.size(); ++k) {
    if (a.c_[k].is_zero()) continue;
    for (size_t l = 0; l < b.c_.size(); ++l) r[k + l] += a.c_[k] * b.c_[l];
  }
  return Scalar(std::move(r));
}

Scalar Scalar::divide_exact(const Scalar& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_zero()) return Scalar();
  if (degree() < divisor.degree())
    throw std::domain_error("Scalar: non-exact division");
  std::vector<GaussianRational> rem = c_;
  std::vector<GaussianRational> quo(degree() - divisor.degree() + 1);
  const auto& d = divisor.c_;
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    GaussianRational q = rem[k + divisor.degree()] / d.back();
    quo[k] = q;
    if (q.is_zero()) continue;
    for (size_t l = 0; l < d.size(); ++l) rem[k + l] -= q * d[l];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) throw std::domain_error("Scalar: non-exact division");
  return Scalar(std::move(quo));
}

GaussianRational Scalar::eval_at(const GaussianRational& x) const {
  GaussianRational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Scalar Scalar::derivative() const {
  if (c_.size() <= 1) return Scalar();
  std::vector<GaussianRational> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = GaussianRational(Rational(static_cast<long>(k))) * c_[k];
  return Scalar(std::move(r));
}

Scalar Scalar::shift(const GaussianRational& c) const {
  // Horner in (lambda + c).
  Scalar shifted_var = Scalar::lambda() + Scalar(c);
  Scalar r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shifted_var + Scalar(*it);
  return r;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.is_real() && c.re().sign() < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    GaussianRational a = neg ? -c : c;
    bool unit = a == GaussianRational(1);
    if (!a.is_real()) os << "(" << a.str() << ")";
    else if (!unit || k == 0) os << a.str();
    if (k > 0) {
      if (!unit || !a.is_real()) os << " ";
      os << "lambda";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Scalar pochhammer(const Scalar& a, unsigned l) {
  Scalar r(1);
  for (unsigned t = 0; t < l; ++t) r = r * (a + Scalar(static_cast<long>(t)));
  return r;
}

}  // namespace sbo
