#include "sbo/poly.hpp"

#include <sstream>

namespace sbo {

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Expo e = ea;
      for (int k = 0; k < Expo::kMaxVars; ++k) e.e[k] = static_cast<uint8_t>(e.e[k] + eb.e[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : t_) r.add_term(e, c * t);
  return r;
}

Poly Poly::times_var(int k, int power) const {
  Poly r(nvars_);
  for (const auto& [e, c] : t_) {
    Expo e2 = e;
    e2.e[k - 1] = static_cast<uint8_t>(e2.e[k - 1] + power);
    r.t_.emplace(e2, c);
  }
  return r;
}

Poly Poly::deriv(int k) const {
  Poly r(nvars_);
  for (const auto& [e, c] : t_) {
    if (e.e[k - 1] == 0) continue;
    Expo e2 = e;
    e2.e[k - 1] -= 1;
    r.add_term(e2, Scalar(static_cast<long>(e.e[k - 1])) * c);
  }
  return r;
}

Poly Poly::at_zero(int k) const {
  Poly r(nvars_);
  for (const auto& [e, c] : t_)
    if (e.e[k - 1] == 0) r.t_.emplace(e, c);
  return r;
}

Poly Poly::drop_last_var() const {
  Poly r(nvars_ - 1);
  for (const auto& [e, c] : t_) {
    if (e.e[nvars_ - 1] != 0) throw std::invalid_argument("Poly: last variable still present");
    r.t_.emplace(e, c);
  }
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int k = 0; k < nvars_; ++k) {
      if (e.e[k] == 0) continue;
      os << " x" << (k + 1);
      if (e.e[k] > 1) os << "^" << int(e.e[k]);
    }
  }
  return os.str();
}

}  // namespace sbo
