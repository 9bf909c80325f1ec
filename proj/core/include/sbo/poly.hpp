#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "sbo/scalar.hpp"

namespace sbo {

/// Exponent vector of a monomial; at most kMaxVars variables.
struct Expo {
  static constexpr int kMaxVars = 8;
  std::array<uint8_t, kMaxVars> e{};

  int total() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  auto operator<=>(const Expo&) const = default;
};

/// Multivariate polynomial in x_1..x_m with Scalar coefficients.  Zero
/// coefficients are never stored.  Variables are 1-based in the API.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > Expo::kMaxVars) throw std::invalid_argument("Poly: bad variable count");
  }

  static Poly constant(int nvars, Scalar c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(Expo{}, std::move(c));
    return p;
  }
  static Poly monomial(int nvars, const Expo& e, Scalar c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(e, std::move(c));
    return p;
  }
  static Poly variable(int nvars, int k) {
    Expo e;
    e.e[k - 1] = 1;
    return monomial(nvars, e, Scalar(1));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.total());
    return d;
  }
  const std::map<Expo, Scalar>& terms() const { return t_; }

  void add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Scalar& c) const;
  /// Multiply by the variable x_k.
  Poly times_var(int k, int power = 1) const;
  /// Partial derivative in x_k.
  Poly deriv(int k) const;
  /// Substitute x_k = 0.
  Poly at_zero(int k) const;
  /// Drop the last variable (which must not occur) and shrink nvars by one.
  Poly drop_last_var() const;
  /// Apply a map to every Scalar coefficient (e.g. lambda evaluation).
  template <typename F>
  Poly map_coeffs(F&& f) const {
    Poly r(nvars_);
    for (const auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
  }

  std::string str() const;

 private:
  int nvars_;
  std::map<Expo, Scalar> t_;
};

}  // namespace sbo
