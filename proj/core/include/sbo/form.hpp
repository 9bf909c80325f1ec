#pragma once

#include <cstdint>
#include <vector>

#include "sbo/poly.hpp"

namespace sbo {

/// Strictly increasing axis set dx_{a_1} ^ ... ^ dx_{a_p}, stored as a bit
/// mask (bit k-1 set iff axis k occurs).
using AxisMask = uint32_t;

inline int mask_degree(AxisMask m) { return __builtin_popcount(m); }
inline bool mask_has(AxisMask m, int axis) { return (m >> (axis - 1)) & 1u; }
/// Number of axes in m strictly below `axis`.
inline int mask_below(AxisMask m, int axis) {
  return __builtin_popcount(m & ((1u << (axis - 1)) - 1u));
}
std::vector<int> mask_axes(AxisMask m);
AxisMask mask_of_axes(const std::vector<int>& axes);

/// Differential p-form on R^m with Poly coefficients.  Identically-zero
/// component polynomials are never stored.
class PolyForm {
 public:
  PolyForm() : m_(0), p_(0) {}
  /// Degrees outside [0, ambient_dim] are allowed and denote the zero form
  /// (no axis set can match them), so d and delta stay total.
  PolyForm(int ambient_dim, int degree) : m_(ambient_dim), p_(degree) {
    if (ambient_dim < 0 || ambient_dim > Expo::kMaxVars)
      throw std::invalid_argument("PolyForm: bad dimension");
  }

  static PolyForm monomial(int m, AxisMask axes, const Expo& e, Scalar c = Scalar(1));

  int ambient_dim() const { return m_; }
  int degree() const { return p_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<AxisMask, Poly>& comps() const { return t_; }
  int coeff_degree() const {
    int d = -1;
    for (const auto& [mask, c] : t_) d = std::max(d, c.total_degree());
    return d;
  }

  void add_comp(AxisMask mask, const Poly& c) {
    if (c.is_zero()) return;
    if (mask_degree(mask) != p_) throw std::invalid_argument("PolyForm: axis set does not match degree");
    auto [it, fresh] = t_.try_emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.t_ == b.t_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

  PolyForm scaled(const Scalar& c) const;
  template <typename F>
  PolyForm map_coeffs(F&& f) const {
    PolyForm r(m_, p_);
    for (const auto& [mask, c] : t_) r.add_comp(mask, c.map_coeffs(f));
    return r;
  }

  std::string str() const;

 private:
  int m_, p_;
  std::map<AxisMask, Poly> t_;
};

// -- exterior calculus ------------------------------------------------------
// naxes <= ambient_dim selects the tangential variants (sum over x_1..x_naxes
// only); the default -1 means all axes.

/// Exterior product; graded-commutative.
PolyForm wedge(const PolyForm& a, const PolyForm& b);
/// dx_k ^ (.)
PolyForm wedge_axis(int k, const PolyForm& w);
/// Insertion i_{e_k}.
PolyForm interior(int k, const PolyForm& w);
/// Exterior differential.
PolyForm ext_d(const PolyForm& w, int naxes = -1);
/// Codifferential, realized as -sum_k i_{e_k} d/dx_k.
PolyForm codifferential(const PolyForm& w, int naxes = -1);
/// Form Laplacian delta d + d delta = -sum_k (d/dx_k)^2 componentwise.
PolyForm laplacian(const PolyForm& w, int naxes = -1);
/// Hodge star for the Euclidean metric, orientation e_1 ^ ... ^ e_m.
PolyForm hodge_star(const PolyForm& w);
/// d/dx_k on coefficients.
PolyForm partial_axis(int k, const PolyForm& w);
/// Pull-back along x_m = 0: drops dx_m components and the normal variable.
PolyForm pullback(const PolyForm& w);
/// sum_k x_k i_{e_k}, over axes 1..naxes.
PolyForm euler_insert(const PolyForm& w, int naxes = -1);
/// sum_k x_k dx_k ^ (.), over axes 1..naxes.
PolyForm alpha_wedge(const PolyForm& w, int naxes = -1);

/// All x^g dx_I with |g| <= max_degree and |I| = p.
std::vector<PolyForm> monomial_basis(int m, int p, int max_degree);

}  // namespace sbo
