#include "sbo/form.hpp"

#include <sstream>

namespace sbo {

std::vector<int> mask_axes(AxisMask m) {
  std::vector<int> r;
  for (int k = 1; m; ++k, m >>= 1)
    if (m & 1u) r.push_back(k);
  return r;
}

AxisMask mask_of_axes(const std::vector<int>& axes) {
  AxisMask m = 0;
  for (int a : axes) m |= 1u << (a - 1);
  return m;
}

PolyForm PolyForm::monomial(int m, AxisMask axes, const Expo& e, Scalar c) {
  PolyForm w(m, mask_degree(axes));
  w.add_comp(axes, Poly::monomial(m, e, std::move(c)));
  return w;
}

PolyForm PolyForm::operator-() const {
  PolyForm r(m_, p_);
  for (const auto& [mask, c] : t_) r.t_.emplace(mask, -c);
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (m_ != o.m_ || p_ != o.p_) throw std::invalid_argument("PolyForm: signature mismatch in +");
  for (const auto& [mask, c] : o.t_) add_comp(mask, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (m_ != o.m_ || p_ != o.p_) throw std::invalid_argument("PolyForm: signature mismatch in -");
  for (const auto& [mask, c] : o.t_) add_comp(mask, -c);
  return *this;
}

PolyForm PolyForm::scaled(const Scalar& c) const {
  PolyForm r(m_, p_);
  if (c.is_zero()) return r;
  for (const auto& [mask, t] : t_) r.add_comp(mask, t.scaled(c));
  return r;
}

std::string PolyForm::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : t_) {
    if (!first) os << "  +  ";
    first = false;
    os << "[" << c.str() << "]";
    for (int a : mask_axes(mask)) os << " dx" << a;
  }
  return os.str();
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("wedge: dimension mismatch");
  PolyForm r(a.ambient_dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.comps())
    for (const auto& [mb, cb] : b.comps()) {
      if (ma & mb) continue;
      // Sign of sorting the concatenation (ma-axes, mb-axes).
      int inv = 0;
      for (int ax : mask_axes(mb)) inv += __builtin_popcount(ma & ~((1u << ax) - 1u));
      Poly c = ca * cb;
      r.add_comp(ma | mb, (inv & 1) ? -c : c);
    }
  return r;
}

PolyForm wedge_axis(int k, const PolyForm& w) {
  PolyForm r(w.ambient_dim(), w.degree() + 1);
  for (const auto& [mask, c] : w.comps()) {
    if (mask_has(mask, k)) continue;
    int s = mask_below(mask, k);
    r.add_comp(mask | (1u << (k - 1)), (s & 1) ? -c : c);
  }
  return r;
}

PolyForm interior(int k, const PolyForm& w) {
  if (k < 1 || k > w.ambient_dim()) throw std::invalid_argument("interior: axis out of range");
  PolyForm r(w.ambient_dim(), w.degree() - 1);
  for (const auto& [mask, c] : w.comps()) {
    if (!mask_has(mask, k)) continue;
    int s = mask_below(mask, k);
    r.add_comp(mask & ~(1u << (k - 1)), (s & 1) ? -c : c);
  }
  return r;
}

PolyForm ext_d(const PolyForm& w, int naxes) {
  if (naxes < 0) naxes = w.ambient_dim();
  PolyForm r(w.ambient_dim(), w.degree() + 1);
  for (const auto& [mask, c] : w.comps())
    for (int k = 1; k <= naxes; ++k) {
      if (mask_has(mask, k)) continue;
      Poly dc = c.deriv(k);
      if (dc.is_zero()) continue;
      int s = mask_below(mask, k);
      r.add_comp(mask | (1u << (k - 1)), (s & 1) ? -dc : dc);
    }
  return r;
}

PolyForm codifferential(const PolyForm& w, int naxes) {
  if (naxes < 0) naxes = w.ambient_dim();
  PolyForm r(w.ambient_dim(), w.degree() - 1);
  for (const auto& [mask, c] : w.comps())
    for (int k = 1; k <= naxes; ++k) {
      if (!mask_has(mask, k)) continue;
      Poly dc = c.deriv(k);
      if (dc.is_zero()) continue;
      int s = mask_below(mask, k) + 1;  // the leading minus sign
      r.add_comp(mask & ~(1u << (k - 1)), (s & 1) ? -dc : dc);
    }
  return r;
}

PolyForm laplacian(const PolyForm& w, int naxes) {
  if (naxes < 0) naxes = w.ambient_dim();
  PolyForm r(w.ambient_dim(), w.degree());
  for (const auto& [mask, c] : w.comps()) {
    Poly s(w.ambient_dim());
    for (int k = 1; k <= naxes; ++k) s -= c.deriv(k).deriv(k);
    r.add_comp(mask, s);
  }
  return r;
}

PolyForm hodge_star(const PolyForm& w) {
  int m = w.ambient_dim();
  AxisMask full = (m == 32) ? ~0u : ((1u << m) - 1u);
  PolyForm r(m, m - w.degree());
  for (const auto& [mask, c] : w.comps()) {
    AxisMask comp = full & ~mask;
    // Permutation sign of (mask axes asc, comp axes asc) against 1..m.
    int inv = 0;
    for (int ax : mask_axes(mask)) inv += mask_below(comp, ax);
    r.add_comp(comp, (inv & 1) ? -c : c);
  }
  return r;
}

PolyForm partial_axis(int k, const PolyForm& w) {
  PolyForm r(w.ambient_dim(), w.degree());
  for (const auto& [mask, c] : w.comps()) r.add_comp(mask, c.deriv(k));
  return r;
}

PolyForm pullback(const PolyForm& w) {
  int m = w.ambient_dim();
  PolyForm r(m - 1, w.degree());
  for (const auto& [mask, c] : w.comps()) {
    if (mask_has(mask, m)) continue;
    Poly cc = c.at_zero(m).drop_last_var();
    r.add_comp(mask, cc);
  }
  return r;
}

PolyForm euler_insert(const PolyForm& w, int naxes) {
  if (naxes < 0) naxes = w.ambient_dim();
  PolyForm r(w.ambient_dim(), w.degree() - 1);
  for (int k = 1; k <= naxes; ++k) {
    PolyForm t = interior(k, w);
    for (const auto& [mask, c] : t.comps()) r.add_comp(mask, c.times_var(k));
  }
  return r;
}

PolyForm alpha_wedge(const PolyForm& w, int naxes) {
  if (naxes < 0) naxes = w.ambient_dim();
  PolyForm r(w.ambient_dim(), w.degree() + 1);
  for (int k = 1; k <= naxes; ++k) {
    PolyForm t = wedge_axis(k, w);
    for (const auto& [mask, c] : t.comps()) r.add_comp(mask, c.times_var(k));
  }
  return r;
}

namespace {
void enum_expos(int m, int maxdeg, int var, Expo& cur, std::vector<Expo>& out) {
  if (var == m) {
    out.push_back(cur);
    return;
  }
  int used = cur.total();
  for (int d = 0; d + used <= maxdeg; ++d) {
    cur.e[var] = static_cast<uint8_t>(d);
    enum_expos(m, maxdeg, var + 1, cur, out);
  }
  cur.e[var] = 0;
}
}  // namespace

std::vector<PolyForm> monomial_basis(int m, int p, int max_degree) {
  std::vector<Expo> expos;
  Expo cur;
  enum_expos(m, max_degree, 0, cur, expos);
  std::vector<PolyForm> out;
  AxisMask full = (1u << m) - 1u;
  for (AxisMask mask = 0; mask <= full; ++mask) {
    if ((mask & ~full) || mask_degree(mask) != p) continue;
    for (const Expo& e : expos) out.push_back(PolyForm::monomial(m, mask, e));
  }
  return out;
}

}  // namespace sbo
