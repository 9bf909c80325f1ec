#include "sbo/rep.hpp"

#include <sstream>

namespace sbo {

std::string Generator::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::EPlus: os << "E+" << i; break;
    case Kind::EMinus: os << "E-" << i; break;
    case Kind::Grading: os << "E"; break;
    case Kind::Rotation: os << "M" << i << j; break;
  }
  return os.str();
}

std::vector<Generator> subalgebra_generators(int sub) {
  std::vector<Generator> g;
  for (int j = 1; j <= sub; ++j) g.push_back(Generator::eplus(j));
  for (int j = 1; j <= sub; ++j) g.push_back(Generator::eminus(j));
  g.push_back(Generator::grading());
  for (int i = 1; i <= sub; ++i)
    for (int j = i + 1; j <= sub; ++j) g.push_back(Generator::rotation(i, j));
  return g;
}

namespace {

/// Derivation extension of the axis map a -> (dx^to at a's slot), summed over
/// the axes of each component; sign handled by interior-then-wedge.
PolyForm replace_axis(const PolyForm& w, int from, int to) {
  // dx^from -> dx^to in each wedge slot.
  return wedge_axis(to, interior(from, w));
}

PolyForm euler_x(const PolyForm& w) {
  PolyForm r(w.ambient_dim(), w.degree());
  for (int k = 1; k <= w.ambient_dim(); ++k) {
    PolyForm t = partial_axis(k, w);
    for (const auto& [mask, c] : t.comps()) r.add_comp(mask, c.times_var(k));
  }
  return r;
}

PolyForm times_r2(const PolyForm& w) {
  PolyForm r(w.ambient_dim(), w.degree());
  for (int k = 1; k <= w.ambient_dim(); ++k)
    for (const auto& [mask, c] : w.comps()) r.add_comp(mask, c.times_var(k, 2));
  return r;
}

PolyForm times_var_form(const PolyForm& w, int k) {
  PolyForm r(w.ambient_dim(), w.degree());
  for (const auto& [mask, c] : w.comps()) r.add_comp(mask, c.times_var(k));
  return r;
}

}  // namespace

PolyForm act_dual(int dim, const Scalar& lambda, const Generator& g, const PolyForm& w) {
  if (w.ambient_dim() != dim) throw std::invalid_argument("act_dual: dimension mismatch");
  switch (g.kind) {
    case Generator::Kind::EMinus:
      return partial_axis(g.i, w);
    case Generator::Kind::Grading:
      return euler_x(w) - w.scaled(lambda);
    case Generator::Kind::Rotation: {
      // Vector-field rotation plus its induced action on the covector slots.
      PolyForm r = times_var_form(partial_axis(g.j, w), g.i) - times_var_form(partial_axis(g.i, w), g.j);
      r += replace_axis(w, g.j, g.i) - replace_axis(w, g.i, g.j);
      return r;
    }
    case Generator::Kind::EPlus: {
      int j = g.i;
      PolyForm r = times_r2(partial_axis(j, w)).scaled(Scalar(Rational(-1, 2)));
      r += times_var_form(euler_x(w) - w.scaled(lambda), j);
      // + sum_k x_k T_{jk}, with T_{jk}: dx^a -> dx^j d_{ka} - dx^k d_{ja}.
      for (int k = 1; k <= dim; ++k) {
        PolyForm t = replace_axis(w, k, j);
        if (!t.is_zero()) r += times_var_form(t, k);
      }
      PolyForm u = interior(j, w);  // all replacements dx^j -> dx^k, times x_k
      if (!u.is_zero()) {
        for (int k = 1; k <= dim; ++k) r -= times_var_form(wedge_axis(k, u), k);
      }
      return r;
    }
  }
  throw std::logic_error("act_dual: bad generator");
}

PolyForm fourier_P(int n, const Scalar& lambda, int j, const PolyForm& v) {
  if (v.ambient_dim() != n) throw std::invalid_argument("fourier_P: dimension mismatch");
  // (1/2) xi_j Lap + (lambda - E) d_j, Lap = sum d_k^2 (no sign).
  PolyForm lap(n, v.degree());
  for (int k = 1; k <= n; ++k) lap += partial_axis(k, partial_axis(k, v));
  PolyForm r = times_var_form(lap, j).scaled(Scalar(Rational(1, 2)));
  PolyForm dj = partial_axis(j, v);
  r += dj.scaled(lambda) - euler_x(dj);
  // - sum_k d_k (x) S_{kj}, with S_{kj}: E_a -> E_k d_{ja} - E_j d_{ka}.
  for (int k = 1; k <= n; ++k) {
    PolyForm dk = partial_axis(k, v);
    if (dk.is_zero()) continue;
    r -= replace_axis(dk, j, k);
    r += replace_axis(dk, k, j);
  }
  return r;
}

IntertwiningReport check_intertwining(const OpExpr& D, int order, const Scalar& lambda,
                                      int max_degree) {
  const Signature& src = D.source();
  const Signature& tgt = D.target();
  IntertwiningReport rep;
  Scalar lambda_shift = lambda - Scalar(order);
  auto basis = monomial_basis(src.dim, src.degree, max_degree);
  for (const Generator& g : subalgebra_generators(src.dim - 1)) {
    for (const PolyForm& w : basis) {
      PolyForm lhs = apply(D, act_dual(src.dim, lambda, g, w));
      PolyForm rhs = act_dual(tgt.dim, lambda_shift, g, apply(D, w));
      PolyForm res = lhs - rhs;
      ++rep.cases_checked;
      if (!res.is_zero()) rep.failures.push_back({g, w.str(), res});
    }
  }
  return rep;
}

}  // namespace sbo
