#include "sbo/singular.hpp"

#include "sbo/families.hpp"

namespace sbo {

namespace {

using AK = AtomKind;

/// xi_n^(top-2j) |xi'|^(2j) * w for every listed coefficient c_j.
PolyForm radial_sum(int n, int top, const std::vector<Scalar>& coeffs, const PolyForm& w) {
  PolyForm out(n, w.degree());
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
    if (coeffs[j].is_zero()) continue;
    int e = top - 2 * j;
    if (e < 0) throw std::logic_error("radial_sum: negative exponent");
    PolyForm base = w.scaled(coeffs[j]);
    // multiply by |xi'|^{2j} = (sum_{l<n} xi_l^2)^j
    for (int t = 0; t < j; ++t) {
      PolyForm s(n, w.degree());
      for (int l = 1; l <= n - 1; ++l)
        for (const auto& [mask, c] : base.comps()) s.add_comp(mask, c.times_var(l, 2));
      base = std::move(s);
    }
    PolyForm shifted(n, w.degree());
    for (const auto& [mask, c] : base.comps()) shifted.add_comp(mask, c.times_var(n, e));
    out += shifted;
  }
  return out;
}

PolyForm source_form(int n, AxisMask alpha) {
  return PolyForm::monomial(n, alpha, Expo{});
}

std::vector<AxisMask> source_basis(int n, int q) {
  std::vector<AxisMask> out;
  AxisMask full = (1u << (n - 1)) - 1u;
  for (AxisMask m = 0; m <= full; ++m)
    if (mask_degree(m) == q && (m & ~full) == 0) out.push_back(m);
  return out;
}

std::vector<Scalar> first_P(int n, int p, int M) {
  std::vector<Scalar> c;
  if (M % 2 == 0) {
    int N = M / 2;
    for (int j = 0; j <= N; ++j)
      c.push_back((Scalar::lambda() + Scalar(p - 2L * N)) * coeff_a(n, N, j));
  } else {
    int N = (M - 1) / 2;
    for (int j = 0; j <= N; ++j)
      c.push_back((Scalar::lambda() + Scalar(p - 2L * N - 1)) * coeff_b(n, N, j));
  }
  return c;
}

Scalar shift1(const Scalar& s) { return s.shift(GaussianRational(Rational(-1))); }

std::vector<Scalar> first_Q(int n, int M) {
  std::vector<Scalar> c;
  if (M % 2 == 0) {
    int N = M / 2;
    for (int j = 0; j <= N - 1; ++j)
      c.push_back(Scalar(-2L * N) * (Scalar(2) * Scalar::lambda() + Scalar(n - 2L * N - 1)) *
                  shift1(coeff_b(n, N - 1, j)));
  } else {
    int N = (M - 1) / 2;
    for (int j = 0; j <= N; ++j) c.push_back(shift1(coeff_a(n, N, j)));
  }
  return c;
}

std::vector<Scalar> first_R(int n, int M) {
  std::vector<Scalar> c;
  if (M % 2 == 0) {
    int N = M / 2;
    for (int j = 0; j <= N - 1; ++j) c.push_back(Scalar(2L * N) * shift1(coeff_a(n, N - 1, j)));
  } else {
    int N = (M - 1) / 2;
    for (int j = 0; j <= N - 1; ++j) c.push_back(Scalar(2L * N) * shift1(coeff_b(n, N - 1, j)));
  }
  return c;
}

std::vector<Scalar> second_P(int n, int p, int M) {
  std::vector<Scalar> c;
  if (M % 2 == 0) {
    int N = M / 2;
    for (int j = 0; j <= N; ++j)
      c.push_back(-(Scalar::lambda() + Scalar(n - static_cast<long>(p) - 2 * N + 2 * j)) *
                  coeff_a(n, N, j));
  } else {
    int N = (M - 1) / 2;
    for (int j = 0; j <= N; ++j)
      c.push_back(-(Scalar::lambda() + Scalar(n - static_cast<long>(p) - 2 * N + 2 * j - 1)) *
                  coeff_b(n, N, j));
  }
  return c;
}

UniPoly to_uni(const std::vector<Scalar>& c) {
  UniPoly u;
  u.c = c;
  u.trim();
  return u;
}

}  // namespace

SingularVector build_first(int n, int p, int M) {
  if (p < 0 || p > n - 1) throw std::invalid_argument("build_first: degree out of range");
  SingularVector v;
  v.n = n;
  v.vtype = VType::First;
  v.homogeneity = M;
  v.source_degree = p;
  v.target_degree = p;
  auto P = first_P(n, p, M), Q = first_Q(n, M), R = first_R(n, M);
  v.structure = SingularVector::Structure{P, Q, R};
  for (AxisMask a : source_basis(n, p)) {
    PolyForm w = source_form(n, a);
    PolyForm val = radial_sum(n, M, P, w);
    if (M >= 1 && p >= 1) {
      PolyForm enie = wedge_axis(n, euler_insert(w, n - 1));
      val += radial_sum(n, M - 1, Q, enie);
    }
    if (M >= 2 && p >= 1) {
      PolyForm awie = alpha_wedge(euler_insert(w, n - 1), n - 1);
      val += radial_sum(n, M - 2, R, awie);
    }
    v.components[a] = std::move(val);
  }
  return v;
}

SingularVector build_second(int n, int p, int M) {
  if (p < 1 || p > n) throw std::invalid_argument("build_second: degree out of range");
  SingularVector v;
  v.n = n;
  v.vtype = VType::Second;
  v.homogeneity = M;
  v.source_degree = p - 1;
  v.target_degree = p;
  auto P = second_P(n, p, M), Q = first_Q(n, M), R = first_R(n, M);
  v.structure = SingularVector::Structure{P, Q, R};
  for (AxisMask a : source_basis(n, p - 1)) {
    PolyForm w = source_form(n, a);
    PolyForm val = radial_sum(n, M, P, wedge_axis(n, w));
    if (M >= 1) val += radial_sum(n, M - 1, Q, alpha_wedge(w, n - 1));
    if (M >= 2 && p >= 2) {
      PolyForm t = wedge_axis(n, alpha_wedge(euler_insert(w, n - 1), n - 1));
      val += radial_sum(n, M - 2, R, t);
    }
    v.components[a] = std::move(val);
  }
  return v;
}

SingularVector build_third(int n, int p, int M) {
  bool ok = (p == 1 && M >= 2) || (M == 1 && p >= 1 && p <= n - 1);
  if (!ok) throw std::invalid_argument("build_third: unsupported (p, homogeneity)");
  SingularVector v;
  v.n = n;
  v.vtype = VType::Third;
  v.homogeneity = M;
  v.source_degree = p;
  v.target_degree = p - 1;
  std::vector<Scalar> P;
  if (M == 1) {
    v.fixed_lambda = GaussianRational(Rational(1 - static_cast<long>(p)));
    P.push_back(Scalar(1));
  } else if (M % 2 == 0) {
    int N = M / 2;
    GaussianRational l0{Rational(2L * N - 1)};
    v.fixed_lambda = l0;
    for (int j = 0; j <= N - 1; ++j) P.push_back(Scalar(coeff_b(n, N - 1, j).eval_at(l0)));
  } else {
    int N = (M - 1) / 2;
    GaussianRational l0{Rational(2L * N)};
    v.fixed_lambda = l0;
    for (int j = 0; j <= N; ++j) P.push_back(Scalar(coeff_a(n, N, j).eval_at(l0)));
  }
  v.structure = SingularVector::Structure{P, {}, {}};
  for (AxisMask a : source_basis(n, p)) {
    PolyForm w = source_form(n, a);
    v.components[a] = radial_sum(n, M - 1, P, euler_insert(w, n - 1));
  }
  return v;
}

SingularVector build_fourth(int n, int p, int M) {
  bool ok = (p == n - 2 && M >= 2) || (M == 1 && p >= 0 && p <= n - 2);
  if (!ok) throw std::invalid_argument("build_fourth: unsupported (p, homogeneity)");
  SingularVector v;
  v.n = n;
  v.vtype = VType::Fourth;
  v.homogeneity = M;
  v.source_degree = p;
  v.target_degree = p + 2;
  std::vector<Scalar> P;
  if (M == 1) {
    v.fixed_lambda = GaussianRational(Rational(p - static_cast<long>(n) + 2));
    P.push_back(Scalar(1));
  } else if (M % 2 == 0) {
    int N = M / 2;
    GaussianRational l0{Rational(2L * N - 1)};
    v.fixed_lambda = l0;
    for (int j = 0; j <= N - 1; ++j) P.push_back(Scalar(coeff_b(n, N - 1, j).eval_at(l0)));
  } else {
    int N = (M - 1) / 2;
    GaussianRational l0{Rational(2L * N)};
    v.fixed_lambda = l0;
    for (int j = 0; j <= N; ++j) P.push_back(Scalar(coeff_a(n, N, j).eval_at(l0)));
  }
  v.structure = SingularVector::Structure{P, {}, {}};
  for (AxisMask a : source_basis(n, p)) {
    PolyForm w = source_form(n, a);
    v.components[a] = radial_sum(n, M - 1, P, wedge_axis(n, alpha_wedge(w, n - 1)));
  }
  return v;
}

SingularVector middle_projections(const SingularVector& v, int sign) {
  SingularVector out = v;
  if (v.n % 2 == 1 && 2 * v.source_degree == v.n - 1) {
    // Restrict the source to a slice-star eigenspace: precompose with the
    // projection (1/2)(id + mu^{-1} star).
    int m = v.n - 1;
    GaussianRational u = (m % 4 == 0) ? GaussianRational(Rational(sign))
                                      : GaussianRational(Rational(0), Rational(-sign));
    Scalar half(Rational(1, 2));
    Scalar uhalf(u * GaussianRational(Rational(1, 2)));
    out.vtype = v.vtype == VType::Second ? VType::SecondMiddle : VType::FirstMiddle;
    out.structure.reset();
    AxisMask full = (1u << (v.n - 1)) - 1u;
    for (auto& [a, w] : out.components) {
      // star of the source basis element (slice star in dimension n-1)
      PolyForm e = PolyForm::monomial(v.n - 1, a, Expo{});
      PolyForm se = hodge_star(e);
      AxisMask comp = full & ~a;
      Scalar star_sign(se.comps().begin()->second.terms().begin()->second);
      w = v.components.at(a).scaled(half) + v.components.at(comp).scaled(uhalf * star_sign);
    }
    return out;
  }
  if (v.n % 2 == 0 && 2 * v.target_degree == v.n) {
    // Project the values onto an ambient-star eigenspace.
    GaussianRational u = (v.n % 4 == 0) ? GaussianRational(Rational(sign))
                                        : GaussianRational(Rational(0), Rational(-sign));
    Scalar half(Rational(1, 2));
    Scalar uhalf(u * GaussianRational(Rational(1, 2)));
    out.vtype = v.vtype == VType::Second ? VType::SecondMiddle : VType::FirstMiddle;
    out.structure.reset();
    for (auto& [a, w] : out.components) w = w.scaled(half) + hodge_star(w).scaled(uhalf);
    return out;
  }
  throw std::invalid_argument("middle_projections: parameters are not a middle-degree case");
}

SingularVector star_postcompose(const SingularVector& v) {
  SingularVector out = v;
  out.target_degree = v.n - v.target_degree;
  out.structure.reset();
  for (auto& [a, w] : out.components) w = hodge_star(w);
  return out;
}

AnnihilationReport verify_annihilated(const SingularVector& v) {
  AnnihilationReport rep;
  Scalar lambda = v.fixed_lambda ? Scalar(*v.fixed_lambda) : Scalar::lambda();
  for (const auto& [a, w] : v.components) {
    for (int j = 1; j <= v.n - 1; ++j) {
      PolyForm r = fourier_P(v.n, lambda, j, w);
      ++rep.cases_checked;
      if (!r.is_zero()) rep.failures.push_back({a, j, r});
    }
  }
  return rep;
}

std::vector<UniPoly> ode_residuals(int n, int p, int N, int parity, const UniPoly& P,
                                   const UniPoly& Q, const UniPoly& R) {
  UniPoly t = UniPoly::var();
  UniPoly t2 = t * t;
  UniPoly Pp = P.deriv(), Ppp = Pp.deriv();
  UniPoly Qp = Q.deriv(), Qpp = Qp.deriv();
  UniPoly Rp = R.deriv(), Rpp = Rp.deriv();
  Scalar lam = Scalar::lambda();
  auto lin = [&](long a, long b) { return Scalar(a) * lam + Scalar(b); };
  std::vector<UniPoly> res;
  if (parity % 2 == 1) {
    res.push_back((t2 + t).scaled(Scalar(2)) * Ppp + t.scaled(Scalar(1 - 4L * N)) * Pp +
                  Pp.scaled(lin(2, n - 4L * N - 1)) + P.scaled(Scalar(N * (2L * N + 1))));
    res.push_back(Pp.scaled(Scalar(2)) + Q.scaled(Scalar(2L * N)) - t.scaled(Scalar(2)) * Qp +
                  t.scaled(Scalar(2)) * Rp + R.scaled(lin(1, n - static_cast<long>(p) - 2 * N)));
    res.push_back(Pp.scaled(Scalar(-2)) + R.scaled(lin(1, p - 2L * N - 1)));
    res.push_back(t.scaled(Scalar(2)) * Pp - P.scaled(Scalar(2L * N + 1)) +
                  Q.scaled(lin(1, p - 2L * N - 1)));
    res.push_back((t2 + t).scaled(Scalar(2)) * Qpp + t.scaled(Scalar(3 - 4L * N)) * Qp +
                  Qp.scaled(lin(2, n - 4L * N + 1)) + Q.scaled(Scalar(N * (2L * N - 1))) +
                  t.scaled(Scalar(2)) * Rp - R.scaled(Scalar(2L * N - 1)));
    res.push_back((t2 + t).scaled(Scalar(2)) * Rpp + t.scaled(Scalar(5 - 4L * N)) * Rp +
                  Rp.scaled(lin(2, n - 4L * N + 1)) + R.scaled(Scalar((N - 1) * (2L * N - 1))));
  } else {
    res.push_back((t2 + t).scaled(Scalar(2)) * Ppp + t.scaled(Scalar(3 - 4L * N)) * Pp +
                  Pp.scaled(lin(2, n - 4L * N + 1)) + P.scaled(Scalar(N * (2L * N - 1))));
    res.push_back(Pp.scaled(Scalar(2)) + Q.scaled(Scalar(2L * N - 1)) - t.scaled(Scalar(2)) * Qp +
                  t.scaled(Scalar(2)) * Rp +
                  R.scaled(lin(1, n - static_cast<long>(p) - 2 * N + 1)));
    res.push_back(Pp.scaled(Scalar(-2)) + R.scaled(lin(1, p - 2L * N)));
    res.push_back(t.scaled(Scalar(2)) * Pp - P.scaled(Scalar(2L * N)) + Q.scaled(lin(1, p - 2L * N)));
    res.push_back((t2 + t).scaled(Scalar(2)) * Qpp + t.scaled(Scalar(5 - 4L * N)) * Qp +
                  Qp.scaled(lin(2, n - 4L * N + 3)) + Q.scaled(Scalar((N - 1) * (2L * N - 1))) +
                  t.scaled(Scalar(2)) * Rp - R.scaled(Scalar(2L * N - 2)));
    res.push_back((t2 + t).scaled(Scalar(2)) * Rpp + t.scaled(Scalar(7 - 4L * N)) * Rp +
                  Rp.scaled(lin(2, n - 4L * N + 3)) + R.scaled(Scalar((N - 1) * (2L * N - 3))));
  }
  return res;
}

// -- ansatz solver -------------------------------------------------------------

namespace {

struct AnsatzHom {
  // kind 0: radial * w            (q = p)
  // kind 1: radial * E_n ^ iE(w)  (q = p), etc.; see assemble() below.
  int kind;
  int j;
};

std::vector<PolyForm> ansatz_values(int n, int p, int q, int M, int kind, int j,
                                    const std::vector<AxisMask>& basis) {
  std::vector<PolyForm> vals;
  std::vector<Scalar> coeffs(j + 1);
  coeffs[j] = Scalar(1);
  for (AxisMask a : basis) {
    PolyForm w = source_form(n, a);
    PolyForm body(n, p);
    int top = 0;
    if (q == p) {
      if (kind == 0) { body = w; top = M; }
      if (kind == 1) { body = wedge_axis(n, euler_insert(w, n - 1)); top = M - 1; }
      if (kind == 2) { body = alpha_wedge(euler_insert(w, n - 1), n - 1); top = M - 2; }
    } else if (q == p - 1) {
      if (kind == 0) { body = wedge_axis(n, w); top = M; }
      if (kind == 1) { body = alpha_wedge(w, n - 1); top = M - 1; }
      if (kind == 2) { body = wedge_axis(n, alpha_wedge(euler_insert(w, n - 1), n - 1)); top = M - 2; }
    } else if (q == p + 1) {
      body = euler_insert(w, n - 1);
      top = M - 1;
    } else if (q == p - 2) {
      body = wedge_axis(n, alpha_wedge(w, n - 1));
      top = M - 1;
    } else {
      throw std::invalid_argument("solve_ansatz: q must be within p-2..p+1");
    }
    vals.push_back(radial_sum(n, top, coeffs, body));
  }
  return vals;
}

}  // namespace

std::vector<SingularVector> solve_ansatz(int n, int p, int q, int M,
                                         const GaussianRational& lambda0) {
  std::vector<AxisMask> basis = source_basis(n, q);
  // Enumerate the admissible homogeneous homomorphisms.
  std::vector<AnsatzHom> homs;
  auto add_kind = [&](int kind, int top) {
    for (int j = 0; 2 * j <= top; ++j) homs.push_back({kind, j});
  };
  if (q == p) {
    add_kind(0, M);
    if (p >= 1) add_kind(1, M - 1);
    if (p >= 1) add_kind(2, M - 2);
  } else if (q == p - 1) {
    add_kind(0, M);
    add_kind(1, M - 1);
    if (q >= 1) add_kind(2, M - 2);
  } else if (q == p + 1) {
    add_kind(0, M - 1);
  } else if (q == p - 2) {
    add_kind(0, M - 1);
  } else {
    throw std::invalid_argument("solve_ansatz: q must be within p-2..p+1");
  }
  if (homs.empty()) return {};

  // Values of each hom and of P_j(lambda0) on them.
  std::vector<std::vector<PolyForm>> values;
  for (const auto& h : homs) values.push_back(ansatz_values(n, p, q, M, h.kind, h.j, basis));

  // Rows indexed by (basis index, j, mask, exponent); columns by homs.
  std::map<std::tuple<size_t, int, AxisMask, Expo>, std::vector<GaussianRational>> rows;
  Scalar lam0(lambda0);
  for (size_t col = 0; col < homs.size(); ++col) {
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      for (int j = 1; j <= n - 1; ++j) {
        PolyForm r = fourier_P(n, lam0, j, values[col][bi]);
        for (const auto& [mask, c] : r.comps())
          for (const auto& [e, s] : c.terms()) {
            auto& row = rows[{bi, j, mask, e}];
            row.resize(homs.size());
            row[col] = s.constant_term();
          }
      }
    }
  }

  // Exact kernel via Gauss-Jordan over Q(i).
  std::vector<std::vector<GaussianRational>> mat;
  for (auto& [k, row] : rows) {
    row.resize(homs.size());
    mat.push_back(row);
  }
  size_t ncols = homs.size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < mat.size(); ++c) {
    size_t sel = r;
    while (sel < mat.size() && mat[sel][c].is_zero()) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[r], mat[sel]);
    GaussianRational inv = GaussianRational(1) / mat[r][c];
    for (size_t cc = 0; cc < ncols; ++cc) mat[r][cc] *= inv;
    for (size_t rr = 0; rr < mat.size(); ++rr) {
      if (rr == r || mat[rr][c].is_zero()) continue;
      GaussianRational f = mat[rr][c];
      for (size_t cc = 0; cc < ncols; ++cc) mat[rr][cc] -= f * mat[r][cc];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }

  // At extremal form degrees the listed homomorphisms are not independent
  // (alpha ^ i_E acts as |xi'|^2 on top forms), so the coefficient kernel is
  // reduced to an independent set of assembled vectors.
  std::vector<SingularVector> kernel;
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<GaussianRational> sol(ncols);
    sol[free_col] = GaussianRational(1);
    for (size_t rr = 0; rr < pivot_col.size(); ++rr)
      sol[pivot_col[rr]] = -mat[rr][free_col];
    SingularVector v;
    v.n = n;
    v.vtype = q == p ? VType::First : (q == p - 1 ? VType::Second : (q == p + 1 ? VType::Third : VType::Fourth));
    v.homogeneity = M;
    v.source_degree = q;
    v.target_degree = p;
    v.fixed_lambda = lambda0;
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      PolyForm acc(n, p);
      for (size_t col = 0; col < ncols; ++col)
        if (!sol[col].is_zero()) acc += values[col][bi].scaled(Scalar(sol[col]));
      v.components[basis[bi]] = std::move(acc);
    }
    kernel.push_back(std::move(v));
  }
  if (kernel.size() <= 1) return kernel;
  // Reduce the candidates to an independent set.
  std::map<std::tuple<AxisMask, AxisMask, Expo>, size_t> coord;
  for (const auto& v : kernel)
    for (const auto& [src_mask, w] : v.components)
      for (const auto& [mask, c] : w.comps())
        for (const auto& [e, s] : c.terms()) coord.try_emplace({src_mask, mask, e}, coord.size());
  std::vector<SingularVector> independent;
  std::vector<std::vector<GaussianRational>> kept_rows;
  for (auto& v : kernel) {
    std::vector<GaussianRational> row(coord.size());
    for (const auto& [src_mask, w] : v.components)
      for (const auto& [mask, c] : w.comps())
        for (const auto& [e, s] : c.terms()) row[coord.at({src_mask, mask, e})] = s.constant_term();
    // eliminate against the kept rows
    for (const auto& kept : kept_rows) {
      size_t lead = 0;
      while (lead < kept.size() && kept[lead].is_zero()) ++lead;
      if (lead == kept.size()) continue;
      if (!row[lead].is_zero()) {
        GaussianRational f = row[lead] / kept[lead];
        for (size_t cidx = 0; cidx < row.size(); ++cidx) row[cidx] -= f * kept[cidx];
      }
    }
    bool zero = true;
    for (const auto& x : row)
      if (!x.is_zero()) {
        zero = false;
        break;
      }
    if (zero) continue;
    kept_rows.push_back(std::move(row));
    independent.push_back(std::move(v));
  }
  return independent;
}

// -- translation ---------------------------------------------------------------

TranslatedOperator translate(const SingularVector& v) {
  if (!v.structure) throw std::invalid_argument("translate: vector carries no closed-form structure");
  int n = v.n, M = v.homogeneity;
  const auto& st = *v.structure;
  // The operator runs opposite to the homomorphism: its source degree is the
  // vector's target degree.
  int p = v.target_degree;
  Signature src = ambient_sig(n, p);
  std::vector<OpExpr> terms;
  auto add = [&](const Scalar& c, Chain& chain) {
    if (c.is_zero()) return;
    terms.push_back(OpExpr::scale(c, chain.done()));
  };
  // Each power of the normal covariable contributes one factor of i; the
  // radial factor |xi'|^(2j) dualizes to the plain slice Laplacian power, so
  // a term of top exponent `top` carries i^(top-2j) = i^top (-1)^j.  The
  // j-alternation stays in the real operator, i^homogeneity is recorded.
  auto radial = [&](int top, const std::vector<Scalar>& coeffs, auto&& mk) {
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
      if (coeffs[j].is_zero()) continue;
      Scalar c = (j % 2 == 0) ? coeffs[j] : -coeffs[j];
      mk(c, top - 2 * j, j);
    }
  };
  switch (v.vtype) {
    case VType::First:
      radial(M, st.P, [&](const Scalar& c, int e, int j) {
        add(c, Chain(src).then(AK::PartialN, e).then(AK::Pullback).then(AK::SliceLap, j));
      });
      radial(M - 1, st.Q, [&](const Scalar& c, int e, int j) {
        add(c, Chain(src)
                   .then(AK::PartialN, e)
                   .then(AK::InteriorN)
                   .then(AK::Pullback)
                   .then(AK::SliceD)
                   .then(AK::SliceLap, j));
      });
      radial(M - 2, st.R, [&](const Scalar& c, int e, int j) {
        add(-c, Chain(src)
                    .then(AK::PartialN, e)
                    .then(AK::Pullback)
                    .then(AK::SliceDelta)
                    .then(AK::SliceD)
                    .then(AK::SliceLap, j));
      });
      break;
    case VType::Second:
      radial(M, st.P, [&](const Scalar& c, int e, int j) {
        add(c, Chain(src).then(AK::PartialN, e).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceLap, j));
      });
      radial(M - 1, st.Q, [&](const Scalar& c, int e, int j) {
        add(-c, Chain(src).then(AK::PartialN, e).then(AK::Pullback).then(AK::SliceDelta).then(AK::SliceLap, j));
      });
      radial(M - 2, st.R, [&](const Scalar& c, int e, int j) {
        add(-c, Chain(src)
                    .then(AK::PartialN, e)
                    .then(AK::InteriorN)
                    .then(AK::Pullback)
                    .then(AK::SliceDelta)
                    .then(AK::SliceD)
                    .then(AK::SliceLap, j));
      });
      break;
    case VType::Third:
      radial(M - 1, st.P, [&](const Scalar& c, int e, int j) {
        add(c, Chain(src).then(AK::PartialN, e).then(AK::Pullback).then(AK::SliceD).then(AK::SliceLap, j));
      });
      break;
    case VType::Fourth:
      radial(M - 1, st.P, [&](const Scalar& c, int e, int j) {
        add(-c, Chain(src)
                    .then(AK::PartialN, e)
                    .then(AK::InteriorN)
                    .then(AK::Pullback)
                    .then(AK::SliceDelta)
                    .then(AK::SliceLap, j));
      });
      break;
    default:
      throw std::invalid_argument("translate: unsupported vector type");
  }
  if (terms.empty())
    return {OpExpr::zero(src, slice_sig(n, v.source_degree)), GaussianRational(1)};
  GaussianRational phase(1);
  GaussianRational i = GaussianRational::i();
  for (int k = 0; k < M; ++k) phase *= i;
  return {OpExpr::sum(std::move(terms)), phase};
}

// -- component algebra -----------------------------------------------------------

SingularVector specialize_vector(const SingularVector& v, const GaussianRational& lambda0) {
  SingularVector out = v;
  out.fixed_lambda = lambda0;
  for (auto& [a, w] : out.components)
    w = w.map_coeffs([&](const Scalar& s) { return Scalar(s.eval_at(lambda0)); });
  if (out.structure) {
    auto ev = [&](std::vector<Scalar>& c) {
      for (auto& s : c) s = Scalar(s.eval_at(lambda0));
    };
    ev(out.structure->P);
    ev(out.structure->Q);
    ev(out.structure->R);
  }
  return out;
}

SingularVector derivative_vector(const SingularVector& v) {
  SingularVector out = v;
  out.structure.reset();
  for (auto& [a, w] : out.components)
    w = w.map_coeffs([](const Scalar& s) { return s.derivative(); });
  return out;
}

SingularVector compose_euler_insert(const SingularVector& v) {
  SingularVector out;
  out.n = v.n;
  out.vtype = v.vtype;
  out.homogeneity = v.homogeneity + 1;
  out.source_degree = v.source_degree + 1;
  out.target_degree = v.target_degree;
  out.fixed_lambda = v.fixed_lambda;
  for (AxisMask b : source_basis(v.n, out.source_degree)) {
    PolyForm acc(v.n, v.target_degree);
    for (int l : mask_axes(b)) {
      AxisMask rest = b & ~(1u << (l - 1));
      int s = mask_below(b, l);
      PolyForm term = v.components.at(rest);
      PolyForm shifted(v.n, term.degree());
      for (const auto& [mask, c] : term.comps()) shifted.add_comp(mask, c.times_var(l));
      acc += (s & 1) ? -shifted : shifted;
    }
    out.components[b] = std::move(acc);
  }
  return out;
}

SingularVector compose_alpha_wedge(const SingularVector& v) {
  SingularVector out;
  out.n = v.n;
  out.vtype = v.vtype;
  out.homogeneity = v.homogeneity + 1;
  out.source_degree = v.source_degree - 1;
  out.target_degree = v.target_degree;
  out.fixed_lambda = v.fixed_lambda;
  for (AxisMask b : source_basis(v.n, out.source_degree)) {
    PolyForm acc(v.n, v.target_degree);
    for (int l = 1; l <= v.n - 1; ++l) {
      if (mask_has(b, l)) continue;
      AxisMask big = b | (1u << (l - 1));
      int s = mask_below(b, l);
      PolyForm term = v.components.at(big);
      PolyForm shifted(v.n, term.degree());
      for (const auto& [mask, c] : term.comps()) shifted.add_comp(mask, c.times_var(l));
      acc += (s & 1) ? -shifted : shifted;
    }
    out.components[b] = std::move(acc);
  }
  return out;
}

SingularVector subtract(const SingularVector& a, const SingularVector& b) {
  SingularVector out = a;
  for (auto& [mask, w] : out.components) w -= b.components.at(mask);
  return out;
}

}  // namespace sbo
