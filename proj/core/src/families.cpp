#include "sbo/families.hpp"

namespace sbo {

namespace {

using AK = AtomKind;

Scalar lam() { return Scalar::lambda(); }
Scalar lam_lin(long a, long b) { return Scalar(a) * Scalar::lambda() + Scalar(b); }

Scalar shift1(const Scalar& s) { return s.shift(GaussianRational(Rational(-1))); }

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

Scalar signed_scalar(int sgn, Scalar s) { return sgn < 0 ? -std::move(s) : std::move(s); }

OpExpr first_normal(int n, int p, int order) {
  Signature src = ambient_sig(n, p);
  if (order == 0) return OpExpr::scale(lam_lin(1, p), Chain(src).then(AK::Pullback).done());
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    for (int j = 0; j <= N; ++j) {
      Scalar c = signed_scalar(sign_pow(N - j), lam_lin(1, p - 2L * N) * coeff_a(n, N, j));
      terms.push_back(OpExpr::scale(
          c, Chain(src).then(AK::PartialN, 2 * N - 2 * j).then(AK::Pullback).then(AK::SliceLap, j).done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar q = Scalar(-2L * N) * lam_lin(2, n - 2L * N - 1) * shift1(coeff_b(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j), q),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 2 * j - 1)
                                        .then(AK::InteriorN)
                                        .then(AK::Pullback)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar r = Scalar(2L * N) * shift1(coeff_a(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), r),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 2 * j - 2)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
  } else {
    int N = (order - 1) / 2;
    for (int j = 0; j <= N; ++j) {
      Scalar c = signed_scalar(sign_pow(N - j), lam_lin(1, p - 2L * N - 1) * coeff_b(n, N, j));
      terms.push_back(OpExpr::scale(
          c,
          Chain(src).then(AK::PartialN, 2 * N + 1 - 2 * j).then(AK::Pullback).then(AK::SliceLap, j).done()));
    }
    for (int j = 0; j <= N; ++j) {
      Scalar q = shift1(coeff_a(n, N, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j), q),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 2 * j)
                                        .then(AK::InteriorN)
                                        .then(AK::Pullback)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar r = Scalar(2L * N) * shift1(coeff_b(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), r),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 1 - 2 * j)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
  }
  return OpExpr::sum(std::move(terms));
}

OpExpr first_geometric(int n, int p, int order) {
  Signature src = ambient_sig(n, p);
  if (order == 0) return OpExpr::scale(lam_lin(1, p), Chain(src).then(AK::Pullback).done());
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    for (int i = 0; i <= N; ++i) {
      Scalar c = lam_lin(1, p) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                           .done()));
    }
    for (int i = 1; i <= N - 1; ++i) {
      Scalar c = lam_lin(1, p - 2L * i) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                           .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = lam_lin(1, p - 2L * N) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                           .done()));
    }
  } else {
    int N = (order - 1) / 2;
    for (int i = 1; i <= N; ++i) {
      terms.push_back(OpExpr::scale(coeff_gamma(n, N, i, p), Chain(src)
                                                                 .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                                                 .then(AK::InteriorN)
                                                                 .then(AK::Pullback)
                                                                 .then(AK::SliceD)
                                                                 .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                                                 .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = lam_lin(1, p) * coeff_beta(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .then(AK::SliceD)
                                           .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                           .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = lam_lin(1, p - 2L * N - 1) * coeff_beta(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                           .then(AK::AmbientD)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                           .done()));
    }
  }
  return OpExpr::sum(std::move(terms));
}

OpExpr second_normal(int n, int p, int order) {
  Signature src = ambient_sig(n, p);
  if (order == 0)
    return OpExpr::scale(-lam_lin(1, n - static_cast<long>(p)),
                         Chain(src).then(AK::InteriorN).then(AK::Pullback).done());
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    for (int j = 0; j <= N; ++j) {
      Scalar c = signed_scalar(sign_pow(N - j),
                               -lam_lin(1, n - static_cast<long>(p) - 2 * N + 2 * j) * coeff_a(n, N, j));
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .then(AK::PartialN, 2 * N - 2 * j)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .then(AK::SliceLap, j)
                                           .done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar q = Scalar(-2L * N) * lam_lin(2, n - 2L * N - 1) * shift1(coeff_b(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), q),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 1 - 2 * j)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar r = Scalar(2L * N) * shift1(coeff_a(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), r),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 2 - 2 * j)
                                        .then(AK::InteriorN)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
  } else {
    int N = (order - 1) / 2;
    for (int j = 0; j <= N; ++j) {
      Scalar c = signed_scalar(
          sign_pow(N - j), -lam_lin(1, n - static_cast<long>(p) - 2 * N + 2 * j - 1) * coeff_b(n, N, j));
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .then(AK::PartialN, 2 * N + 1 - 2 * j)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .then(AK::SliceLap, j)
                                           .done()));
    }
    for (int j = 0; j <= N; ++j) {
      Scalar q = shift1(coeff_a(n, N, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), q),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 2 * j)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
    for (int j = 0; j <= N - 1; ++j) {
      Scalar r = Scalar(2L * N) * shift1(coeff_b(n, N - 1, j));
      terms.push_back(OpExpr::scale(signed_scalar(sign_pow(N - j - 1), r),
                                    Chain(src)
                                        .then(AK::PartialN, 2 * N - 1 - 2 * j)
                                        .then(AK::InteriorN)
                                        .then(AK::Pullback)
                                        .then(AK::SliceDelta)
                                        .then(AK::SliceD)
                                        .then(AK::SliceLap, j)
                                        .done()));
    }
  }
  return OpExpr::sum(std::move(terms));
}

OpExpr second_geometric(int n, int p, int order) {
  Signature src = ambient_sig(n, p);
  if (order == 0)
    return OpExpr::scale(-lam_lin(1, n - static_cast<long>(p)),
                         Chain(src).then(AK::InteriorN).then(AK::Pullback).done());
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    for (int i = 0; i <= N; ++i) {
      Scalar c = -lam_lin(1, n - static_cast<long>(p) - 2 * N) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                           .done()));
    }
    for (int i = 1; i <= N - 1; ++i) {
      Scalar c = -lam_lin(1, n - static_cast<long>(p) - 2 * i) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                           .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = -lam_lin(1, n - static_cast<long>(p)) * coeff_alpha(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                           .then(AK::InteriorN)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                           .done()));
    }
  } else {
    int N = (order - 1) / 2;
    for (int i = 1; i <= N; ++i) {
      terms.push_back(
          OpExpr::scale(-coeff_gamma(n, N, i, n - p), Chain(src)
                                                          .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                                          .then(AK::Pullback)
                                                          .then(AK::SliceDelta)
                                                          .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                                          .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = lam_lin(1, n - static_cast<long>(p) - 2 * N - 1) * coeff_beta(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                           .then(AK::AmbientDelta)
                                           .then(AK::Pullback)
                                           .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                           .done()));
    }
    for (int i = 0; i <= N; ++i) {
      Scalar c = -lam_lin(1, n - static_cast<long>(p)) * coeff_beta(n, N, i);
      terms.push_back(OpExpr::scale(c, Chain(src)
                                           .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                           .then(AK::Pullback)
                                           .then(AK::SliceDelta)
                                           .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                           .done()));
    }
  }
  return OpExpr::sum(std::move(terms));
}

}  // namespace

OpExpr family_first(int n, int p, int order, Presentation pres) {
  if (p < 0 || p > n - 1) throw std::invalid_argument("family_first: degree out of range");
  if (order < 0) throw std::invalid_argument("family_first: negative order");
  return pres == Presentation::Normal ? first_normal(n, p, order) : first_geometric(n, p, order);
}

OpExpr family_second(int n, int p, int order, Presentation pres) {
  if (p < 1 || p > n) throw std::invalid_argument("family_second: degree out of range");
  if (order < 0) throw std::invalid_argument("family_second: negative order");
  return pres == Presentation::Normal ? second_normal(n, p, order) : second_geometric(n, p, order);
}

OpExpr family_third(int n, int p, int order, Presentation pres) {
  if (!(p == 0 && order >= 1) && !(order == 1 && p >= 0 && p <= n - 2))
    throw std::invalid_argument("family_third: unsupported (p, order)");
  Signature src = ambient_sig(n, p);
  if (order == 1)
    return Chain(src).then(AK::Pullback).then(AK::SliceD).done();
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    GaussianRational l0{Rational(2L * N - 1)};
    for (int j = 0; j <= N - 1; ++j) {
      Scalar c = signed_scalar(sign_pow(N - j - 1), Scalar(coeff_b(n, N - 1, j).eval_at(l0)));
      if (pres == Presentation::Normal) {
        terms.push_back(OpExpr::scale(c, Chain(src)
                                             .then(AK::PartialN, 2 * N - 2 * j - 1)
                                             .then(AK::Pullback)
                                             .pair_pow(AK::SliceDelta, AK::SliceD, j)
                                             .then(AK::SliceD)
                                             .done()));
      } else {
        // beta_i^{(N-1)}(2N-1) (d delta)^{N-i-1} d iota i_n dbar (deltabar dbar)^i
        int i = j;
        Scalar g = Scalar(coeff_beta(n, N - 1, i).eval_at(l0));
        terms.push_back(OpExpr::scale(g, Chain(src)
                                             .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                             .then(AK::AmbientD)
                                             .then(AK::InteriorN)
                                             .then(AK::Pullback)
                                             .then(AK::SliceD)
                                             .pair_pow(AK::SliceD, AK::SliceDelta, N - i - 1)
                                             .done()));
      }
    }
  } else {
    int N = (order - 1) / 2;
    GaussianRational l0{Rational(2L * N)};
    for (int j = 0; j <= N; ++j) {
      if (pres == Presentation::Normal) {
        Scalar c = signed_scalar(sign_pow(N - j), Scalar(coeff_a(n, N, j).eval_at(l0)));
        terms.push_back(OpExpr::scale(c, Chain(src)
                                             .then(AK::PartialN, 2 * N - 2 * j)
                                             .then(AK::Pullback)
                                             .pair_pow(AK::SliceDelta, AK::SliceD, j)
                                             .then(AK::SliceD)
                                             .done()));
      } else {
        int i = j;
        Scalar g = Scalar(coeff_alpha(n, N, i).eval_at(l0));
        terms.push_back(OpExpr::scale(g, Chain(src)
                                             .pair_pow(AK::AmbientDelta, AK::AmbientD, i)
                                             .then(AK::Pullback)
                                             .then(AK::SliceD)
                                             .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                             .done()));
      }
    }
  }
  return OpExpr::sum(std::move(terms));
}

Rational family_third_lambda(int n, int p, int order) {
  (void)n;
  if (p == 0) return Rational(order - 1);
  return Rational(-static_cast<long>(p));
}

OpExpr family_fourth(int n, int p, int order, Presentation pres) {
  if (!(p == n && order >= 1) && !(order == 1 && p >= 2 && p <= n))
    throw std::invalid_argument("family_fourth: unsupported (p, order)");
  Signature src = ambient_sig(n, p);
  // For p < n only the first-order operator exists; at p = n it is the
  // order-one member of the sequence, which carries the opposite sign.
  if (order == 1 && p != n)
    return Chain(src).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta).done();
  std::vector<OpExpr> terms;
  if (order % 2 == 0) {
    int N = order / 2;
    GaussianRational l0{Rational(2L * N - 1)};
    for (int j = 0; j <= N - 1; ++j) {
      if (pres == Presentation::Normal) {
        Scalar c = signed_scalar(sign_pow(N - j), Scalar(coeff_b(n, N - 1, j).eval_at(l0)));
        terms.push_back(OpExpr::scale(c, Chain(src)
                                             .then(AK::PartialN, 2 * N - 2 * j - 1)
                                             .then(AK::InteriorN)
                                             .then(AK::Pullback)
                                             .pair_pow(AK::SliceD, AK::SliceDelta, j)
                                             .then(AK::SliceDelta)
                                             .done()));
      } else {
        int i = j;
        Scalar g = Scalar(coeff_beta(n, N - 1, i).eval_at(l0));
        terms.push_back(OpExpr::scale(g, Chain(src)
                                             .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                             .then(AK::AmbientDelta)
                                             .then(AK::Pullback)
                                             .then(AK::SliceDelta)
                                             .pair_pow(AK::SliceDelta, AK::SliceD, N - i - 1)
                                             .done()));
      }
    }
  } else {
    int N = (order - 1) / 2;
    GaussianRational l0{Rational(2L * N)};
    for (int j = 0; j <= N; ++j) {
      if (pres == Presentation::Normal) {
        Scalar c = signed_scalar(sign_pow(N - j + 1), Scalar(coeff_a(n, N, j).eval_at(l0)));
        terms.push_back(OpExpr::scale(c, Chain(src)
                                             .then(AK::PartialN, 2 * N - 2 * j)
                                             .then(AK::InteriorN)
                                             .then(AK::Pullback)
                                             .pair_pow(AK::SliceD, AK::SliceDelta, j)
                                             .then(AK::SliceDelta)
                                             .done()));
      } else {
        int i = j;
        Scalar g = -Scalar(coeff_alpha(n, N, i).eval_at(l0));
        terms.push_back(OpExpr::scale(g, Chain(src)
                                             .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                             .then(AK::InteriorN)
                                             .then(AK::Pullback)
                                             .then(AK::SliceDelta)
                                             .pair_pow(AK::SliceDelta, AK::SliceD, N - i)
                                             .done()));
      }
    }
  }
  return OpExpr::sum(std::move(terms));
}

Rational family_fourth_lambda(int n, int p, int order) {
  if (p == n) return Rational(order - 1);
  return Rational(p - static_cast<long>(n));
}

OpExpr proj_pm_slice(int n, int sign) {
  if (n % 2 == 0) throw std::invalid_argument("proj_pm_slice: n must be odd");
  int m = n - 1, p = (n - 1) / 2;
  Signature s = slice_sig(n, p);
  GaussianRational u = (m % 4 == 0) ? GaussianRational(Rational(sign))
                                    : GaussianRational(Rational(0), Rational(-sign));
  return OpExpr::sum({OpExpr::scale(Scalar(Rational(1, 2)), OpExpr::identity(s)),
                      OpExpr::scale(Scalar(u * GaussianRational(Rational(1, 2))),
                                    OpExpr::atom(AK::SliceStar, s))});
}

OpExpr proj_pm_ambient(int n, int sign) {
  if (n % 2 != 0) throw std::invalid_argument("proj_pm_ambient: n must be even");
  int p = n / 2;
  Signature s = ambient_sig(n, p);
  GaussianRational u = (n % 4 == 0) ? GaussianRational(Rational(sign))
                                    : GaussianRational(Rational(0), Rational(-sign));
  return OpExpr::sum({OpExpr::scale(Scalar(Rational(1, 2)), OpExpr::identity(s)),
                      OpExpr::scale(Scalar(u * GaussianRational(Rational(1, 2))),
                                    OpExpr::atom(AK::AmbientStar, s))});
}

OpExpr middle_degree(int n, MiddleVariant v, int sign, int order) {
  switch (v) {
    case MiddleVariant::SliceProj: {
      int p = (n - 1) / 2;
      return OpExpr::compose({proj_pm_slice(n, sign), family_first(n, p, order)});
    }
    case MiddleVariant::SliceProjStar: {
      int p = (n - 1) / 2;
      OpExpr star = OpExpr::atom(AK::AmbientStar, ambient_sig(n, (n + 1) / 2));
      return OpExpr::compose({proj_pm_slice(n, sign), family_first(n, p, order), star});
    }
    case MiddleVariant::AmbientRestrict: {
      int p = n / 2;
      return OpExpr::compose({family_first(n, p, order), proj_pm_ambient(n, sign)});
    }
  }
  throw std::logic_error("middle_degree: bad variant");
}

OpExpr branson_gover(int dim, int p, int N, Side side) {
  Signature s{dim, p, side};
  AtomKind d = side == Side::Slice ? AK::SliceD : AK::AmbientD;
  AtomKind del = side == Side::Slice ? AK::SliceDelta : AK::AmbientDelta;
  Scalar half_dim(Rational(dim, 2));
  OpExpr dd = Chain(s).pair_pow(del, d, N).done();   // (delta d)^N
  OpExpr sd = Chain(s).pair_pow(d, del, N).done();   // (d delta)^N
  return OpExpr::sum({OpExpr::scale(half_dim - Scalar(p) + Scalar(N), dd),
                      OpExpr::scale(half_dim - Scalar(p) - Scalar(N), sd)});
}

OpExpr gauge_companion(int m, int p) {
  if (m % 2 != 0) throw std::invalid_argument("gauge_companion: dimension must be even");
  int k = (m - 2 * p) / 2;
  if (k < 0 || 2 * k != m - 2 * p) throw std::invalid_argument("gauge_companion: bad degree");
  Signature s{m, p, Side::Slice};
  return Chain(s).pair_pow(AK::SliceD, AK::SliceDelta, k).then(AK::SliceDelta).done();
}

OpExpr q_curvature_op(int m, int p) {
  if (m % 2 != 0) throw std::invalid_argument("q_curvature_op: dimension must be even");
  int k = (m - 2 * p) / 2;
  if (k < 0 || 2 * k != m - 2 * p) throw std::invalid_argument("q_curvature_op: bad degree");
  Signature s{m, p, Side::Slice};
  return Chain(s).pair_pow(AK::SliceD, AK::SliceDelta, k).done();
}

OpExpr q_poly(int n, int p, int N) {
  Signature src = ambient_sig(n, p);
  std::vector<OpExpr> terms;
  for (int i = 0; i <= N; ++i) {
    terms.push_back(OpExpr::scale(coeff_alpha(n, N, i), Chain(src)
                                                            .pair_pow(AK::AmbientD, AK::AmbientDelta, i)
                                                            .then(AK::Pullback)
                                                            .pair_pow(AK::SliceD, AK::SliceDelta, N - i)
                                                            .done()));
  }
  return OpExpr::sum(std::move(terms));
}

RenormalizedFamily family_first_renorm(int n, int p, int order) {
  if (order % 2 != 0) throw std::invalid_argument("family_first_renorm: even orders only");
  return {family_first(n, p, order), lam_lin(1, p - static_cast<long>(order))};
}

RenormalizedFamily family_second_renorm(int n, int p, int order) {
  if (order % 2 != 0) throw std::invalid_argument("family_second_renorm: even orders only");
  return {family_second(n, p, order), lam_lin(1, n - static_cast<long>(p))};
}

namespace {

OpExpr op_divide_coeffs(const OpExpr& e, const Scalar& divisor) {
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      throw std::domain_error("renorm_at: bare atom is not divisible");
    case OpExpr::Tag::Scale:
      return OpExpr::scale(e.coeff().divide_exact(divisor), e.children()[0]);
    case OpExpr::Tag::Sum: {
      if (e.children().empty()) return e;
      std::vector<OpExpr> ch;
      for (const auto& c : e.children()) ch.push_back(op_divide_coeffs(c, divisor));
      return OpExpr::sum(std::move(ch));
    }
    case OpExpr::Tag::Compose:
      // divide exactly one factor; the leftmost divisible one
      for (size_t k = 0; k < e.children().size(); ++k) {
        try {
          std::vector<OpExpr> ch = e.children();
          ch[k] = op_divide_coeffs(ch[k], divisor);
          return OpExpr::compose(std::move(ch));
        } catch (const std::domain_error&) {
        }
      }
      throw std::domain_error("renorm_at: no divisible factor");
  }
  throw std::logic_error("op_divide_coeffs: bad node");
}

}  // namespace

OpExpr renorm_at(const RenormalizedFamily& f, const GaussianRational& lambda0) {
  GaussianRational d = f.divisor.eval_at(lambda0);
  if (!d.is_zero())
    return OpExpr::scale(Scalar(GaussianRational(1) / d), specialize(f.op, lambda0));
  // Removable case: every coefficient carries the divisor as a factor.
  return specialize(op_divide_coeffs(f.op, f.divisor), lambda0);
}

OpExpr branson_gover_renorm(int dim, int p, int N, Side side) {
  Rational d = Rational(dim, 2) - Rational(p) + Rational(N);
  if (d.is_zero()) throw std::domain_error("branson_gover_renorm: divisor vanishes");
  return OpExpr::scale(Scalar(Rational(1) / d), branson_gover(dim, p, N, side));
}

OpExpr curved_first_flat(int n, int p, const Scalar& mu) {
  Signature src = ambient_sig(n, p);
  return OpExpr::sum(
      {OpExpr::scale(mu, Chain(src).then(AK::AmbientD).then(AK::InteriorN).then(AK::Pullback).done()),
       OpExpr::scale(mu + Scalar(1),
                     Chain(src).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceD).done())});
}

OpExpr curved_second_flat(int n, int p, const Scalar& mu) {
  Signature src = ambient_sig(n, p);
  Scalar base = Scalar(n - 2L * p) + mu;
  return OpExpr::sum(
      {OpExpr::scale(base + Scalar(1), Chain(src).then(AK::AmbientDelta).then(AK::Pullback).done()),
       OpExpr::scale(-(base + Scalar(2)), Chain(src).then(AK::Pullback).then(AK::SliceDelta).done())});
}

}  // namespace sbo
