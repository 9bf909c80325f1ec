#pragma once

#include "sbo/coeffs.hpp"
#include "sbo/op_expr.hpp"

namespace sbo {

enum class Presentation { Normal, Geometric };

inline Signature ambient_sig(int n, int p) { return {n, p, Side::Ambient}; }
inline Signature slice_sig(int n, int p) { return {n - 1, p, Side::Slice}; }

/// Small helper to build compositions in application order.
class Chain {
 public:
  explicit Chain(Signature src) : cur_(src) {}
  Chain& then(AtomKind k) {
    OpExpr a = OpExpr::atom(k, cur_);
    cur_ = a.target();
    applied_.push_back(std::move(a));
    return *this;
  }
  Chain& then(AtomKind k, int times) {
    for (int t = 0; t < times; ++t) then(k);
    return *this;
  }
  /// (second then first), k times; e.g. pair_pow(d, delta, k) builds (d delta)^k.
  Chain& pair_pow(AtomKind first, AtomKind second, int k) {
    for (int t = 0; t < k; ++t) {
      then(second);
      then(first);
    }
    return *this;
  }
  const Signature& sig() const { return cur_; }
  OpExpr done() {
    if (applied_.empty()) return OpExpr::identity(cur_);
    std::vector<OpExpr> f(applied_.rbegin(), applied_.rend());
    return OpExpr::compose(std::move(f));
  }

 private:
  Signature cur_;
  std::vector<OpExpr> applied_;
};

// -- operator families --------------------------------------------------------
// All builders keep the spectral parameter symbolic unless stated otherwise.

/// First type, Omega^p(R^n) -> Omega^p(R^{n-1}), any order >= 0.
OpExpr family_first(int n, int p, int order, Presentation pres = Presentation::Normal);

/// Second type, Omega^p(R^n) -> Omega^{p-1}(R^{n-1}), any order >= 0.
OpExpr family_second(int n, int p, int order, Presentation pres = Presentation::Normal);

/// Third type, Omega^p(R^n) -> Omega^{p+1}(R^{n-1}); defined for p = 0 with
/// any order >= 1, or order = 1 with 0 <= p <= n-2.  Fixed spectral value.
OpExpr family_third(int n, int p, int order, Presentation pres = Presentation::Normal);
Rational family_third_lambda(int n, int p, int order);

/// Fourth type, Omega^p(R^n) -> Omega^{p-2}(R^{n-1}); defined for p = n with
/// any order >= 1, or order = 1 with 2 <= p <= n.  Fixed spectral value.
OpExpr family_fourth(int n, int p, int order, Presentation pres = Presentation::Normal);
Rational family_fourth_lambda(int n, int p, int order);

// -- middle-degree variants ---------------------------------------------------

/// Eigenprojection of the slice Hodge star on Omega^{(n-1)/2}(R^{n-1}); n odd.
OpExpr proj_pm_slice(int n, int sign);
/// Eigenprojection of the ambient Hodge star on Omega^{n/2}(R^n); n even.
OpExpr proj_pm_ambient(int n, int sign);

enum class MiddleVariant {
  SliceProj,      // n odd:  pr_pm o D^{((n-1)/2 -> (n-1)/2)}
  SliceProjStar,  // n odd:  pr_pm o D^{((n-1)/2 -> (n-1)/2)} o star_ambient
  AmbientRestrict  // n even: D^{(n/2 -> n/2)} o pr_pm_ambient
};
OpExpr middle_degree(int n, MiddleVariant v, int sign, int order);

// -- Branson-Gover / gauge companion / Q-curvature ----------------------------

/// L_{2N}^{(p)} on a dim-dimensional space (Slice means dim = n-1).
OpExpr branson_gover(int dim, int p, int N, Side side = Side::Slice);
/// G^{(p)}_{m+1-2p} = delta (d delta)^{(m-2p)/2} on R^m; m even.
OpExpr gauge_companion(int m, int p);
/// Critical Q-curvature operator (d delta)^{(m-2p)/2} on R^m; m even.
OpExpr q_curvature_op(int m, int p);
/// Q-curvature polynomial of order 2N on Omega^p(R^n), spectral parameter
/// symbolic.
OpExpr q_poly(int n, int p, int N);

// -- renormalized even-order families ------------------------------------------

struct RenormalizedFamily {
  OpExpr op;
  Scalar divisor;
};
RenormalizedFamily family_first_renorm(int n, int p, int order);
RenormalizedFamily family_second_renorm(int n, int p, int order);
/// Specialize and divide by the (nonzero) divisor value.
OpExpr renorm_at(const RenormalizedFamily& f, const GaussianRational& lambda0);
/// Renormalized Branson-Gover operator (monic in (delta d)^N).
OpExpr branson_gover_renorm(int dim, int p, int N, Side side = Side::Slice);

// -- first-order hypersurface families, flat specialization --------------------

/// mu iota* i_n dbar + (mu+1) d iota* i_n on Omega^p(R^n).
OpExpr curved_first_flat(int n, int p, const Scalar& mu);
/// (n-2p+mu+1) iota* deltabar - (n-2p+mu+2) delta iota* on Omega^p(R^n).
OpExpr curved_second_flat(int n, int p, const Scalar& mu);

}  // namespace sbo
