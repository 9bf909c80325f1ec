#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sbo/form.hpp"

namespace sbo {

enum class Side { Ambient, Slice };

/// Where an operator expression lives: dim is the dimension of the space the
/// forms sit on (n for ambient, n-1 for the hyperplane).  Degrees outside
/// [0, dim] are legal in intermediate positions of a composition; such
/// composites act as the zero operator.
struct Signature {
  int dim = 0;
  int degree = 0;
  Side side = Side::Ambient;
  bool operator==(const Signature&) const = default;
};

enum class AtomKind {
  Id,
  SliceD,
  SliceDelta,
  SliceLap,
  SliceStar,
  AmbientD,
  AmbientDelta,
  AmbientLap,
  AmbientStar,
  Pullback,   // ambient (n,p) -> slice (n-1,p)
  InteriorN,  // i_{e_n} on ambient forms
  PartialN,   // d/dx_n on ambient forms
  TangD,      // tangential d on ambient forms (axes 1..n-1)
  TangDelta,
  TangLap,
};

/// Immutable typed operator expression: atoms, compositions (leftmost factor
/// applied last), sums, and Scalar scalings.
class OpExpr {
 public:
  enum class Tag { Atom, Compose, Sum, Scale };

  OpExpr() = default;

  static OpExpr atom(AtomKind k, const Signature& src);
  /// Convenience: identity on a given signature.
  static OpExpr identity(const Signature& s) { return atom(AtomKind::Id, s); }
  static OpExpr compose(std::vector<OpExpr> factors);
  static OpExpr sum(std::vector<OpExpr> terms);
  static OpExpr scale(Scalar c, OpExpr e);
  /// The zero operator with the given signatures (an empty sum).
  static OpExpr zero(const Signature& src, const Signature& tgt);

  bool valid() const { return static_cast<bool>(p_); }
  Tag tag() const;
  AtomKind atom_kind() const;
  const std::vector<OpExpr>& children() const;
  const Scalar& coeff() const;
  const Signature& source() const;
  const Signature& target() const;

  /// Flatten nested sums/compositions, fold scalars outward, drop zero and
  /// identity factors, combine like terms; canonical enough for structural
  /// comparison of normalized displays.
  OpExpr normalized() const;

  friend bool operator==(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator+(const OpExpr& a, const OpExpr& b) { return sum({a, b}); }
  friend OpExpr operator*(const OpExpr& a, const OpExpr& b) { return compose({a, b}); }

 private:
  struct Node;
  explicit OpExpr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

/// Apply an operator expression to a form matching its source signature.
PolyForm apply(const OpExpr& e, const PolyForm& w);

/// Evaluate every Scalar coefficient at lambda0.
OpExpr specialize(const OpExpr& e, const GaussianRational& lambda0);

/// Formal d/dlambda of the coefficients (Leibniz over compositions).
OpExpr derivative_op(const OpExpr& e);

}  // namespace sbo
