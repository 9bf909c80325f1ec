#include <doctest.h>

#include "sbo/families.hpp"
#include "sbo/rep.hpp"

using namespace sbo;

namespace {

PolyForm mono(int m, std::vector<int> axes, std::vector<int> exps, Scalar c = Scalar(1)) {
  Expo e;
  for (size_t k = 0; k < exps.size(); ++k) e.e[k] = static_cast<uint8_t>(exps[k]);
  return PolyForm::monomial(m, mask_of_axes(axes), e, std::move(c));
}

Scalar lam() { return Scalar::lambda(); }

PolyForm act(int dim, const Generator& g, const PolyForm& w) { return act_dual(dim, lam(), g, w); }

PolyForm bracket(int dim, const Generator& a, const Generator& b, const PolyForm& w) {
  return act(dim, a, act(dim, b, w)) - act(dim, b, act(dim, a, w));
}

}  // namespace

TEST_CASE("dual action on scalars and forms") {
  const int n = 3;
  // raising operator on the constant function: -lambda x_j
  CHECK(act(n, Generator::eplus(1), mono(n, {}, {0, 0, 0})) ==
        mono(n, {}, {1, 0, 0}, -lam()));
  // translation generators differentiate
  CHECK(act(n, Generator::eminus(2), mono(n, {}, {0, 1, 0})) == mono(n, {}, {0, 0, 0}));
  // the raising action on the normal component of a one-form picks up x_n dx_j
  PolyForm w = mono(n, {3}, {0, 0, 0});
  PolyForm r = act(n, Generator::eplus(1), w);
  PolyForm expect = mono(n, {1}, {0, 0, 1});  // + x_n dx^1 term
  bool found = false;
  for (const auto& [mask, c] : r.comps())
    if (mask == mask_of_axes({1}) && c == expect.comps().begin()->second) found = true;
  CHECK(found);
  // grading operator: Euler minus lambda
  CHECK(act(n, Generator::grading(), mono(n, {}, {2, 0, 0})) ==
        mono(n, {}, {2, 0, 0}, Scalar(2) - lam()));
  // rotations act on coefficients and on the covector slots
  CHECK(act(n, Generator::rotation(1, 2), mono(n, {2}, {0, 0, 0})) == mono(n, {1}, {0, 0, 0}));
  CHECK(act(n, Generator::rotation(1, 2), mono(n, {1}, {0, 0, 0})) == -mono(n, {2}, {0, 0, 0}));
}

TEST_CASE("bracket relations of the dual action") {
  // With the translation generators acting by +d/dx_j, the brackets close as
  // [E,Ej+] = Ej+, [E,Ej-] = -Ej-, [M12,E1+] = -E2+, while the mixed bracket
  // [Ei+, Ej-] carries a global minus sign against delta_ij E + M_ij.
  for (int n : {2, 3}) {
    for (int p : {0, 1}) {
      for (const PolyForm& w : monomial_basis(n, p, 3)) {
        CHECK(bracket(n, Generator::grading(), Generator::eplus(1), w) ==
              act(n, Generator::eplus(1), w));
        CHECK(bracket(n, Generator::grading(), Generator::eminus(1), w) ==
              -act(n, Generator::eminus(1), w));
        // diagonal mixed bracket
        CHECK(bracket(n, Generator::eplus(1), Generator::eminus(1), w) ==
              -act(n, Generator::grading(), w));
        if (n >= 3) {
          CHECK(bracket(n, Generator::eplus(1), Generator::eminus(2), w) ==
                -act(n, Generator::rotation(1, 2), w));
          CHECK(bracket(n, Generator::rotation(1, 2), Generator::eplus(1), w) ==
                -act(n, Generator::eplus(2), w));
          CHECK(bracket(n, Generator::rotation(1, 2), Generator::eminus(1), w) ==
                -act(n, Generator::eminus(2), w));
        }
      }
    }
  }
}

TEST_CASE("fourier side operators") {
  const int n = 3;
  Scalar l = lam();
  // scalar case: P_j annihilates the normal covariable
  CHECK(fourier_P(n, l, 1, mono(n, {}, {0, 0, 1})).is_zero());
  // P_j on its own covariable gives the constant lambda
  CHECK(fourier_P(n, l, 1, mono(n, {}, {1, 0, 0})) == mono(n, {}, {0, 0, 0}, l));
  // matches the second-order scalar formula on low-degree monomials
  for (const PolyForm& v : monomial_basis(n, 0, 3)) {
    for (int j = 1; j <= n - 1; ++j) {
      PolyForm direct(n, 0);
      PolyForm lap(n, 0);
      for (int k = 1; k <= n; ++k) lap += partial_axis(k, partial_axis(k, v));
      for (const auto& [mask, c] : lap.comps())
        direct.add_comp(mask, c.times_var(j).scaled(Scalar(Rational(1, 2))));
      PolyForm dj = partial_axis(j, v);
      direct += dj.scaled(l);
      for (int k = 1; k <= n; ++k) {
        PolyForm t = partial_axis(k, dj);
        for (const auto& [mask, c] : t.comps()) direct.add_comp(mask, -c.times_var(k));
      }
      CHECK(fourier_P(n, l, j, v) == direct);
    }
  }
}

TEST_CASE("intertwining checker") {
  Scalar l = lam();
  // order-zero family passes for every generator
  for (int n : {3, 4})
    for (int p = 0; p <= n - 1; ++p) {
      auto rep = check_intertwining(family_first(n, p, 0), 0, l, 2);
      CHECK(rep.passed());
      CHECK(rep.cases_checked > 0);
    }
  // first-order family on one-forms
  {
    auto rep = check_intertwining(family_first(3, 1, 1), 1, l, 3);
    CHECK(rep.passed());
  }
  // negative control: a weight mismatch is detected
  {
    OpExpr iota = OpExpr::atom(AtomKind::Pullback, ambient_sig(3, 1));
    auto rep = check_intertwining(iota, 1, l, 2);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.failures.empty());
  }
}
