#include <doctest.h>

#include "sbo/form.hpp"

using namespace sbo;

namespace {

PolyForm mono(int m, std::vector<int> axes, std::vector<int> exps, Scalar c = Scalar(1)) {
  Expo e;
  for (size_t k = 0; k < exps.size(); ++k) e.e[k] = static_cast<uint8_t>(exps[k]);
  return PolyForm::monomial(m, mask_of_axes(axes), e, std::move(c));
}

}  // namespace

TEST_CASE("wedge product") {
  CHECK(wedge(mono(3, {1}, {}), mono(3, {2}, {})) == mono(3, {1, 2}, {}));
  CHECK(wedge(mono(3, {1}, {}), mono(3, {1}, {})).is_zero());
  // (x1 dx1) ^ (x2 dx2) = x1 x2 dx1^dx2
  CHECK(wedge(mono(3, {1}, {1, 0, 0}), mono(3, {2}, {0, 1, 0})) == mono(3, {1, 2}, {1, 1, 0}));
  // graded commutativity
  for (int m = 2; m <= 4; ++m)
    for (const PolyForm& a : monomial_basis(m, 1, 1))
      for (const PolyForm& b : monomial_basis(m, 2, 1)) {
        PolyForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((1 * 2) % 2 ? -ba : ba));
      }
  CHECK_THROWS_AS(wedge(mono(3, {1}, {}), mono(2, {2}, {0, 0})), std::invalid_argument);
}

TEST_CASE("exterior differential") {
  // d(x1 x2 dx1) = -x1 dx1^dx2
  CHECK(ext_d(mono(2, {1}, {1, 1})) == -mono(2, {1, 2}, {1, 0}));
  CHECK(ext_d(mono(4, {2, 3}, {0, 0, 0, 0})).is_zero());
  // d(x_n dx1) = -dx1^dx_n
  CHECK(ext_d(mono(3, {1}, {0, 0, 1})) == -mono(3, {1, 3}, {0, 0, 0}));
}

TEST_CASE("codifferential") {
  CHECK(codifferential(mono(2, {1}, {1, 0})) == -mono(2, {}, {0, 0}));
  CHECK(codifferential(mono(2, {1}, {0, 0})).is_zero());
  // (delta d + d delta)(x1^2 dx2) = -2 dx2
  PolyForm w = mono(2, {2}, {2, 0});
  CHECK(codifferential(ext_d(w)) + ext_d(codifferential(w)) == mono(2, {2}, {0, 0}, Scalar(-2)));
}

TEST_CASE("d and delta square to zero") {
  for (int m = 2; m <= 5; ++m)
    for (int p = 0; p <= m; ++p)
      for (const PolyForm& w : monomial_basis(m, p, 3)) {
        CHECK(ext_d(ext_d(w)).is_zero());
        if (p >= 2) CHECK(codifferential(codifferential(w)).is_zero());
        CHECK(laplacian(w) == codifferential(ext_d(w)) + ext_d(codifferential(w)));
      }
}

TEST_CASE("hodge star") {
  CHECK(hodge_star(mono(2, {1}, {0, 0})) == mono(2, {2}, {0, 0}));
  CHECK(hodge_star(mono(2, {2}, {0, 0})) == -mono(2, {1}, {0, 0}));
  CHECK(hodge_star(mono(3, {1, 2}, {0, 0, 0})) == mono(3, {3}, {0, 0, 0}));
  CHECK(hodge_star(hodge_star(mono(4, {1, 2}, {0, 0, 0, 0}))) == mono(4, {1, 2}, {0, 0, 0, 0}));
  // star star = (-1)^{p(m-p)}
  for (int m = 2; m <= 5; ++m)
    for (int p = 0; p <= m; ++p)
      for (const PolyForm& w : monomial_basis(m, p, 2)) {
        PolyForm ss = hodge_star(hodge_star(w));
        CHECK(ss == ((p * (m - p)) % 2 ? -w : w));
      }
}

TEST_CASE("hodge star conjugations of d and delta") {
  // star d star = (-1)^{m(p+1)+1} delta and star delta star = (-1)^{m(p+1)} d
  for (int m = 2; m <= 4; ++m)
    for (int p = 0; p <= m; ++p)
      for (const PolyForm& w : monomial_basis(m, p, 2)) {
        if (p <= m - 1) {
          PolyForm lhs = hodge_star(ext_d(hodge_star(w)));
          PolyForm rhs = codifferential(w);
          CHECK(lhs == ((m * (p + 1) + 1) % 2 ? -rhs : rhs));
          PolyForm a = hodge_star(ext_d(w));
          PolyForm b = codifferential(hodge_star(w));
          CHECK(a == ((p + 1) % 2 ? -b : b));
        }
        CHECK(hodge_star(ext_d(codifferential(w))) == codifferential(ext_d(hodge_star(w))));
        CHECK(hodge_star(laplacian(w)) == laplacian(hodge_star(w)));
      }
}

TEST_CASE("interior normal derivative euler alpha") {
  CHECK(interior(3, mono(3, {1, 3}, {0, 0, 0})) == -mono(3, {1}, {0, 0, 0}));
  CHECK(interior(3, wedge_axis(3, mono(3, {1}, {0, 0, 0}))) == mono(3, {1}, {0, 0, 0}));
  CHECK(euler_insert(mono(2, {1, 2}, {0, 0})) == mono(2, {2}, {1, 0}) - mono(2, {1}, {0, 1}));
  CHECK(alpha_wedge(mono(3, {}, {0, 0, 0}), 2) == mono(3, {1}, {1, 0, 0}) + mono(3, {2}, {0, 1, 0}));
  CHECK_THROWS_AS(interior(5, mono(3, {1}, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("pullback") {
  CHECK(pullback(mono(3, {1}, {0, 0, 1}) + mono(3, {3}, {0, 0, 0})).is_zero());
  CHECK(pullback(mono(3, {1}, {1, 0, 0})) == mono(2, {1}, {1, 0}));
  CHECK(pullback(mono(3, {1, 2}, {1, 0, 0}) + mono(3, {1, 2}, {0, 0, 1})) == mono(2, {1, 2}, {1, 0}));
}

TEST_CASE("relations between slice and ambient operators") {
  // on forms on R^n: iota d = d iota, i_n delta(tangential) = -delta i_n, etc.
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (const PolyForm& w : monomial_basis(n, p, 3)) {
        CHECK(pullback(ext_d(w)) == ext_d(pullback(w)));
        if (p >= 1)
          CHECK(interior(n, codifferential(w)) == -codifferential(interior(n, w), n - 1));
        // Cartan with the normal field: dn = i_n dbar + dbar i_n
        CHECK(interior(n, ext_d(w)) + ext_d(interior(n, w)) == partial_axis(n, w));
        // i_n dn = delta(tangential) - deltabar
        CHECK(interior(n, partial_axis(n, w)) == codifferential(w, n - 1) - codifferential(w));
        // iota dn = iota i_n dbar + d iota i_n
        CHECK(pullback(partial_axis(n, w)) ==
              pullback(interior(n, ext_d(w))) + ext_d(pullback(interior(n, w))));
        // dn^2 = Delta_tan - Delta_bar
        CHECK(partial_axis(n, partial_axis(n, w)) == laplacian(w, n - 1) - laplacian(w));
        // dn commutes with d, delta_tan, i_n
        CHECK(partial_axis(n, ext_d(w)) == ext_d(partial_axis(n, w)));
        CHECK(partial_axis(n, codifferential(w, n - 1)) ==
              codifferential(partial_axis(n, w), n - 1));
        if (p >= 1) CHECK(partial_axis(n, interior(n, w)) == interior(n, partial_axis(n, w)));
      }
}

TEST_CASE("binomial expansions of normal derivatives") {
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int k = 0; k <= 3; ++k)
        for (const PolyForm& w : monomial_basis(n, p, std::min(2 * k + 2, 4))) {
          auto lap_slice = [&](PolyForm v, int j) {
            for (int t = 0; t < j; ++t) v = laplacian(v);
            return v;
          };
          auto lap_amb = [&](PolyForm v, int j) {
            for (int t = 0; t < j; ++t) v = laplacian(v);
            return v;
          };
          auto dn_pow = [&](PolyForm v, int j) {
            for (int t = 0; t < j; ++t) v = partial_axis(n, v);
            return v;
          };
          // iota dn^{2k} = sum (-1)^i C(k,i) Delta^{k-i} iota Delta_bar^i
          PolyForm lhs = pullback(dn_pow(w, 2 * k));
          PolyForm rhs(n - 1, p);
          for (int i = 0; i <= k; ++i) {
            Scalar c(Rational::binomial(k, i));
            if (i & 1) c = -c;
            rhs += lap_slice(pullback(lap_amb(w, i)), k - i).scaled(c);
          }
          CHECK(lhs == rhs);
          // iota i_n dn^{2k+1} = sum (-1)^i C(k,i) Delta^{k-i}(delta iota - iota deltabar) Delta_bar^i
          if (p >= 1) {
            PolyForm lhs2 = pullback(interior(n, dn_pow(w, 2 * k + 1)));
            PolyForm rhs2(n - 1, p - 1);
            for (int i = 0; i <= k; ++i) {
              Scalar c(Rational::binomial(k, i));
              if (i & 1) c = -c;
              PolyForm mid =
                  codifferential(pullback(lap_amb(w, i))) - pullback(codifferential(lap_amb(w, i)));
              rhs2 += lap_slice(mid, k - i).scaled(c);
            }
            CHECK(lhs2 == rhs2);
          }
          // iota i_n dn^{2k} = sum (-1)^i C(k,i) Delta^{k-i} iota i_n Delta_bar^i
          if (p >= 1) {
            PolyForm lhs3 = pullback(interior(n, dn_pow(w, 2 * k)));
            PolyForm rhs3(n - 1, p - 1);
            for (int i = 0; i <= k; ++i) {
              Scalar c(Rational::binomial(k, i));
              if (i & 1) c = -c;
              rhs3 += lap_slice(pullback(interior(n, lap_amb(w, i))), k - i).scaled(c);
            }
            CHECK(lhs3 == rhs3);
          }
          // iota dn^{2k-1} = sum (-1)^i C(k-1,i) Delta^{k-1-i}(d iota i_n + iota i_n dbar) Delta_bar^i
          if (k >= 1) {
            PolyForm lhs4 = pullback(dn_pow(w, 2 * k - 1));
            PolyForm rhs4(n - 1, p);
            for (int i = 0; i <= k - 1; ++i) {
              Scalar c(Rational::binomial(k - 1, i));
              if (i & 1) c = -c;
              PolyForm mid = ext_d(pullback(interior(n, lap_amb(w, i)))) +
                             pullback(interior(n, ext_d(lap_amb(w, i))));
              rhs4 += lap_slice(mid, k - 1 - i).scaled(c);
            }
            CHECK(lhs4 == rhs4);
          }
        }
}

TEST_CASE("monomial basis counts") {
  CHECK(monomial_basis(1, 0, 1).size() == 2);
  CHECK(monomial_basis(2, 1, 0).size() == 2);
  CHECK(monomial_basis(2, 1, 1).size() == 6);
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p <= m; ++p) {
      long expect = (Rational::binomial(m, p) * Rational::binomial(m + 3, m)).raw().get_num().get_si();
      CHECK(monomial_basis(m, p, 3).size() == static_cast<size_t>(expect));
    }
}
