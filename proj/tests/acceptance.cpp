// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, exit code = number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sbo/json_io.hpp"
#include "sbo/parser.hpp"
#include "sbo/verify.hpp"

using namespace sbo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, const std::function<bool()>& run,
               double budget_s = 0.0) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& ex) {
    note = std::string(" [exception: ") + ex.what() + "]";
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    ok = false;
    note += " [over time budget]";
  }
  std::printf("[A%-2d] %s  %s (%.1fs)%s\n", id, ok ? "PASS" : "FAIL", what.c_str(), secs,
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool suite_ok(const SuiteReport& r) {
  if (!r.passed())
    for (const auto& c : r.cases)
      if (!c.pass) std::printf("      failing case: %s | %s\n", c.params.c_str(), c.counterexample.c_str());
  return r.passed();
}

Scalar lam() { return Scalar::lambda(); }
Scalar lin(long a, long b) { return Scalar(a) * lam() + Scalar(b); }

// The displayed low-order formulas, hand-built; structural comparison runs
// against the normalized expression trees.
bool low_order_reproduction() {
  using AK = AtomKind;
  bool ok = true;
  for (int n = 3; n <= 4; ++n) {
    for (int p = 0; p <= n - 1; ++p) {
      Signature src = ambient_sig(n, p);
      {
        Chain c(src);
        c.then(AK::Pullback);
        ok = ok && family_first(n, p, 0) == OpExpr::scale(lin(1, p), c.done());
      }
      {
        Chain a(src), b(src);
        a.then(AK::PartialN).then(AK::Pullback);
        b.then(AK::InteriorN).then(AK::Pullback).then(AK::SliceD);
        ok = ok &&
             family_first(n, p, 1) == OpExpr::sum({OpExpr::scale(lin(1, p - 1), a.done()), b.done()});
        // geometric presentation of order one
        Chain ga(src), gb(src);
        ga.then(AK::InteriorN).then(AK::Pullback).then(AK::SliceD);
        gb.then(AK::AmbientD).then(AK::InteriorN).then(AK::Pullback);
        ok = ok && family_first(n, p, 1, Presentation::Geometric) ==
                       OpExpr::sum({OpExpr::scale(lin(1, p), ga.done()),
                                    OpExpr::scale(lin(1, p - 1), gb.done())});
      }
      {
        Chain t1(src), t2(src), t3(src), t4(src);
        t1.then(AK::Pullback).then(AK::SliceLap);
        t2.then(AK::PartialN, 2).then(AK::Pullback);
        t3.then(AK::PartialN).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceD);
        t4.then(AK::Pullback).then(AK::SliceDelta).then(AK::SliceD);
        OpExpr disp = OpExpr::sum(
            {OpExpr::scale(lin(1, p - 2), t1.done()),
             OpExpr::scale(lin(2, n - 3) * lin(1, p - 2), t2.done()),
             OpExpr::scale(Scalar(2) * lin(2, n - 3), t3.done()), OpExpr::scale(Scalar(2), t4.done())});
        ok = ok && family_first(n, p, 2) == disp;
        // geometric presentation of order two
        Chain g1(src), g2(src), g3(src), g4(src);
        g1.then(AK::Pullback).then(AK::SliceDelta).then(AK::SliceD);
        g2.then(AK::Pullback).then(AK::SliceD).then(AK::SliceDelta);
        g3.then(AK::AmbientDelta).then(AK::AmbientD).then(AK::Pullback);
        g4.then(AK::AmbientD).then(AK::AmbientDelta).then(AK::Pullback);
        OpExpr gd =
            OpExpr::sum({OpExpr::scale(lin(2, n - 2) * lin(1, p), g1.done()),
                         OpExpr::scale(lin(2, n - 2) * lin(1, p - 2), g2.done()),
                         OpExpr::scale(-lin(2, n - 3) * lin(1, p), g3.done()),
                         OpExpr::scale(-lin(2, n - 3) * lin(1, p - 2), g4.done())});
        ok = ok && op_equal(family_first(n, p, 2, Presentation::Geometric), gd, 3).equal;
      }
    }
    for (int p = 1; p <= n; ++p) {
      long q = n - static_cast<long>(p);
      Signature src = ambient_sig(n, p);
      Chain c(src);
      c.then(AK::InteriorN).then(AK::Pullback);
      ok = ok && family_second(n, p, 0) == OpExpr::scale(-lin(1, q), c.done());
      Chain a(src), b(src);
      a.then(AK::PartialN).then(AK::InteriorN).then(AK::Pullback);
      b.then(AK::Pullback).then(AK::SliceDelta);
      ok = ok && family_second(n, p, 1) ==
                     OpExpr::sum({OpExpr::scale(-lin(1, q - 1), a.done()),
                                  OpExpr::scale(Scalar(-1), b.done())});
      // geometric presentation of order one
      Chain ga(src), gb(src);
      ga.then(AK::Pullback).then(AK::SliceDelta);
      gb.then(AK::AmbientDelta).then(AK::Pullback);
      ok = ok && family_second(n, p, 1, Presentation::Geometric) ==
                     OpExpr::sum({OpExpr::scale(-lin(1, q), ga.done()),
                                  OpExpr::scale(lin(1, q - 1), gb.done())});
    }
    // third/fourth type displays, orders <= 4
    Signature s0 = ambient_sig(n, 0), sn = ambient_sig(n, n);
    {
      Chain c1(s0), c2(s0), c3a(s0), c3b(s0), c4a(s0), c4b(s0);
      c1.then(AK::Pullback).then(AK::SliceD);
      c2.then(AK::PartialN).then(AK::Pullback).then(AK::SliceD);
      c3a.then(AK::Pullback).then(AK::SliceD).then(AK::SliceDelta).then(AK::SliceD);
      c3b.then(AK::PartialN, 2).then(AK::Pullback).then(AK::SliceD);
      c4a.then(AK::PartialN, 3).then(AK::Pullback).then(AK::SliceD);
      c4b.then(AK::PartialN).then(AK::Pullback).then(AK::SliceD).then(AK::SliceDelta).then(AK::SliceD);
      ok = ok && family_third(n, 0, 1) == c1.done();
      ok = ok && family_third(n, 0, 2) == c2.done();
      ok = ok && family_third(n, 0, 3) == OpExpr::sum({c3a.done(), OpExpr::scale(Scalar(n + 1L), c3b.done())});
      ok = ok && family_third(n, 0, 4) ==
                     OpExpr::sum({OpExpr::scale(Scalar(Rational(n + 1, 3)), c4a.done()), c4b.done()});
    }
    {
      Chain d1(sn), d2(sn), d3a(sn), d3b(sn), d4a(sn), d4b(sn);
      d1.then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta);
      d2.then(AK::PartialN).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta);
      d3a.then(AK::PartialN, 2).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta);
      d3b.then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta).then(AK::SliceD).then(AK::SliceDelta);
      d4a.then(AK::PartialN, 3).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta);
      d4b.then(AK::PartialN).then(AK::InteriorN).then(AK::Pullback).then(AK::SliceDelta).then(AK::SliceD).then(AK::SliceDelta);
      ok = ok && family_fourth(n, n, 1) == OpExpr::scale(Scalar(-1), d1.done());
      ok = ok && family_fourth(n, n, 2) == OpExpr::scale(Scalar(-1), d2.done());
      ok = ok && family_fourth(n, n, 3) ==
                     OpExpr::sum({OpExpr::scale(Scalar(-(n + 1L)), d3a.done()),
                                  OpExpr::scale(Scalar(-1), d3b.done())});
      ok = ok && family_fourth(n, n, 4) ==
                     OpExpr::sum({OpExpr::scale(Scalar(Rational(-(n + 1L), 3)), d4a.done()),
                                  OpExpr::scale(Scalar(-1), d4b.done())});
      for (int order = 1; order <= 4; ++order) {
        OpExpr dot3 = specialize(derivative_op(family_first(n, 0, order - 1)),
                                 GaussianRational{Rational(order - 1)});
        ok = ok && op_equal(OpExpr::compose({OpExpr::atom(AK::SliceD, slice_sig(n, 0)), dot3}),
                            family_third(n, 0, order), order + 1)
                       .equal;
        OpExpr dot4 = specialize(derivative_op(family_second(n, n, order - 1)),
                                 GaussianRational{Rational(order - 1)});
        ok = ok && op_equal(OpExpr::compose({OpExpr::atom(AK::SliceDelta, slice_sig(n, n - 1)), dot4}),
                            family_fourth(n, n, order), order + 1)
                       .equal;
      }
    }
  }
  // singular vector displays: delegated to the unit suite shapes; here the
  // homogeneity <= 3 values are recomputed from the closed forms and the
  // low-order displays via the builders' structural data.
  for (int n = 3; n <= 4; ++n)
    for (int p = 0; p <= n - 1; ++p) {
      SingularVector v0 = build_first(n, p, 0);
      for (const auto& [mask, w] : v0.components)
        ok = ok && (w == PolyForm::monomial(n, mask, Expo{}, lin(1, p)));
      SingularVector v1 = build_first(n, p, 1);
      for (const auto& [mask, w] : v1.components) {
        PolyForm base = PolyForm::monomial(n, mask, Expo{});
        PolyForm expect(n, p);
        for (const auto& [mk, c] : base.comps()) expect.add_comp(mk, c.times_var(n).scaled(lin(1, p - 1)));
        expect += wedge_axis(n, euler_insert(base, n - 1));
        ok = ok && (w == expect);
      }
    }
  for (int n = 3; n <= 4; ++n)
    for (int p = 1; p <= n; ++p) {
      SingularVector v0 = build_second(n, p, 0);
      for (const auto& [mask, w] : v0.components)
        ok = ok && (w == wedge_axis(n, PolyForm::monomial(n, mask, Expo{}))
                             .scaled(-lin(1, n - static_cast<long>(p))));
    }
  return ok;
}

bool flat_consistency() {
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    for (int p = 0; p <= n - 1; ++p)
      ok = ok && op_equal(family_first(n, p, 1), curved_first_flat(n, p, lam() + Scalar(p - 1L)), 2).equal;
    for (int p = 1; p <= n; ++p)
      ok = ok &&
           op_equal(family_second(n, p, 1), curved_second_flat(n, p, lam() + Scalar(p - 2L)), 2).equal;
  }
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite (exact arithmetic, zero tolerance)\n");

  criterion(1, "coefficient identities, n = 2..6, N <= 6",
            [] { return suite_ok(suite_coefficients(6, 6)); }, 5.0);

  criterion(2, "low-order closed forms reproduce the displayed formulas",
            [] { return low_order_reproduction(); }, 5.0);

  criterion(3, "normal and geometric presentations agree, n <= 5, order <= 5",
            [] { return suite_ok(suite_presentation(5, 5)); }, 60.0);

  criterion(4, "equivariance of all families, n <= 5, order <= 3",
            [] { return suite_ok(suite_equivariance(5, 3)); }, 120.0);

  criterion(5, "singular vectors: annihilation, ode systems, kernels, translation",
            [] { return suite_ok(suite_singular(5, 4)); }, 120.0);

  criterion(6, "star conjugation between the families, n <= 5, order <= 5",
            [] { return suite_ok(suite_hodge(5, 5)); });

  criterion(7, "factorization identities, n <= 5, order <= 5", [] {
    return suite_ok(suite_main_factorizations(5, 5)) && suite_ok(suite_supplementary(5, 5));
  });

  criterion(8, "gauge companion / q-curvature identities, odd n <= 7",
            [] { return suite_ok(suite_gauge_and_q(7)); });

  criterion(9, "two-dimensional comparison identities, order <= 5",
            [] { return suite_ok(suite_kkp()); });

  criterion(10, "order-one families match the flat hypersurface specializations",
            [] { return flat_consistency(); });

  criterion(11, "full check (n <= 5, order <= 4) in the time budget", [] {
    auto reports = run_suites("all", 5, 4);
    bool ok = true;
    for (const auto& r : reports) ok = ok && suite_ok(r);
    return ok;
  }, 600.0);

  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
