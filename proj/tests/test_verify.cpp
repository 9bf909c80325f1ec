#include <doctest.h>

#include <random>

#include "sbo/json_io.hpp"
#include "sbo/verify.hpp"

using namespace sbo;

TEST_CASE("op_equal basics") {
  OpExpr a = family_first(3, 1, 1);
  CHECK(op_equal(a, a, 3).equal);
  OpExpr dd = OpExpr::compose(
      {OpExpr::atom(AtomKind::SliceD, slice_sig(4, 2)), OpExpr::atom(AtomKind::SliceD, slice_sig(4, 1))});
  CHECK(op_is_zero(dd, 3).equal);
  // different weights differ, with a witness
  OpExpr b = OpExpr::scale(Scalar::lambda() + Scalar(1),
                           OpExpr::atom(AtomKind::Pullback, ambient_sig(3, 1)));
  OpExpr c = OpExpr::scale(Scalar::lambda() + Scalar(2),
                           OpExpr::atom(AtomKind::Pullback, ambient_sig(3, 1)));
  auto r = op_equal(b, c, 1);
  CHECK_FALSE(r.equal);
  CHECK(r.witness.has_value());
}

TEST_CASE("degree bound soundness spot check") {
  // doubling the bound never flips a passing comparison
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pn(2, 4), porder(0, 3);
  for (int t = 0; t < 10; ++t) {
    int n = pn(rng);
    int order = porder(rng);
    std::uniform_int_distribution<int> pp(0, n - 1);
    int p = pp(rng);
    OpExpr a = family_first(n, p, order, Presentation::Normal);
    OpExpr b = family_first(n, p, order, Presentation::Geometric);
    bool small = op_equal(a, b, order).equal;
    bool large = op_equal(a, b, 2 * order + 1).equal;
    CHECK(small == large);
  }
}

TEST_CASE("suites on a small grid") {
  auto coeff = suite_coefficients(4, 4);
  CHECK(coeff.passed());
  auto pres = suite_presentation(3, 3);
  CHECK(pres.passed());
  auto eq = suite_equivariance(3, 2);
  CHECK(eq.passed());
  auto hodge = suite_hodge(3, 3);
  CHECK(hodge.passed());
  auto main = suite_main_factorizations(3, 4);
  CHECK(main.passed());
  auto supp = suite_supplementary(3, 4);
  CHECK(supp.passed());
  auto gq = suite_gauge_and_q(3);
  CHECK(gq.passed());
  auto kkp = suite_kkp();
  CHECK(kkp.passed());
  for (const SuiteReport& r : {coeff, pres, eq, hodge, main, supp, gq, kkp})
    for (const auto& c : r.cases)
      if (!c.pass) MESSAGE(r.name, " failed: ", c.params, " | ", c.counterexample);
}

TEST_CASE("closed-form restriction testing") {
  // the q polynomial times (lambda+p) agrees with the first-type family on
  // closed forms but not on all forms
  int n = 4, p = 1, N = 1;
  OpExpr lhs = OpExpr::scale(Scalar::lambda() + Scalar(p), q_poly(n, p, N));
  OpExpr rhs = family_first(n, p, 2 * N);
  CHECK(op_equal_on_closed(lhs, rhs, 2 * N + 2).equal);
  CHECK_FALSE(op_equal(lhs, rhs, 2 * N).equal);
}

TEST_CASE("json round trips") {
  PolyForm w(3, 1);
  Expo e;
  e.e[0] = 2;
  e.e[2] = 1;
  w.add_comp(mask_of_axes({2}), Poly::monomial(3, e, Scalar::lambda() + Scalar(GaussianRational::i())));
  json j = form_to_json(w);
  CHECK(form_from_json(j) == w);
  // operator serialization carries signatures
  json oj = op_to_json(family_first(3, 1, 1));
  CHECK(oj.at("source").at("dim") == 3);
  CHECK(oj.at("target").at("dim") == 2);
  // suite report shape
  SuiteReport rep;
  rep.name = "demo";
  rep.cases.push_back({"case-a", true, "", 0.1});
  rep.cases.push_back({"case-b", false, "residual", 0.2});
  json rj = suite_report_to_json(rep);
  CHECK(rj.at("failures") == 1);
}

TEST_CASE("run_suites dispatch") {
  auto reports = run_suites("kkp", 3, 2);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].name == "kkp");
  CHECK(run_suites("nonsense", 3, 2).empty());
}
