#include "sbo/json_io.hpp"

#include "sbo/parser.hpp"

namespace sbo {

json rational_to_json(const GaussianRational& g) {
  return json::array({g.re().str(), g.im().str()});
}

GaussianRational rational_from_json(const json& j) {
  if (j.is_string()) return GaussianRational(Rational(j.get<std::string>()));
  return {Rational(j.at(0).get<std::string>()), Rational(j.at(1).get<std::string>())};
}

json scalar_to_json(const Scalar& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(rational_to_json(c));
  return a;
}

Scalar scalar_from_json(const json& j) {
  std::vector<GaussianRational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Scalar(std::move(c));
}

json form_to_json(const PolyForm& w) {
  json terms = json::array();
  for (const auto& [mask, poly] : w.comps()) {
    json coeff = json::array();
    for (const auto& [e, s] : poly.terms()) {
      json expo = json::array();
      for (int k = 0; k < w.ambient_dim(); ++k) expo.push_back(static_cast<int>(e.e[k]));
      coeff.push_back({{"exponents", expo}, {"lambda_coeffs", scalar_to_json(s)}});
    }
    terms.push_back({{"index", mask_axes(mask)}, {"coeff", coeff}});
  }
  return {{"ambient_dim", w.ambient_dim()}, {"degree", w.degree()}, {"terms", terms}};
}

PolyForm form_from_json(const json& j) {
  int m = j.at("ambient_dim").get<int>();
  int p = j.at("degree").get<int>();
  PolyForm w(m, p);
  for (const auto& term : j.at("terms")) {
    AxisMask mask = mask_of_axes(term.at("index").get<std::vector<int>>());
    Poly poly(m);
    for (const auto& c : term.at("coeff")) {
      Expo e;
      auto expo = c.at("exponents").get<std::vector<int>>();
      for (size_t k = 0; k < expo.size(); ++k) e.e[k] = static_cast<uint8_t>(expo[k]);
      poly.add_term(e, scalar_from_json(c.at("lambda_coeffs")));
    }
    w.add_comp(mask, poly);
  }
  return w;
}

namespace {
json signature_to_json(const Signature& s) {
  return {{"dim", s.dim}, {"degree", s.degree}, {"side", s.side == Side::Ambient ? "ambient" : "slice"}};
}
}  // namespace

json op_to_json(const OpExpr& e) {
  json j;
  j["source"] = signature_to_json(e.source());
  j["target"] = signature_to_json(e.target());
  switch (e.tag()) {
    case OpExpr::Tag::Atom:
      j["node"] = "atom";
      j["atom"] = atom_token(e.atom_kind());
      break;
    case OpExpr::Tag::Compose: {
      j["node"] = "compose";
      json kids = json::array();
      for (const auto& c : e.children()) kids.push_back(op_to_json(c));
      j["factors"] = kids;
      break;
    }
    case OpExpr::Tag::Sum: {
      j["node"] = "sum";
      json kids = json::array();
      for (const auto& c : e.children()) kids.push_back(op_to_json(c));
      j["terms"] = kids;
      break;
    }
    case OpExpr::Tag::Scale:
      j["node"] = "scale";
      j["coeff"] = scalar_to_json(e.coeff());
      j["of"] = op_to_json(e.children()[0]);
      break;
  }
  return j;
}

json singular_to_json(const SingularVector& v) {
  json comps = json::array();
  for (const auto& [mask, w] : v.components)
    comps.push_back({{"source_index", mask_axes(mask)}, {"value", form_to_json(w)}});
  json j = {{"n", v.n},
            {"homogeneity", v.homogeneity},
            {"source_degree", v.source_degree},
            {"target_degree", v.target_degree},
            {"components", comps}};
  switch (v.vtype) {
    case VType::First: j["type"] = "1"; break;
    case VType::Second: j["type"] = "2"; break;
    case VType::Third: j["type"] = "3"; break;
    case VType::Fourth: j["type"] = "4"; break;
    case VType::FirstMiddle: j["type"] = "1pm"; break;
    case VType::SecondMiddle: j["type"] = "2pm"; break;
  }
  if (v.fixed_lambda) j["lambda"] = rational_to_json(*v.fixed_lambda);
  return j;
}

json suite_report_to_json(const SuiteReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json jc = {{"case", c.params}, {"pass", c.pass}};
    if (!c.pass) jc["counterexample"] = c.counterexample;
    cases.push_back(jc);
  }
  return {{"suite", r.name},
          {"failures", r.failures()},
          {"cases", cases},
          {"wall_ms", r.total_ms}};
}

json intertwining_report_to_json(const IntertwiningReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"generator", f.generator.str()},
                     {"basis_form", f.basis_form},
                     {"residual_nonzero", true},
                     {"residual", form_to_json(f.residual)}});
  return {{"cases_checked", r.cases_checked}, {"passed", r.passed()}, {"failures", fails}};
}

json annihilation_report_to_json(const AnnihilationReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"source_index", mask_axes(f.source)},
                     {"j", f.j},
                     {"residual_nonzero", true},
                     {"residual", form_to_json(f.residual)}});
  return {{"cases_checked", r.cases_checked}, {"passed", r.passed()}, {"failures", fails}};
}

}  // namespace sbo
