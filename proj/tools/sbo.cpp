// Command-line front end: coefficient tables, operator families, operator
// application, singular vectors, and the identity-check suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sbo/json_io.hpp"
#include "sbo/parser.hpp"

using namespace sbo;

namespace {

GaussianRational parse_lambda(const std::string& s) {
  return GaussianRational(Rational(s));
}

OpExpr build_family(int type, int n, int p, int order, const std::string& presentation) {
  Presentation pres = presentation == "geometric" ? Presentation::Geometric : Presentation::Normal;
  switch (type) {
    case 1: return family_first(n, p, order, pres);
    case 2: return family_second(n, p, order, pres);
    case 3: return family_third(n, p, order, pres);
    case 4: return family_fourth(n, p, order, pres);
    default: throw std::invalid_argument("family type must be 1..4");
  }
}

int run_coeffs(int n, int N, int p, const std::string& family, const std::string& format) {
  json table = json::array();
  for (int idx = (family == "gamma" ? 1 : 0); idx <= N; ++idx) {
    Scalar s;
    if (family == "a") s = coeff_a(n, N, idx);
    else if (family == "b") s = coeff_b(n, N, idx);
    else if (family == "alpha") s = coeff_alpha(n, N, idx);
    else if (family == "beta") s = coeff_beta(n, N, idx);
    else if (family == "gamma") s = coeff_gamma(n, N, idx, p);
    else throw std::invalid_argument("unknown coefficient family '" + family + "'");
    if (format == "json")
      table.push_back({{"family", family}, {"N", N}, {"index", idx}, {"lambda_poly", scalar_to_json(s)}});
    else
      std::cout << family << "[" << N << "," << idx << "] = " << s.str() << "\n";
  }
  if (format == "json") std::cout << table.dump(2) << "\n";
  return 0;
}

json read_json_input(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal symmetry breaking operators on differential forms"};
  app.require_subcommand(1);

  // -- coeffs ---------------------------------------------------------------
  auto* coeffs = app.add_subcommand("coeffs", "print coefficient tables");
  std::string co_family = "a", co_format = "text";
  int co_n = 4, co_order = 2, co_p = 0;
  coeffs->add_option("--family", co_family, "a|b|alpha|beta|gamma");
  coeffs->add_option("--n", co_n, "ambient dimension");
  coeffs->add_option("--order", co_order, "upper index N");
  coeffs->add_option("--p", co_p, "form degree (gamma only)");
  coeffs->add_option("--format", co_format, "text|json");

  // -- family ---------------------------------------------------------------
  auto* family = app.add_subcommand("family", "emit an operator family");
  int fa_type = 1, fa_n = 4, fa_p = 0, fa_order = 1;
  std::string fa_pres = "normal", fa_format = "text", fa_lambda;
  family->add_option("--type", fa_type, "1|2|3|4");
  family->add_option("--n", fa_n, "ambient dimension");
  family->add_option("--p", fa_p, "source form degree");
  family->add_option("--order", fa_order, "operator order");
  family->add_option("--presentation", fa_pres, "normal|geometric");
  family->add_option("--lambda", fa_lambda, "specialize at num/den");
  family->add_option("--format", fa_format, "text|json");

  // -- apply ------------------------------------------------------------------
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a form");
  std::string ap_op, ap_form = "-", ap_lambda, ap_format = "json";
  int ap_n = 4, ap_p = 0, ap_N = 0;
  apply_cmd->add_option("--op", ap_op, "operator expression text")->required();
  apply_cmd->add_option("--form", ap_form, "form JSON file ('-' for stdin)");
  apply_cmd->add_option("--n", ap_n, "binding for n");
  apply_cmd->add_option("--p", ap_p, "binding for p");
  apply_cmd->add_option("--order", ap_N, "binding for N");
  apply_cmd->add_option("--lambda", ap_lambda, "specialize at num/den");
  apply_cmd->add_option("--format", ap_format, "json|text");

  // -- singular ------------------------------------------------------------------
  auto* singular = app.add_subcommand("singular", "emit or verify singular vectors");
  int sv_type = 1, sv_n = 4, sv_p = 0, sv_order = 2;
  bool sv_verify = false, sv_solve = false;
  std::string sv_lambda, sv_format = "json";
  singular->add_option("--type", sv_type, "1|2|3|4");
  singular->add_option("--n", sv_n, "ambient dimension");
  singular->add_option("--p", sv_p, "source degree of the homomorphism");
  singular->add_option("--order", sv_order, "homogeneity");
  singular->add_flag("--verify", sv_verify, "check annihilation; nonzero exit on failure");
  singular->add_flag("--solve", sv_solve, "solve the ansatz at --lambda instead of building");
  singular->add_option("--lambda", sv_lambda, "rational spectral value num/den");
  singular->add_option("--format", sv_format, "json|text");

  // -- check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run identity suites");
  std::string ck_suite = "all", ck_report;
  int ck_nmax = 4, ck_ordermax = 3;
  check->add_option("--suite", ck_suite,
                    "all|equivariance|hodge|main-fact|supp-fact|gauge-q|singular|kkp|presentation");
  check->add_option("--n-max", ck_nmax, "largest ambient dimension");
  check->add_option("--order-max", ck_ordermax, "largest operator order");
  check->add_option("--report", ck_report, "write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeffs) return run_coeffs(co_n, co_order, co_p, co_family, co_format);

    if (*family) {
      OpExpr e = build_family(fa_type, fa_n, fa_p, fa_order, fa_pres);
      if (!fa_lambda.empty()) e = specialize(e, parse_lambda(fa_lambda));
      if (fa_format == "json")
        std::cout << op_to_json(e).dump(2) << "\n";
      else
        std::cout << pretty_print(e) << "\n";
      return 0;
    }

    if (*apply_cmd) {
      Bindings b{ap_n, ap_p, ap_N};
      OpExpr e = parse_op(ap_op, b);
      if (!ap_lambda.empty()) e = specialize(e, parse_lambda(ap_lambda));
      PolyForm w = form_from_json(read_json_input(ap_form));
      PolyForm r = apply(e, w);
      if (ap_format == "text")
        std::cout << r.str() << "\n";
      else
        std::cout << form_to_json(r).dump(2) << "\n";
      return 0;
    }

    if (*singular) {
      if (sv_solve) {
        if (sv_lambda.empty()) throw std::runtime_error("--solve requires --lambda");
        int target = sv_type == 1 ? sv_p : (sv_type == 2 ? sv_p + 1 : (sv_type == 3 ? sv_p - 1 : sv_p + 2));
        auto kernel = solve_ansatz(sv_n, target, sv_p, sv_order, parse_lambda(sv_lambda));
        json out = json::array();
        for (const auto& v : kernel) out.push_back(singular_to_json(v));
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      SingularVector v;
      switch (sv_type) {
        case 1: v = build_first(sv_n, sv_p, sv_order); break;
        case 2: v = build_second(sv_n, sv_p + 1, sv_order); break;
        case 3: v = build_third(sv_n, sv_p, sv_order); break;
        case 4: v = build_fourth(sv_n, sv_p, sv_order); break;
        default: throw std::invalid_argument("singular type must be 1..4");
      }
      if (sv_verify) {
        auto rep = verify_annihilated(v);
        std::cout << annihilation_report_to_json(rep).dump(2) << "\n";
        return rep.passed() ? 0 : 1;
      }
      if (sv_format == "text") {
        for (const auto& [mask, w] : v.components) {
          std::cout << "source";
          for (int a : mask_axes(mask)) std::cout << " " << a;
          std::cout << " -> " << w.str() << "\n";
        }
      } else {
        std::cout << singular_to_json(v).dump(2) << "\n";
      }
      return 0;
    }

    if (*check) {
      auto reports = run_suites(ck_suite, ck_nmax, ck_ordermax);
      if (reports.empty()) {
        std::cerr << "unknown suite '" << ck_suite << "'\n";
        return 2;
      }
      int failures = 0;
      json all = json::array();
      for (const auto& r : reports) {
        failures += r.failures();
        all.push_back(suite_report_to_json(r));
        std::cout << r.name << ": " << (r.cases.size() - r.failures()) << "/" << r.cases.size()
                  << " cases passed (" << static_cast<long>(r.total_ms) << " ms)\n";
        for (const auto& c : r.cases)
          if (!c.pass) std::cout << "  FAIL " << c.params << ": " << c.counterexample << "\n";
      }
      if (!ck_report.empty()) {
        std::ofstream out(ck_report);
        out << all.dump(2) << "\n";
      }
      return std::min(failures, 125);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
