#include "qhw/cli.hpp"

#include "qhw/bialgebra.hpp"
#include "qhw/errors.hpp"
#include "qhw/json_io.hpp"
#include "qhw/poisson.hpp"
#include "qhw/quantization.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace qhw::cli {

namespace {

struct Options {
  int order = kDefaultOrder;
  std::string format = "text";
  std::string family;
  std::string input;
  std::string positional;
  std::string check = "all";
  int degree = 6;
  std::string compose;
  std::string with;
};

/// The input classified as INVALID.
struct InvalidBialgebra : Error {
  using Error::Error;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Inline JSON when the text starts like a JSON value, otherwise a file path.
std::optional<Json> read_input(const Options& o) {
  if (!o.input.empty() && !o.positional.empty()) {
    throw ParseError("give the input either positionally or with --input, not both");
  }
  const std::string& source = o.input.empty() ? o.positional : o.input;
  if (source.empty()) return std::nullopt;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return parse_json(source);
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot read input file " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::optional<BialgebraType> family_type(const std::string& tag) {
  if (tag == "type1plus") return BialgebraType::TypeIPlus;
  if (tag == "type1minus") return BialgebraType::TypeIMinus;
  if (tag == "type2") return BialgebraType::TypeII;
  return std::nullopt;
}

std::string report_text(const ResidualReport& r) {
  std::string out = r.axiom + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& e : r.entries) {
    if (!e.zero) out += "  " + e.label + ": " + e.text + "\n";
  }
  return out;
}

std::string rmatrix_text(const RMatrix& r) {
  return "xi=" + r.xi.to_string() + ", beta_plus=" + r.beta_plus.to_string() +
         ", beta_minus=" + r.beta_minus.to_string();
}

std::string wedge_text(const ParamPoly& c) {
  const std::string body = "(M ^ A+ ^ A-)";
  if (c.is_zero()) return "0";
  if (c.terms().size() == 1) {
    const auto& t = c.terms().front();
    return render_term(t.coef, join_factors({t.mono.to_string(), body}), true);
  }
  return "(" + c.to_string() + ")*" + body;
}

std::string pair_label(const CocycleResidual& r) {
  return "[" + std::string(gen_name(r.x)) + "," + std::string(gen_name(r.y)) + "]";
}

Result classify_command(const Options& o) {
  const auto input = read_input(o);
  if (!input) throw ParseError("classify needs a cocommutator, e.g. '{\"a2\":\"-1\",\"b3\":\"-1\"}'");
  const BialgebraClass cls = classify(cocommutator_from_json(*input, o.order));
  const int code = cls.type == BialgebraType::Invalid ? kInvalid : kPass;
  if (json_mode(o)) return {code, dump(to_json(cls)), ""};

  std::string out(type_name(cls.type));
  if (cls.type == BialgebraType::Invalid) {
    out += "\n";
    for (const auto& r : cls.cocycle) out += "cocycle " + pair_label(r) + ": " + r.residual.to_string() + "\n";
    for (int i = 0; i < 3; ++i) {
      if (!cls.cojacobi[i].is_zero()) {
        out += "co-Jacobi " + std::to_string(i + 1) + ": " + cls.cojacobi[i].to_string() + "\n";
      }
    }
    return {code, out, ""};
  }
  if (cls.coboundary) {
    out += ", coboundary, xi=" + cls.rmatrix->r.xi.to_string() + "\n";
  } else {
    out += ", not coboundary\n";
  }
  out += "automorphism: " + describe_automorphism(cls.automorphism) + "\n";
  out += "normalized: " + cls.normalized.to_string() + "\n";
  if (cls.rmatrix) {
    out += "r-matrix: " + rmatrix_text(cls.rmatrix->r) + "\n";
    for (const auto& g : cls.rmatrix->gauge) out += "gauge: " + rmatrix_text(g) + "\n";
  }
  return {code, out, ""};
}

/// Presentation from --family (symbolic) or from a classified cocommutator.
HopfPresentation presentation_for(const Options& o, const char* command) {
  const auto input = read_input(o);
  if (!o.family.empty() && input) {
    throw ParseError(std::string(command) + " takes either --family or a cocommutator, not both");
  }
  if (!o.family.empty()) {
    const BialgebraType type = *family_type(o.family);
    return build_family(type, symbolic_params(type, o.order), o.order);
  }
  if (!input) {
    throw ParseError(std::string(command) + " needs --family <tag> or a cocommutator");
  }
  const BialgebraClass cls = classify(cocommutator_from_json(*input, o.order));
  if (cls.type == BialgebraType::Invalid) {
    throw InvalidBialgebra("input is not a Lie bialgebra; run classify for the residuals");
  }
  return quantize(cls, o.order);
}

std::vector<ResidualReport> full_suite(const HopfPresentation& hp) {
  auto reports = verify_hopf(hp);
  reports.push_back(first_order_check(hp, family_cocommutator(hp.type, hp.params, hp.order)));
  return reports;
}

std::string section(const std::string& title,
                    const std::vector<std::pair<std::string, std::string>>& rows,
                    const std::string& lhs_prefix, const std::string& lhs_suffix) {
  std::string out = title + ":\n";
  for (const auto& [k, v] : rows) out += "  " + lhs_prefix + k + lhs_suffix + " = " + v + "\n";
  return out;
}

std::string presentation_text(const RenderedPresentation& p) {
  std::string out = "family: " + p.family + "\norder: " + std::to_string(p.order) + "\n";
  if (!p.params.empty()) {
    out += "params:";
    for (std::size_t i = 0; i < p.params.size(); ++i) {
      out += (i ? ", " : " ") + p.params[i].first + "=" + p.params[i].second;
    }
    out += "\n";
  }
  out += "primitive: " + p.primitive + "\n";
  out += section("relations", p.relations, "", "");
  out += section("relations (closed form)", p.relations_closed, "", "");
  out += section("coproduct", p.coproduct, "D(", ")");
  out += section("coproduct (closed form)", p.coproduct_closed, "D(", ")");
  if (!p.legend.empty()) out += "  " + p.legend + "\n";
  out += section("counit", p.counit, "eps(", ")");
  out += section("antipode", p.antipode, "S(", ")");
  return out;
}

Result quantize_command(const Options& o) {
  const HopfPresentation hp = presentation_for(o, "quantize");
  std::string failures;
  for (const auto& r : full_suite(hp)) {
    if (!r.passed()) failures += report_text(r);
  }
  if (!failures.empty()) {
    return {kVerification, "", "refusing to emit an unverified presentation\n" + failures};
  }
  const RenderedPresentation rendered = render(hp);
  if (json_mode(o)) return {kPass, dump(to_json(rendered)), ""};
  return {kPass, presentation_text(rendered), ""};
}

Result reports_result(const Options& o, const std::vector<ResidualReport>& reports, Json extra = Json()) {
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  const int code = passed ? kPass : kVerification;
  if (json_mode(o)) {
    Json out = extra.is_null() ? Json::object() : std::move(extra);
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out["reports"] = list;
    out["passed"] = passed;
    return {code, dump(out), ""};
  }
  std::string out;
  for (const auto& r : reports) out += report_text(r);
  return {code, out, ""};
}

Result verify_command(const Options& o) {
  const HopfPresentation hp = presentation_for(o, "verify");
  std::string head = "family: " + std::string(type_name(hp.type)) + ", order " + std::to_string(hp.order) + "\n";
  Result r = reports_result(o, full_suite(hp), Json{{"family", type_name(hp.type)}, {"order", hp.order}});
  if (!json_mode(o)) r.out = head + r.out;
  return r;
}

Result coboundary_command(const Options& o) {
  const auto input = read_input(o);
  const RMatrix r = input ? rmatrix_from_json(*input, o.order) : RMatrix::symbolic(o.order);
  const TensorElement omega = schouten(r);
  const auto c = alternating_coefficient(omega);
  const bool invariant = mcybe_check(omega);
  const Cocommutator delta = coboundary_delta(r);
  const std::string schouten_text = c ? wedge_text(*c) : omega.to_string();
  const int code = invariant ? kPass : kVerification;
  if (json_mode(o)) {
    return {code,
            dump(Json{{"r_matrix", to_json(r)},
                      {"schouten", schouten_text},
                      {"mcybe", invariant},
                      {"delta", input ? to_json(delta) : Json(delta.to_string())}}),
            ""};
  }
  std::string out = "r-matrix: " + rmatrix_text(r) + "\n";
  out += "schouten: " + schouten_text + "\n";
  out += std::string("mCYBE: ") + (invariant ? "PASS" : "FAIL") + "\n";
  out += "delta: " + delta.to_string() + "\n";
  return {code, out, ""};
}

Result compose_command(const Options& o) {
  if (o.with.empty()) throw ParseError("--compose needs a second element via --with");
  const auto g1 = group_from_json(parse_json(o.compose));
  const auto g2 = group_from_json(parse_json(o.with));
  const auto g = group_compose(g1, g2);
  const bool agrees = group_matrix(g) == Matrix3(group_matrix(g2) * group_matrix(g1));
  const int code = agrees ? kPass : kVerification;
  if (json_mode(o)) return {code, dump(Json{{"product", to_json(g)}, {"matrix_check", agrees}}), ""};
  const Json t = to_json(g);
  return {code,
          "product: [" + t[0].get<std::string>() + ", " + t[1].get<std::string>() + ", " +
              t[2].get<std::string>() + "]\nmatrix: " + (agrees ? "PASS" : "FAIL") + "\n",
          ""};
}

Result poisson_command(const Options& o) {
  if (!o.compose.empty()) return compose_command(o);
  const auto input = read_input(o);
  if (!o.family.empty() && input) throw ParseError("poisson takes either --family or a cocommutator, not both");
  std::optional<PoissonStructure> ps;
  std::optional<Cocommutator> delta;
  if (!o.family.empty()) {
    const BialgebraType type = *family_type(o.family);
    const FamilyParams params = symbolic_params(type, o.order);
    ps = PoissonStructure::for_family(type, params, o.order);
    delta = family_cocommutator(type, params, o.order);
  } else if (input) {
    const BialgebraClass cls = classify(cocommutator_from_json(*input, o.order));
    if (cls.type == BialgebraType::Invalid) {
      throw InvalidBialgebra("input is not a Lie bialgebra; run classify for the residuals");
    }
    delta = cls.original;
    ps = PoissonStructure::from_cocommutator(*delta);
  } else {
    throw ParseError("poisson needs --family <tag>, a cocommutator or --compose");
  }

  std::vector<ResidualReport> reports;
  if (o.check == "all" || o.check == "jacobi") reports.push_back(jacobi_check(*ps));
  if (o.check == "all" || o.check == "homomorphism") reports.push_back(poisson_homomorphism_check(*ps));
  if (o.check == "all" || o.check == "linear") reports.push_back(linear_part_check(*ps, *delta));

  const std::array<std::string, 3> labels = {"{a-,a+}", "{a-,m}", "{a+,m}"};
  Json brackets = Json::object();
  std::string head;
  for (int i = 0; i < 3; ++i) {
    brackets[labels[i]] = ps->brackets[i].to_string();
    head += labels[i] + " = " + ps->brackets[i].to_string() + "\n";
  }
  Result r = reports_result(o, reports, Json{{"brackets", brackets}});
  if (!json_mode(o)) r.out = head + r.out;
  return r;
}

Result realize_command(const Options& o) {
  const FamilyParams params = symbolic_params(BialgebraType::TypeIPlus, o.order);
  return reports_result(o, {check_realization(params, o.degree, o.order)},
                        Json{{"degree", o.degree}, {"order", o.order}});
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Heisenberg-Weyl Lie bialgebras and their quantizations", "qhw"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", o.order, "truncation order K in parameter degree")
      ->check(CLI::Range(1, kMaxOrder - 1));
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("json", o.positional, "inline JSON or a path");
    sub->add_option("--input", o.input, "inline JSON or a path");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "type1plus, type1minus or type2")
        ->check(CLI::IsMember({"type1plus", "type1minus", "type2"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify a cocommutator");
  add_input(classify_cmd);
  auto* quantize_cmd = app.add_subcommand("quantize", "verified Hopf presentation of a family");
  add_input(quantize_cmd);
  add_family(quantize_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Hopf axiom residuals of a family");
  add_input(verify_cmd);
  add_family(verify_cmd);
  auto* coboundary_cmd = app.add_subcommand("coboundary", "Schouten bracket and mCYBE of an r-matrix");
  add_input(coboundary_cmd);
  auto* poisson_cmd = app.add_subcommand("poisson", "Poisson-Lie bracket checks");
  add_input(poisson_cmd);
  add_family(poisson_cmd);
  poisson_cmd->add_option("--check", o.check, "jacobi, homomorphism, linear or all")
      ->check(CLI::IsMember({"jacobi", "homomorphism", "linear", "all"}));
  poisson_cmd->add_option("--compose", o.compose, "group triple [m, a-, a+] applied first");
  poisson_cmd->add_option("--with", o.with, "group triple applied second");
  auto* realize_cmd = app.add_subcommand("realize", "differential realization of Type I+");
  realize_cmd->add_option("--degree", o.degree, "largest monomial degree")->check(CLI::Range(0, 64));

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kPass : kParse, out.str(), err.str()};
  }

  try {
    if (*classify_cmd) return classify_command(o);
    if (*quantize_cmd) return quantize_command(o);
    if (*verify_cmd) return verify_command(o);
    if (*coboundary_cmd) return coboundary_command(o);
    if (*poisson_cmd) return poisson_command(o);
    if (*realize_cmd) return realize_command(o);
  } catch (const ParseError& e) {
    return {kParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {kParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidBialgebra& e) {
    return {kInvalid, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kVerification, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return {kParse, "", app.help()};
}

}  // namespace qhw::cli
