#include "qhw/json_io.hpp"

#include "qhw/errors.hpp"

#include <set>

namespace qhw {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw ParseError("unknown field \"" + key + "\" in " + what);
    }
  }
}

Json string_map(const std::vector<std::pair<std::string, std::string>>& entries) {
  Json out = Json::object();
  for (const auto& [k, v] : entries) out[k] = v;
  return out;
}

std::vector<std::pair<std::string, std::string>> read_string_map(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_object()) {
    throw ParseError(std::string("presentation field \"") + field + "\" must be an object");
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.at(field).items()) {
    if (!v.is_string()) throw ParseError(std::string("entries of \"") + field + "\" must be strings");
    out.emplace_back(k, v.get<std::string>());
  }
  return out;
}

constexpr std::array<const char*, 9> kCoefficientNames = {"a1", "a2", "a3", "b1", "b2",
                                                          "b3", "c1", "c2", "c3"};

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("field \"" + field + "\": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("field \"" + field + "\" must be a rational string such as \"-3/4\"");
}

Cocommutator cocommutator_from_json(const Json& j, int order) {
  reject_unknown(j, {kCoefficientNames.begin(), kCoefficientNames.end()}, "cocommutator");
  std::array<Rational, 9> v{};
  for (int i = 0; i < 6; ++i) {
    if (j.contains(kCoefficientNames[i])) v[i] = rational_from_json(j.at(kCoefficientNames[i]), kCoefficientNames[i]);
  }
  // Omitted c coefficients take their cocycle-forced values.
  const std::array<Rational, 3> forced = {Rational(0), v[3], -v[0]};
  for (int i = 6; i < 9; ++i) {
    v[i] = j.contains(kCoefficientNames[i]) ? rational_from_json(j.at(kCoefficientNames[i]), kCoefficientNames[i])
                                           : forced[i - 6];
  }
  return Cocommutator::from_values(v, order);
}

Json to_json(const Cocommutator& delta) {
  Json out = Json::object();
  for (int i = 0; i < 9; ++i) out[kCoefficientNames[i]] = delta.coef[i / 3][i % 3].to_string();
  return out;
}

RMatrix rmatrix_from_json(const Json& j, int order) {
  reject_unknown(j, {"xi", "beta_plus", "beta_minus"}, "r-matrix");
  auto get = [&](const char* key) {
    return ParamPoly::constant(j.contains(key) ? rational_from_json(j.at(key), key) : Rational(0), order);
  };
  return RMatrix(get("xi"), get("beta_plus"), get("beta_minus"));
}

Json to_json(const RMatrix& r) {
  return Json{{"xi", r.xi.to_string()},
              {"beta_plus", r.beta_plus.to_string()},
              {"beta_minus", r.beta_minus.to_string()}};
}

GroupCoords<Rational> group_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("group element must be a triple [m, a-, a+]");
  }
  return {rational_from_json(j[0], "m"), rational_from_json(j[1], "a-"), rational_from_json(j[2], "a+")};
}

Json to_json(const GroupCoords<Rational>& g) {
  return Json::array({to_string(g.m), to_string(g.a_minus), to_string(g.a_plus)});
}

Json to_json(const BialgebraClass& cls) {
  Json out = Json::object();
  out["type"] = std::string(type_name(cls.type));
  out["original"] = to_json(cls.original);
  if (cls.type == BialgebraType::Invalid) {
    Json cocycle = Json::array();
    for (const auto& r : cls.cocycle) {
      cocycle.push_back({{"pair", "[" + std::string(gen_name(r.x)) + "," + std::string(gen_name(r.y)) + "]"},
                         {"residual", r.residual.to_string()}});
    }
    out["cocycle_residuals"] = cocycle;
    out["cojacobi_residuals"] = Json::array(
        {cls.cojacobi[0].to_string(), cls.cojacobi[1].to_string(), cls.cojacobi[2].to_string()});
    return out;
  }
  out["automorphism"] = describe_automorphism(cls.automorphism);
  out["normalized"] = to_json(cls.normalized);
  out["coboundary"] = cls.coboundary;
  if (cls.rmatrix) {
    out["r_matrix"] = to_json(cls.rmatrix->r);
    Json gauge = Json::array();
    for (const auto& g : cls.rmatrix->gauge) gauge.push_back(to_json(g));
    out["r_matrix_gauge"] = gauge;
  }
  return out;
}

Json to_json(const ResidualReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"label", e.label}, {"zero", e.zero}, {"residual", e.text}});
  }
  return Json{{"axiom", report.axiom}, {"passed", report.passed()}, {"entries", entries}};
}

Json to_json(const RenderedPresentation& p) {
  Json out = Json::object();
  out["family"] = p.family;
  out["params"] = string_map(p.params);
  out["order"] = p.order;
  out["primitive"] = p.primitive;
  out["relations"] = string_map(p.relations);
  out["relations_closed"] = string_map(p.relations_closed);
  out["coproduct"] = string_map(p.coproduct);
  out["coproduct_closed"] = string_map(p.coproduct_closed);
  if (!p.legend.empty()) out["legend"] = p.legend;
  out["counit"] = string_map(p.counit);
  out["antipode"] = string_map(p.antipode);
  return out;
}

RenderedPresentation rendered_from_json(const Json& j) {
  reject_unknown(j,
                 {"family", "params", "order", "primitive", "relations", "relations_closed",
                  "coproduct", "coproduct_closed", "legend", "counit", "antipode"},
                 "presentation");
  RenderedPresentation p;
  if (!j.contains("family") || !j.at("family").is_string()) throw ParseError("presentation needs a family");
  if (!j.contains("order") || !j.at("order").is_number_integer()) throw ParseError("presentation needs an order");
  if (!j.contains("primitive") || !j.at("primitive").is_string()) throw ParseError("presentation needs a primitive");
  p.family = j.at("family").get<std::string>();
  p.order = j.at("order").get<int>();
  p.primitive = j.at("primitive").get<std::string>();
  p.params = read_string_map(j, "params");
  p.relations = read_string_map(j, "relations");
  p.relations_closed = read_string_map(j, "relations_closed");
  p.coproduct = read_string_map(j, "coproduct");
  p.coproduct_closed = read_string_map(j, "coproduct_closed");
  p.counit = read_string_map(j, "counit");
  p.antipode = read_string_map(j, "antipode");
  if (j.contains("legend")) p.legend = j.at("legend").get<std::string>();
  return p;
}

}  // namespace qhw
