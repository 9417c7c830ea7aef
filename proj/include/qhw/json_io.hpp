#pragma once

#include "qhw/bialgebra.hpp"
#include "qhw/poisson.hpp"
#include "qhw/quantization.hpp"

#include <json.hpp>

#include <string>

namespace qhw {

using Json = nlohmann::ordered_json;

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

/// Rational from a string ("-3/4") or an integer literal.
Rational rational_from_json(const Json& j, const std::string& field);

/// Object with optional keys a1..a3, b1..b3, c1..c3. Missing a and b keys
/// are zero; a missing c key takes its cocycle-forced value (c1 = 0,
/// c2 = b1, c3 = -a1). Unknown keys are rejected.
Cocommutator cocommutator_from_json(const Json& j, int order = kDefaultOrder);
Json to_json(const Cocommutator& delta);

/// Object with optional keys xi, beta_plus, beta_minus.
RMatrix rmatrix_from_json(const Json& j, int order = kDefaultOrder);
Json to_json(const RMatrix& r);

/// Triple [m, a-, a+] of rationals.
GroupCoords<Rational> group_from_json(const Json& j);
Json to_json(const GroupCoords<Rational>& g);

Json to_json(const BialgebraClass& cls);
Json to_json(const ResidualReport& report);

Json to_json(const RenderedPresentation& p);
RenderedPresentation rendered_from_json(const Json& j);

}  // namespace qhw
