#pragma once

#include "vdt/exppoly.hpp"
#include "vdt/poly.hpp"

#include "json.hpp"

#include <string>

namespace vdt {

using Json = nlohmann::ordered_json;

// exact rationals ride as {num, den} int64 pairs; the catalogue never
// approaches the int64 range
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json gaussrat_to_json(const GaussRat& c);
GaussRat gaussrat_from_json(const Json& j);

Json poly_to_json(const HomogeneousPolynomial& p);
HomogeneousPolynomial poly_from_json(const Json& j);

Json variety_to_json(const VarietyPresentation& v);
VarietyPresentation variety_from_json(const Json& j);

Json exppoly_to_json(const ExpPoly& f);
ExpPoly exppoly_from_json(const Json& j);

Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);

/// Locale-independent shortest round-trip double formatting.
std::string format_double(double v);

} // namespace vdt
