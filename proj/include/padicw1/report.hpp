#pragma once

#include <string>

#include <json.hpp>

#include "padicw1/families.hpp"
#include "padicw1/hecke_structure.hpp"
#include "padicw1/linvariant.hpp"
#include "padicw1/series.hpp"

namespace padicw1 {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "padicw1.report/1";

/// {"p", "valuation" (null for a zero), "unit_digits" (base p, little
/// endian), "precision" (relative), "text"}; zeros add "absolute_precision".
Json to_json(const Padic& x);
Json to_json(const TruncatedSeries<Padic>& s);
Json to_json(const QExpansion<Padic>& q);
Json to_json(const FamilyExpansion& q);
Json to_json(const PUnitData& u);
Json to_json(const ProductElement& x);

/// {"name", "digits", "threshold", "pass"}; exact agreement is reported as
/// "digits": "exact".
Json claim(const std::string& name, int digits, int threshold);

/// PUnitData from {"coefficients": [c0, c1, ...], "valuation": e}.
/// Coefficients may be integers or "a/b" strings.
PUnitData unit_from_json(const Json& j);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// An agreement count as JSON: the integer, or "exact".
Json digits_json(int digits);

}  // namespace padicw1
