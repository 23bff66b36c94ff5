#include "padicw1/report.hpp"

#include <stdexcept>

namespace padicw1 {

Json to_json(const Padic& x) {
  Json j;
  j["p"] = x.prime();
  j["text"] = x.to_string();
  if (x.is_zero()) {
    j["valuation"] = nullptr;
    j["unit_digits"] = Json::array();
    j["precision"] = 0;
    j["absolute_precision"] = digits_json(x.absolute_precision());
  } else {
    j["valuation"] = *x.valuation();
    j["unit_digits"] = x.unit_digits();
    j["precision"] = x.relative_precision();
  }
  return j;
}

Json to_json(const TruncatedSeries<Padic>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"mx", s.mx()}, {"coefficients", coeffs}};
}

Json to_json(const QExpansion<Padic>& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"label", q.label()}, {"n_max", q.n_max()}, {"coefficients", coeffs}};
}

Json to_json(const FamilyExpansion& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"label", q.label()}, {"n_max", q.n_max()}, {"coefficients", coeffs}};
}

Json to_json(const PUnitData& u) {
  Json coeffs = Json::array();
  for (const auto& c : u.coefficients) coeffs.push_back(c.get_str());
  return Json{{"coefficients", coeffs}, {"valuation", u.valuation}, {"label", u.label}};
}

Json to_json(const ProductElement& x) {
  Json comps = Json::array();
  for (int i = 0; i < x.r; ++i) {
    Json c = Json::array();
    for (int k = 0; k < x.mx; ++k) c.push_back(to_json(x.at(i, k)));
    comps.push_back(c);
  }
  return comps;
}

Json digits_json(int digits) {
  if (digits >= Padic::kExact) return "exact";
  return digits;
}

Json claim(const std::string& name, int digits, int threshold) {
  return Json{{"name", name},
              {"digits", digits_json(digits)},
              {"threshold", threshold},
              {"pass", digits >= threshold}};
}

PUnitData unit_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j.contains("valuation")) {
    throw PreconditionError("unit data needs \"coefficients\" and \"valuation\"");
  }
  PUnitData u;
  for (const auto& c : j.at("coefficients")) {
    if (c.is_number_integer()) {
      u.coefficients.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      mpq_class q;
      if (q.set_str(c.get<std::string>(), 10) != 0) {
        throw PreconditionError("bad unit coefficient '" + c.get<std::string>() + "'");
      }
      q.canonicalize();
      u.coefficients.push_back(q);
    } else {
      throw PreconditionError("unit coefficients must be integers or strings");
    }
  }
  if (u.coefficients.size() < 2) throw PreconditionError("unit polynomial has degree < 1");
  u.valuation = j.at("valuation").get<int>();
  u.label = j.value("label", std::string("user unit"));
  return u;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace padicw1
