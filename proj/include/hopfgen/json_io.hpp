#pragma once

// JSON serialization.  Scalars are arrays of coefficient strings, lowest degree
// first; every top-level document carries "schema": 1.

#include <string>
#include <vector>

#include "json.hpp"

#include "hopfgen/arith.hpp"
#include "hopfgen/cocycle.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/report.hpp"
#include "hopfgen/tring.hpp"

namespace hopfgen {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema = 1;

inline Json scalar_to_json(const Scalar& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.get_str());
  return a;
}

inline Scalar scalar_from_json(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) throw FormatError("scalar must be an array of coefficient strings");
  RatPoly c;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError("scalar coefficient must be a string");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  if (field) return Scalar(field, std::move(c));
  if (c.size() > 1) throw FormatError("irrational scalar without a field");
  return c.empty() ? Scalar(0) : Scalar(c[0]);
}

inline Json report_to_json(const Report& r) {
  Json checks = Json::object();
  for (const auto& c : r.checks) {
    Json e{{"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks[c.name] = std::move(e);
  }
  return checks;
}

inline Json group_to_json(const FiniteGroup& g) {
  return Json{{"labels", g.labels()}, {"table", g.table()}};
}

inline FiniteGroup group_from_json(const Json& j) {
  try {
    return FiniteGroup(j.at("labels").get<std::vector<std::string>>(),
                       j.at("table").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("group JSON: ") + e.what());
  }
}

inline Json telement_to_json(const TElement& e, const std::vector<std::string>& labels) {
  Json terms = Json::array();
  for (const auto& [m, s] : e.terms()) {
    Json exps = Json::object();
    for (const auto& [b, k] : m.factors()) exps[labels[b]] = k;
    terms.push_back(Json{{"coef", scalar_to_json(s)}, {"exponents", std::move(exps)}});
  }
  return Json{{"text", to_string(e, labels)}, {"terms", std::move(terms)}};
}

inline Json hopf_to_json(const HopfAlgebra& h) {
  Json j;
  j["schema"] = json_schema;
  j["family"] = h.family_name();
  j["field"] = h.field ? h.field->n : 1;
  j["dim"] = h.dim;
  j["labels"] = h.labels;
  j["unit"] = h.unit;
  Json mult = Json::array();
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b)
      for (const auto& [k, c] : h.product(a, b)) mult.push_back(Json{a, b, k, scalar_to_json(c)});
  j["mult"] = std::move(mult);
  Json comult = Json::array();
  for (int a = 0; a < h.dim; ++a)
    for (const auto& t : h.comult[a]) comult.push_back(Json{a, t.left, t.right, scalar_to_json(t.coef)});
  j["comult"] = std::move(comult);
  Json counit = Json::array();
  for (const auto& c : h.counit) counit.push_back(scalar_to_json(c));
  j["counit"] = std::move(counit);
  Json antipode = Json::array();
  for (int a = 0; a < h.dim; ++a)
    for (int k = 0; k < h.dim; ++k)
      if (!h.antipode[a][k].is_zero()) antipode.push_back(Json{a, k, scalar_to_json(h.antipode[a][k])});
  j["antipode"] = std::move(antipode);
  j["grouplikes"] = h.grouplikes;
  return j;
}

/// Re-ingests a dump as a generic Hopf algebra (no family tag).
inline HopfAlgebra hopf_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != json_schema) throw FormatError("unsupported schema");
    HopfAlgebra h;
    int n = j.at("field").get<int>();
    h.field = n > 1 ? make_field(n) : nullptr;
    h.dim = j.at("dim").get<int>();
    if (h.dim <= 0) throw FormatError("dim must be positive");
    h.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(h.labels.size()) != h.dim) throw FormatError("label count differs from dim");
    h.unit = j.at("unit").get<int>();
    auto index = [&](const Json& v) {
      int i = v.get<int>();
      if (i < 0 || i >= h.dim) throw FormatError("basis index out of range");
      return i;
    };
    h.mult.assign(static_cast<std::size_t>(h.dim) * h.dim, {});
    for (const auto& e : j.at("mult"))
      h.mult[static_cast<std::size_t>(index(e.at(0))) * h.dim + index(e.at(1))].emplace_back(
          index(e.at(2)), scalar_from_json(e.at(3), h.field));
    h.comult.assign(h.dim, {});
    for (const auto& e : j.at("comult"))
      h.comult[index(e.at(0))].push_back({index(e.at(1)), index(e.at(2)), scalar_from_json(e.at(3), h.field)});
    for (const auto& e : j.at("counit")) h.counit.push_back(scalar_from_json(e, h.field));
    if (static_cast<int>(h.counit.size()) != h.dim) throw FormatError("counit length differs from dim");
    h.antipode.assign(h.dim, std::vector<Scalar>(h.dim, Scalar(0)));
    for (const auto& e : j.at("antipode")) h.antipode[index(e.at(0))][index(e.at(1))] = scalar_from_json(e.at(2), h.field);
    for (const auto& g : j.at("grouplikes")) h.grouplikes.push_back(index(g));
    h.gpart.assign(h.dim, -1);
    h.ypart.assign(h.dim, -1);
    return h;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("Hopf JSON: ") + e.what());
  }
}

inline Json cocycle_to_json(const HopfAlgebra& h, const TwoCocycle& a) {
  Json values = Json::array();
  for (int x = 0; x < h.dim; ++x) {
    Json row = Json::array();
    for (int y = 0; y < h.dim; ++y) row.push_back(scalar_to_json(a.values[x][y]));
    values.push_back(std::move(row));
  }
  return Json{{"schema", json_schema}, {"values", std::move(values)}};
}

/// Verified on construction (InvalidCocycle).
inline TwoCocycle cocycle_from_json(const HopfAlgebra& h, const Json& j) {
  try {
    ScalarMatrix v;
    for (const auto& row : j.at("values")) {
      std::vector<Scalar> r;
      for (const auto& e : row) r.push_back(scalar_from_json(e, h.field));
      if (static_cast<int>(r.size()) != h.dim) throw FormatError("cocycle row length differs from dim");
      v.push_back(std::move(r));
    }
    if (static_cast<int>(v.size()) != h.dim) throw FormatError("cocycle row count differs from dim");
    return make_cocycle(h, std::move(v));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("cocycle JSON: ") + e.what());
  }
}

}  // namespace hopfgen
