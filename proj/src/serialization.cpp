#include "qonsager/serialization.hpp"

namespace qonsager {

SpecError::SpecError(std::string field, const std::string& detail)
    : std::invalid_argument("invalid field '" + field + "': " + detail), field_(std::move(field)) {}

json to_json(const Rational& x) { return x.to_string(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GeneratorSet& g) {
  return {{"dim", g.dim},
          {"matrices",
           {{"e0p", to_json(g.e0p)},
            {"e0m", to_json(g.e0m)},
            {"e1p", to_json(g.e1p)},
            {"e1m", to_json(g.e1m)},
            {"k0", to_json(g.k0)},
            {"k0inv", to_json(g.k0inv)}}}};
}

json to_json(const OnsagerPair& pair) {
  return {{"dim", pair.dim()},
          {"params",
           {{"q", to_json(pair.q.value())}, {"s", to_json(pair.params.s)}, {"t", to_json(pair.params.t)}}},
          {"Z", to_json(pair.z)},
          {"Zstar", to_json(pair.z_star)}};
}

json to_json(const RelationReport& report) {
  json out = json::array();
  for (const auto& c : report.checks) out.push_back({{"relation", c.relation}, {"ok", c.ok}});
  return out;
}

json to_json(const QStringMultiset& strings) {
  json out = json::array();
  for (const auto& s : strings) out.push_back({{"ell", s.ell()}, {"a", to_json(s.base())}});
  return out;
}

json to_json(const ScalarMultiset& scalars) {
  json out = json::array();
  for (const auto& x : scalars) out.push_back(to_json(x));
  return out;
}

json to_json(const AnalysisReport& report) {
  json out = {{"loop_relations_ok", report.loop_relations_ok},
              {"td_relations_ok", report.td_relations_ok},
              {"criteria", {{"i1", report.criteria.i1}, {"i2", report.criteria.i2}, {"i3", report.criteria.i3}}},
              {"irreducible", report.criteria.irreducible()},
              {"burnside", report.burnside},
              {"agree", report.agree}};
  if (report.profile) {
    out["theta"] = to_json(ScalarMultiset(report.profile->theta));
    out["theta_star"] = to_json(ScalarMultiset(report.profile->theta_star));
    out["dims_U"] = report.profile->dims_u;
    out["g_product_match"] = report.g_product_match;
    out["leonard"] = report.leonard;
  }
  return out;
}

Rational rational_from_json(const json& value, const std::string& field) {
  if (!value.is_string()) throw SpecError(field, "expected a rational string such as \"3/2\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(field, e.what());
  }
}

QStringMultiset qstrings_from_json(const json& value) {
  if (!value.is_array()) throw SpecError("strings", "expected an array");
  QStringMultiset out;
  for (const auto& entry : value) {
    if (!entry.is_object() || !entry.contains("ell") || !entry.contains("a")) {
      throw SpecError("strings", "each entry needs \"ell\" and \"a\"");
    }
    if (!entry["ell"].is_number_integer() || entry["ell"].get<long>() < 1) {
      throw SpecError("ell", "must be an integer >= 1");
    }
    Rational a = rational_from_json(entry["a"], "a");
    if (a.is_zero()) throw SpecError("a", "must be nonzero");
    out.emplace_back(entry["ell"].get<long>(), std::move(a));
  }
  return out;
}

ScalarMultiset scalars_from_json(const json& value) {
  if (!value.is_array()) throw SpecError("omega", "expected an array");
  ScalarMultiset out;
  for (const auto& entry : value) out.push_back(rational_from_json(entry, "omega"));
  return out;
}

SpecFile parse_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("spec", "expected a JSON object");
  for (const char* key : {"q", "factors", "s", "t"}) {
    if (!doc.contains(key)) throw SpecError(key, "missing");
  }

  const Rational q_value = rational_from_json(doc["q"], "q");
  std::optional<QParam> q;
  try {
    q.emplace(q_value);
  } catch (const std::domain_error& e) {
    throw SpecError("q", e.what());
  }

  const json& factors = doc["factors"];
  if (!factors.is_array() || factors.empty()) throw SpecError("factors", "expected a nonempty array");
  std::vector<EvaluationSpec> specs;
  for (const auto& f : factors) {
    if (!f.is_object()) throw SpecError("factors", "each factor must be an object");
    if (!f.contains("ell")) throw SpecError("ell", "missing");
    if (!f.contains("a")) throw SpecError("a", "missing");
    if (!f["ell"].is_number_integer() || f["ell"].get<long>() < 1) {
      throw SpecError("ell", "must be an integer >= 1");
    }
    Rational a = rational_from_json(f["a"], "a");
    if (a.is_zero()) throw SpecError("a", "must be nonzero");
    specs.push_back({f["ell"].get<long>(), std::move(a)});
  }

  OnsagerParams params{rational_from_json(doc["s"], "s"), rational_from_json(doc["t"], "t")};
  if (params.s.is_zero()) throw SpecError("s", "must be nonzero");
  if (params.t.is_zero()) throw SpecError("t", "must be nonzero");

  return {ModuleSpec{*q, std::move(specs)}, std::move(params)};
}

}  // namespace qonsager
