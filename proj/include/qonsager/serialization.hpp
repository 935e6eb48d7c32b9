#pragma once

// JSON encodings. Rationals are always strings "p/r" (or "p"), never numbers.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "qonsager/exact_scalars.hpp"
#include "qonsager/loop_module.hpp"
#include "qonsager/matrix.hpp"
#include "qonsager/onsager_embedding.hpp"
#include "qonsager/qstrings.hpp"
#include "qonsager/rep_analysis.hpp"

namespace qonsager {

using json = nlohmann::json;

/// An input document that failed validation; field() names the culprit.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& detail);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

json to_json(const Rational& x);
json to_json(const Matrix& m);
json to_json(const GeneratorSet& g);
json to_json(const OnsagerPair& pair);
json to_json(const RelationReport& report);
json to_json(const QStringMultiset& strings);
json to_json(const ScalarMultiset& scalars);
json to_json(const AnalysisReport& report);

Rational rational_from_json(const json& value, const std::string& field);
QStringMultiset qstrings_from_json(const json& value);
ScalarMultiset scalars_from_json(const json& value);

/// {"q": "2", "factors": [{"ell": 1, "a": "1"}], "s": "1", "t": "3"}
struct SpecFile {
  ModuleSpec module;
  OnsagerParams params;
};

/// Throws SpecError naming the offending field.
SpecFile parse_spec(const json& doc);

}  // namespace qonsager
