#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqas/catalog.hpp"
#include "sqas/recursion.hpp"
#include "sqas/structure.hpp"
#include "sqas/transforms.hpp"

namespace sqas {

using Json = nlohmann::json;

// Malformed or inconsistent input documents.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" (or "p") in lowest terms; {"rat": "p/q", "sqrt3": "r/s"} for irrational values.
Json scalar_to_json(const Scalar& s);
// Accepts the forms above and JSON integers.
Scalar scalar_from_json(const Json& j);

Json structure_to_json(const SQASTensors& t);
SQASTensors structure_from_json(const Json& j);

struct TableDocument {
  std::string structure;
  int level = 0;
  std::map<TableKey, Scalar> entries;
};

Json table_to_json(FreeEnergyTable& table, int max_level);
Json table_to_json(const TableDocument& doc);
TableDocument table_from_json(const Json& j);

Json report_to_json(const ConstraintReport& rep);
Json coefficients_to_json(const std::vector<SeriesCoefficient>& coeffs);

Json gauge_to_json(const GaugeData& s);
GaugeData gauge_from_json(const Json& j);

Json classical_to_json(const ClassicalStructure& cl);

// Object of name -> value; values as in scalar_from_json.
Params params_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump_json(const Json& j, bool pretty);

}  // namespace sqas
