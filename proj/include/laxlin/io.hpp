#pragma once

// JSON input and output: parsing with source locations, a validator for the
// subset of JSON Schema used by the bundled schemas, and conversions
// between JSON documents and the library types.

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "laxlin/conncalc.hpp"
#include "laxlin/polyfun.hpp"
#include "laxlin/sphere.hpp"
#include "laxlin/symseq.hpp"

namespace laxlin {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Bad input: malformed JSON (with line and column), a schema violation or
/// inconsistent data (with a JSON pointer to the offending field).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `text`; `source` names the input in error messages.
json parse_json(const std::string& text, const std::string& source);

/// The bundled schemas by name: symseq, operad, funseq, sphere, report.
const std::map<std::string, ojson>& schemas();
/// File name of a schema in a schema directory.
std::string schema_file_name(const std::string& name);
/// Which schema a document's "type" field selects; throws InputError.
std::string schema_for(const json& doc);

/// Violations as "<pointer>: message", in document order. Supports type,
/// const, enum, pattern, minLength, minimum, maximum, minItems, maxItems,
/// items, properties, required, additionalProperties, oneOf, if/then and
/// local $ref.
std::vector<std::string> validate(const json& instance, const json& schema);
/// Throws InputError with the first violation.
void require_valid(const json& doc, const std::string& source);

// ---------------------------------------------------------------------------
// Conversions. Parsers assume a schema-valid document and throw InputError
// with a pointer for semantic problems.

ojson to_json(const SymSeq& s);
SymSeq symseq_from_json(const json& j);

ojson to_json(const OperadData& op);
OperadData operad_from_json(const json& j);

ojson to_json(const PolyFunSeq& f);
PolyFunSeq funseq_from_json(const json& j);

ojson to_json(const SimplexPoint& p);
ojson to_json(const SpherePoint& p);
ojson to_json(const SuspensionPoint& p);
ojson to_json(const CubePoint& p);
Rational rational_from_json(const json& j, const std::string& path);
SpherePoint sphere_point_from_json(const json& j, const std::string& path);
/// A map descriptor on X(units, arity).
MapDescriptor descriptor_from_json(const json& j, int units, int arity, const std::string& path);
SuspensionPoint suspension_from_json(const json& j, int units, int arity, const std::string& path);

ojson to_json(const Connectivity& c);

}  // namespace laxlin
