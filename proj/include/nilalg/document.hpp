#ifndef NILALG_DOCUMENT_HPP
#define NILALG_DOCUMENT_HPP

#include "nilalg/algebra.hpp"
#include "nilalg/catalog.hpp"
#include "nilalg/constraints.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilalg {

using Json = nlohmann::ordered_json;

// JSON interchange:
//
//   {
//     "dim": 3,
//     "basis": ["e1", "e2", "e3"],
//     "products": [
//       {"left": 1, "right": 1, "result": [{"index": 2, "coeff": "1/1"}]},
//       ...
//     ],
//     "metadata": {...}
//   }
//
// Indices are 1-based. Coefficients are "num/den" strings; a bare integer
// string is accepted on input.

struct AlgebraDocument {
  Algebra algebra;
  Json metadata = Json::object();
  std::vector<std::string> warnings;  // unknown fields, one line each
};

/// Throws Error(Schema) naming the line (syntax errors) or the JSON pointer
/// of the offending field.
AlgebraDocument parse_document(std::string_view text);
inline Algebra parse_algebra(std::string_view text) { return parse_document(text).algebra; }

Json algebra_to_json(const Algebra& algebra, const Json& metadata = Json::object());
/// Pretty-printed with a trailing newline.
std::string emit(const Algebra& algebra, const Json& metadata = Json::object());

Json family_to_json(const FamilySpec& spec);
/// Inverse of family_to_json; throws Error(Schema).
FamilySpec family_from_json(const Json& j);

/// Catalog instance with its FamilySpec under metadata["family"].
std::string emit_family(const FamilySpec& spec);
/// FamilySpec recorded in a parsed document, if any.
std::optional<FamilySpec> document_family(const AlgebraDocument& doc);

Json constraints_to_json(const ConstraintSystem& system);

}  // namespace nilalg

#endif  // NILALG_DOCUMENT_HPP
