#pragma once

#include <json.hpp>

#include "shilov/system.hpp"

namespace shilov {

using Json = nlohmann::json;

// Matrix wire format: {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}.
Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

// Elements of product systems are arrays of matrix objects; single-factor
// elements may be a bare matrix object.
Json element_to_json(const Element& e);
Element element_from_json(const TripleSystem& sys, const Json& j);

Json operator_to_json(const CMat& op);

}  // namespace shilov
