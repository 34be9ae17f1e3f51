// JSON encodings of field elements, matrices, modules, and family instances.
#pragma once

#include <json.hpp>

#include "phinmod/catalog.hpp"

namespace phinmod {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

/// Array of e rationals as "num/den" strings.
Json to_json(const FieldElement& x);
/// Accepts the array form, a single rational string, or "q*u^k" shorthand.
FieldElement field_element_from_json(const Json& j, const FieldSpec& spec);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& spec);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const FieldSpec& spec);

Json to_json(const Subspace& s);

Json to_json(const PhiNModule& m);
PhiNModule module_from_json(const Json& j);

Json to_json(const FamilyInstance& fi);
FamilyInstance instance_from_json(const Json& j, const FieldSpec& default_spec);

PhiNModule parse_module_file(const std::string& path);

}  // namespace phinmod
