#ifndef SOLVLIE_IO_HPP
#define SOLVLIE_IO_HPP

#include <string>

#include <json.hpp>

#include "solvlie/aclass.hpp"

namespace solvlie {

using nlohmann::json;

// field descriptors: {"type":"Q"} | {"type":"GF","p":5}
//                  | {"type":"GF","p":2,"deg":2,"min_poly":[1,1,1]}
json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

// rationals as "num/den" strings (plain "num" when integral); prime-field
// elements as integers; extension elements as constant-first integer arrays
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, const json& j, int expect_len = -1);

// arrays of basis vectors
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldSpec& f, int ambient, const json& j);

// {"field":..., "dim":n, "names":[...], "brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}}]}
json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

// file helpers; malformed input raises parse_error, an invalid table lets
// jacobi_violation/alternating_violation escape untouched
LieAlgebra load_algebra(const std::string& path);
void save_json(const std::string& path, const json& j);

json decomposition_to_json(const TriangularDecomposition& t);
json certificate_to_json(const ACertificate& c);
json structure_report_to_json(const StructureReport& r);
json theorem_report_to_json(const TheoremReport& r);

// one subspace per line, for corpus auditing
std::string subspace_jsonl(const std::vector<Subspace>& subs);

}  // namespace solvlie

#endif
