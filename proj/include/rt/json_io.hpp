#ifndef RT_JSON_IO_HPP
#define RT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "rt/families.hpp"
#include "rt/spectral.hpp"

namespace rt {

using Json = nlohmann::json;

Json rat_vec_to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vec_from_json(const Json& j, const std::string& field);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& field);

// triple.json: { "family": "hg:5", "spectrum": {"a": [...], "b": [...],
// "c": [...]}, "B": [[...]], "C": [[...]], "A": [[...]] } with "num/den"
// rational strings.
Json triple_to_json(const RigidTriple& t);
// Reads the matrices as stored (no reconstruction), so corrupted inputs
// surface in verification rather than being silently repaired.
RigidTriple triple_from_json(const Json& j);

// form.json: { "gram": [...], "G": [[...]] }
Json form_to_json(const InvariantForm& f);

// File helpers; parse errors surface as SchemaError with position info.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace rt

#endif
