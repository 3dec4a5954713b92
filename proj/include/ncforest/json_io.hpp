#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ncforest/path_system.hpp"

namespace ncf {

using Json = nlohmann::json;

// {"vertices": n, "rotation": [[...]], "outer_dart": [u, v], "paths": [[...]]}
Json instance_to_json(const PathSystem& ps);
PathSystem instance_from_json(const Json& j);

Json read_json(std::istream& in);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace ncf
