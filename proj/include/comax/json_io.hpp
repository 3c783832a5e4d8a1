#pragma once

#include <json.hpp>

#include "comax/props.hpp"

namespace comax {

using nlohmann::json;

json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json mat_to_json(const Mat& m);
json cover_to_json(const Coalgebra& c, const CoalgebraCover& cov);
json report_to_json(const Coalgebra& c, const PropertyReport& r);

/// Canonical serialisation: keys sorted (nlohmann objects), structure
/// constant triples sorted, 2-space indent, trailing newline.
std::string dump_canonical(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace comax
