#pragma once

#include <json.hpp>
#include <string>

#include "taxicab/cone_model.hpp"
#include "taxicab/oracle.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
// Accepts "p/q", "p", or a JSON integer.
Rational rational_from_json(const Json& j);
Json point_json(const Point2& p);
Point2 point_from_json(const Json& j);
Triple parse_triple(const std::string& comma_separated);

ConeSpec cone_from_json(const Json& j);
Json cone_json(const ConeSpec& cone);
ConeSpec load_cone(const std::string& path);

Json section_json(const ConicSection& section);
ConicSection section_from_json(const Json& j);

Json report_json(const VerificationReport& report);

}  // namespace taxicab
