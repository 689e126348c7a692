#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "shearlab/derivatives.hpp"
#include "shearlab/twist.hpp"

namespace shearlab {

// Parsed scene file: exactly one payload is set, matching `kind`.
struct SceneFile {
    std::string kind;  // "shear_config" | "twist_scene" | "multicurve" | "spiral"
    std::optional<ShearConfig> config;
    std::optional<TwistScene> twist;
    std::optional<WeightedMulticurve> multicurve;
    std::optional<SpiralParams> spiral;
};

// Reads and validates a scene. Schema violations raise Errc::Schema with a
// JSON-pointer path; geometric validation failures propagate the library
// error that caused them. errors: Io, Schema, plus geometry errors.
SceneFile parse_scene(const std::string& path);
SceneFile parse_scene_json(const nlohmann::json& j);

// Boundary point from JSON: a number, the string "inf", or a projective
// pair [a, b].
BoundaryPoint parse_boundary_point(const nlohmann::json& j, const std::string& path);

// Report serialization: floats rendered with 17 significant digits so the
// values round-trip exactly; key order preserved.
std::string format_double(double v);
std::string dump_report(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace shearlab
