#include "shearlab/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace shearlab {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    fail(Errc::Schema, msg + " (at " + (path.empty() ? "/" : path) + ")");
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) schema_fail(path + "/" + key, "missing required field");
    return j.at(key);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) schema_fail(path, "expected a number");
    return j.get<double>();
}

}  // namespace

BoundaryPoint parse_boundary_point(const json& j, const std::string& path) {
    if (j.is_number()) return BoundaryPoint::finite(j.get<double>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "-inf") return BoundaryPoint::infinity();
        schema_fail(path, "boundary point string must be \"inf\"");
    }
    if (j.is_array() && j.size() == 2)
        return BoundaryPoint::projective(require_number(j[0], path + "/0"),
                                         require_number(j[1], path + "/1"));
    schema_fail(path, "boundary point must be a number, \"inf\", or a pair [a, b]");
}

namespace {

Geodesic parse_geodesic(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) schema_fail(path, "geodesic must be a pair of boundary points");
    BoundaryPoint src = parse_boundary_point(j[0], path + "/0");
    BoundaryPoint tgt = parse_boundary_point(j[1], path + "/1");
    if (same_point(src, tgt)) schema_fail(path, "geodesic endpoints coincide");
    return Geodesic(src, tgt);
}

Isometry parse_gamma(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "gamma must be an object with \"matrix\" or \"axis\"+\"length\"");
    if (j.contains("matrix")) {
        const json& m = j.at("matrix");
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
            !m[1].is_array() || m[1].size() != 2)
            schema_fail(path + "/matrix", "matrix must be 2x2");
        double a = require_number(m[0][0], path + "/matrix/0/0");
        double b = require_number(m[0][1], path + "/matrix/0/1");
        double c = require_number(m[1][0], path + "/matrix/1/0");
        double d = require_number(m[1][1], path + "/matrix/1/1");
        if (!(a * d - b * c > 0.0)) schema_fail(path + "/matrix", "matrix must have positive determinant");
        return Isometry::from_matrix(a, b, c, d);
    }
    if (j.contains("axis")) {
        Geodesic ax = parse_geodesic(require_field(j, "axis", path), path + "/axis");
        double len = require_number(require_field(j, "length", path), path + "/length");
        if (!(len > 0.0)) schema_fail(path + "/length", "length must be positive");
        return translate_along(ax, len);
    }
    schema_fail(path, "gamma needs either \"matrix\" or \"axis\"+\"length\"");
}

std::vector<Leaf> parse_leaves(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) schema_fail(path, "leaves must be a nonempty array");
    std::vector<Leaf> leaves;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        const json& lj = j[i];
        if (!lj.is_object()) schema_fail(p, "leaf must be an object");
        Geodesic g = parse_geodesic(require_field(lj, "geodesic", p), p + "/geodesic");
        double w = require_number(require_field(lj, "weight", p), p + "/weight");
        leaves.push_back(Leaf{g, w});
    }
    return leaves;
}

std::optional<InteriorPoint> parse_basepoint(const json& j, const std::string& path) {
    if (!j.contains("basepoint")) return std::nullopt;
    const json& b = j.at("basepoint");
    if (!b.is_array() || b.size() != 2) schema_fail(path + "/basepoint", "basepoint must be [x, y]");
    double x = require_number(b[0], path + "/basepoint/0");
    double y = require_number(b[1], path + "/basepoint/1");
    if (!(y > 0.0)) schema_fail(path + "/basepoint/1", "basepoint needs y > 0");
    return InteriorPoint(x, y);
}

std::vector<double> parse_mass_list(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_number(j[i], path + "/" + std::to_string(i)));
    return out;
}

}  // namespace

SceneFile parse_scene_json(const json& j) {
    if (!j.is_object()) schema_fail("", "scene must be a JSON object");
    const json& kj = require_field(j, "kind", "");
    if (!kj.is_string()) schema_fail("/kind", "kind must be a string");
    std::string kind = kj.get<std::string>();

    SceneFile scene;
    scene.kind = kind;
    if (kind == "shear_config") {
        Isometry gamma = parse_gamma(require_field(j, "gamma", ""), "/gamma");
        std::vector<Leaf> leaves = parse_leaves(require_field(j, "leaves", ""), "/leaves");
        scene.config = build_config(gamma, leaves, parse_basepoint(j, ""));
        return scene;
    }
    if (kind == "twist_scene") {
        Isometry gamma = parse_gamma(require_field(j, "gamma", ""), "/gamma");
        Geodesic h = parse_geodesic(require_field(j, "h", ""), "/h");
        std::vector<Geodesic> probes;
        if (j.contains("probes")) {
            const json& pj = j.at("probes");
            if (!pj.is_array()) schema_fail("/probes", "probes must be an array of geodesics");
            for (std::size_t i = 0; i < pj.size(); ++i)
                probes.push_back(parse_geodesic(pj[i], "/probes/" + std::to_string(i)));
        }
        scene.twist = make_twist_scene(gamma, h, probes);
        return scene;
    }
    if (kind == "multicurve") {
        std::vector<Leaf> leaves = parse_leaves(require_field(j, "leaves", ""), "/leaves");
        const json& comps = require_field(j, "components", "");
        if (!comps.is_array() || comps.empty())
            schema_fail("/components", "components must be a nonempty array");
        std::vector<ShearConfig> configs;
        std::vector<double> mu;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::string p = "/components/" + std::to_string(i);
            Isometry gamma = parse_gamma(require_field(comps[i], "gamma", p), p + "/gamma");
            double m = require_number(require_field(comps[i], "mu", p), p + "/mu");
            if (!(m >= 0.0)) schema_fail(p + "/mu", "component weight must be nonnegative");
            configs.push_back(build_config(gamma, leaves, parse_basepoint(comps[i], p)));
            mu.push_back(m);
        }
        scene.multicurve = make_multicurve(std::move(configs), std::move(mu));
        return scene;
    }
    if (kind == "spiral") {
        SpiralParams p;
        p.L = require_number(require_field(j, "L", ""), "/L");
        p.g0 = require_number(require_field(j, "g0", ""), "/g0");
        p.g1 = require_number(require_field(j, "g1", ""), "/g1");
        p.g_masses = parse_mass_list(require_field(j, "g_masses", ""), "/g_masses");
        if (j.contains("h_masses")) p.h_masses = parse_mass_list(j.at("h_masses"), "/h_masses");
        if (j.contains("total_mass")) p.total_mass = require_number(j.at("total_mass"), "/total_mass");
        spiral_config(p);  // validates the seed data
        scene.spiral = p;
        return scene;
    }
    schema_fail("/kind", "unknown scene kind \"" + kind + "\"");
}

SceneFile parse_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Io, "cannot open scene file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::Schema, std::string("invalid JSON: ") + e.what());
    }
    return parse_scene_json(j);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_json(std::ostream& os, const nlohmann::ordered_json& j, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent > 0) {
            os << '\n';
            for (int i = 0; i < d * indent; ++i) os << ' ';
        }
    };
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            os << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',';
                first = false;
                pad(depth + 1);
                os << nlohmann::ordered_json(it.key()).dump() << (indent > 0 ? ": " : ":");
                write_json(os, it.value(), indent, depth + 1);
            }
            if (!first) pad(depth);
            os << '}';
            break;
        }
        case nlohmann::ordered_json::value_t::array: {
            os << '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) os << ',';
                first = false;
                pad(depth + 1);
                write_json(os, el, indent, depth + 1);
            }
            if (!first) pad(depth);
            os << ']';
            break;
        }
        case nlohmann::ordered_json::value_t::number_float: os << format_double(j.get<double>()); break;
        default: os << j.dump(); break;
    }
}

}  // namespace

std::string dump_report(const nlohmann::ordered_json& j, int indent) {
    std::ostringstream os;
    write_json(os, j, indent, 0);
    os << '\n';
    return os.str();
}

}  // namespace shearlab
