#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kconvex/geom.hpp"
#include "kconvex/regions.hpp"

namespace kconvex {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json polygon_to_json(const Polygon& poly) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& p : poly.vertices)
    verts.push_back({to_string(p.x), to_string(p.y)});
  return {{"vertices", std::move(verts)}};
}

inline Polygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw IoError("polygon JSON needs a \"vertices\" array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw IoError("each vertex must be a [x, y] pair of rational strings");
    try {
      pts.push_back({parse_rational(v[0].get<std::string>()),
                     parse_rational(v[1].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  }
  return validate_polygon(std::move(pts));
}

inline nlohmann::json family_to_json(const std::map<std::string, Polygon>& polys) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, poly] : polys) out[id] = polygon_to_json(poly);
  return {{"polygons", std::move(out)}};
}

inline std::map<std::string, Polygon> family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("polygons") || !j["polygons"].is_object())
    throw IoError("family JSON needs a \"polygons\" object");
  std::map<std::string, Polygon> out;
  for (const auto& [id, pj] : j["polygons"].items()) out.emplace(id, polygon_from_json(pj));
  if (out.empty()) throw IoError("family JSON has no polygons");
  return out;
}

/// Region expression syntax: "id" | ["union", e...] | ["intersect", e...].
inline RegionExpr::Node region_node_from_json(const nlohmann::json& j) {
  if (j.is_string()) return RegionExpr::leaf(j.get<std::string>());
  if (j.is_array() && !j.empty() && j[0].is_string()) {
    std::string op = j[0].get<std::string>();
    std::vector<RegionExpr::Node> children;
    for (std::size_t i = 1; i < j.size(); ++i)
      children.push_back(region_node_from_json(j[i]));
    if (children.empty()) throw IoError("region operator '" + op + "' needs operands");
    if (op == "union") return RegionExpr::union_of(std::move(children));
    if (op == "intersect") return RegionExpr::intersect_of(std::move(children));
    throw IoError("unknown region operator: '" + op + "'");
  }
  throw IoError("region expression must be an id string or [op, ...] array");
}

inline RegionExpr region_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("expr"))
    throw IoError("region spec needs \"polygons\" and \"expr\"");
  RegionExpr e;
  e.env = family_from_json(j);
  e.root = region_node_from_json(j["expr"]);
  return e;
}

/// Whole input file; "-" reads stdin.
inline std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

inline nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_input(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace kconvex
