#include "scene.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace tits::cli {

using nlohmann::json;

namespace {

Rational rational_field(const json& x, const std::string& where) {
  if (!x.is_string()) throw SceneError(where + ": rationals must be strings");
  try {
    return parse_rational(x.get<std::string>());
  } catch (const std::exception&) {
    throw SceneError(where + ": not a rational: \"" + x.get<std::string>() + "\"");
  }
}

RatVec vector_field(const json& x, std::size_t size, const std::string& where) {
  if (!x.is_array()) throw SceneError(where + ": expected an array");
  if (x.size() != size) throw SceneError(where + ": expected " + std::to_string(size) + " entries");
  RatVec v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(rational_field(x[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatVec functional_field(const Geometry& g, const json& x, const std::string& where) {
  RatVec f = vector_field(x, g.ambient(), where);
  if (is_zero(f)) throw SceneError(where + ": zero functional");
  if (!geo_nonempty(LinearSubspace::kernel(g.ambient(), {f}), g))
    throw SceneError(where + ": hyperplane does not meet the geometry");
  return f;
}

}  // namespace

Scene parse_scene(const json& j) {
  Scene s;
  if (!j.is_object()) throw SceneError("scene: expected a JSON object");
  s.source = j;
  if (!j.contains("geometry") || !j["geometry"].is_string()) throw SceneError("geometry: missing");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw SceneError("n: missing or not an integer");
  const std::string kind = j["geometry"].get<std::string>();
  const int n = j["n"].get<int>();
  if (n < 0 || n > 4) throw SceneError("n: supported range is 0..4");
  if (kind == "E")
    s.geometry = Geometry::euclidean(n);
  else if (kind == "H")
    s.geometry = Geometry::hyperbolic(n);
  else if (kind == "S")
    s.geometry = Geometry::spherical(n);
  else
    throw SceneError("geometry: expected E, H or S");
  const Geometry& g = s.geometry;
  if ((kind == "E" || kind == "H") && n == 0) throw SceneError("n: chart geometries need n >= 1");

  std::vector<LinearSubspace> carriers;
  if (j.contains("hyperplanes")) {
    if (!j["hyperplanes"].is_array()) throw SceneError("hyperplanes: expected an array");
    if (j["hyperplanes"].size() > 16) throw SceneError("hyperplanes: at most 16 are supported");
    for (std::size_t i = 0; i < j["hyperplanes"].size(); ++i) {
      const std::string where = "hyperplanes[" + std::to_string(i) + "]";
      RatVec f = functional_field(g, j["hyperplanes"][i], where);
      auto c = LinearSubspace::kernel(g.ambient(), {f});
      for (std::size_t k = 0; k < carriers.size(); ++k)
        if (carriers[k] == c)
          throw SceneError(where + ": duplicate of hyperplanes[" + std::to_string(k) + "]");
      carriers.push_back(c);
      s.hyperplanes.push_back(f);
    }
  }
  std::vector<LinearSubspace> seen;
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw SceneError("points: expected an array");
    const std::size_t size = g.is_chart() ? static_cast<std::size_t>(n) : g.ambient();
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      const std::string where = "points[" + std::to_string(i) + "]";
      RatVec p = vector_field(j["points"][i], size, where);
      RatVec x = g.is_chart() ? homogeneous(p) : p;
      if (is_zero(x)) throw SceneError(where + ": zero vector");
      if (!inside_model(g, x)) throw SceneError(where + ": not strictly inside the unit ball");
      auto c = LinearSubspace::span(g.ambient(), {x});
      for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == c) throw SceneError(where + ": duplicate of points[" + std::to_string(k) + "]");
      seen.push_back(c);
      s.points.push_back(p);
    }
  }
  if (j.contains("polytope_A")) {
    const json& a = j["polytope_A"];
    if (!a.is_object() || !a.contains("halfspaces") || !a["halfspaces"].is_array())
      throw SceneError("polytope_A: expected {\"halfspaces\": [...]}");
    std::vector<RatVec> hs;
    for (std::size_t i = 0; i < a["halfspaces"].size(); ++i)
      hs.push_back(functional_field(g, a["halfspaces"][i], "polytope_A.halfspaces[" + std::to_string(i) + "]"));
    auto b = polytope_from_halfspaces(g, hs);
    if (!b.polytope) throw SceneError("polytope_A: " + defect_name(b.defect));
    s.polytope_a = *b.polytope;
  }

  json opts = j.value("options", json::object());
  if (!opts.is_object()) throw SceneError("options: expected an object");
  s.name = j.value("name", std::string());
  s.mode = opts.value("mode", s.hyperplanes.empty() && !s.points.empty() ? std::string("points")
                                                                          : std::string("hyperplanes"));
  if (s.mode != "points" && s.mode != "hyperplanes") throw SceneError("options.mode: expected points or hyperplanes");
  if (s.mode == "points" && s.points.empty()) throw SceneError("options.mode: points mode without points");
  if (opts.contains("checks")) {
    if (!opts["checks"].is_array()) throw SceneError("options.checks: expected an array");
    for (const auto& c : opts["checks"]) {
      if (!c.is_string()) throw SceneError("options.checks: expected strings");
      s.checks.push_back(c.get<std::string>());
    }
  }
  if (opts.contains("p_max")) {
    if (!opts["p_max"].is_number_integer()) throw SceneError("options.p_max: expected an integer");
    s.p_max = opts["p_max"].get<int>();
  }
  if (opts.contains("u")) s.u = functional_field(g, opts["u"], "options.u");
  s.expect = opts.value("expect", json::object());
  if (!s.expect.is_object()) throw SceneError("options.expect: expected an object");
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scene(j);
}

Collection scene_collection(const Scene& s) {
  if (s.mode == "points") {
    auto pc = closure_by_points(s.geometry, point_flats(s.geometry, s.points));
    if (!pc.generating) throw SceneError("points: they do not span the whole space");
    return pc.collection;
  }
  return closure_by_functionals(s.geometry, s.hyperplanes);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string scene_digest(const Scene& s) { return fnv1a_hex(s.source.dump()); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const LinearSubspace& v) {
  json rows = json::array();
  for (const auto& r : v.basis().row_data()) rows.push_back(to_json(r));
  return rows;
}

}  // namespace tits::cli
