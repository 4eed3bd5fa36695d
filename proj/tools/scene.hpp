#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tits/collections.hpp"

namespace tits::cli {

struct SceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scene {
  std::string name;
  Geometry geometry;
  std::vector<RatVec> hyperplanes;
  std::vector<RatVec> points;  // chart points (E, H) or representatives (S)
  std::optional<ConvexPolytope> polytope_a;
  std::optional<RatVec> u;  // extra hyperplane for the exact sequence
  std::string mode;         // "hyperplanes" or "points"
  std::vector<std::string> checks;
  int p_max = -1;
  nlohmann::json expect;  // check name -> verdict, or {"verdict": ..., "values": {pointer: value}}
  nlohmann::json source;  // the parsed document
};

// Throws SceneError with a diagnostic naming the offending entry.
Scene parse_scene(const nlohmann::json& j);
Scene load_scene(const std::string& path);

// The flat collection the scene describes.
Collection scene_collection(const Scene& s);

// 64-bit FNV-1a over the canonical dump of the scene document, as hex.
std::string scene_digest(const Scene& s);
std::string fnv1a_hex(const std::string& bytes);

nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const LinearSubspace& v);

}  // namespace tits::cli
