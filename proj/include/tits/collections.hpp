#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tits/geometry.hpp"

namespace tits {

enum class GenerationMode { Points, Hyperplanes, Both, Raw };

// A finite poset of flats, stored as a canonical sorted set of carriers.
struct Collection {
  Geometry geometry;
  std::vector<LinearSubspace> members;  // sorted, unique
  GenerationMode mode = GenerationMode::Raw;

  std::size_t size() const { return members.size(); }
  bool contains(const LinearSubspace& v) const;
  std::optional<std::size_t> index_of(const LinearSubspace& v) const;
  bool contains_top() const;
  // Members of geometric dimension k.
  std::vector<LinearSubspace> of_dim(int k) const;
  std::vector<LinearSubspace> hyperplanes() const { return of_dim(geometry.n - 1); }
  std::vector<LinearSubspace> points() const { return of_dim(0); }
  // Canonical functionals of the hyperplane members. On S^0 this is the
  // single functional whose kernel is the empty flat {0}.
  std::vector<RatVec> hyperplane_functionals() const;
  bool operator==(const Collection& o) const { return geometry == o.geometry && members == o.members; }
};

Collection make_collection(const Geometry& g, std::vector<LinearSubspace> members, GenerationMode mode);

// Hyperplanes may be given as carriers or as functionals.
Collection closure_by_hyperplanes(const Geometry& g, const std::vector<LinearSubspace>& hyperplanes);
Collection closure_by_functionals(const Geometry& g, const std::vector<RatVec>& functionals);

struct PointClosure {
  Collection collection;
  bool generating = false;  // X^n is among the spans
};
PointClosure closure_by_points(const Geometry& g, const std::vector<LinearSubspace>& points);
// Chart points for E/H, representative vectors for S.
std::vector<LinearSubspace> point_flats(const Geometry& g, const std::vector<RatVec>& coords);

struct Variants {
  Collection cup;    // closure with U added
  Collection uplus;  // cup without U
  Collection cap;    // members of cup inside U
};
Variants variants(const Collection& l, const LinearSubspace& u);

// Members meeting the closed polytope a.
Collection restrict_to(const Collection& l, const ConvexPolytope& a);
bool meets(const Geometry& g, const LinearSubspace& v, const std::vector<RatVec>& halfspaces);

Collection dualize(const Collection& l);

enum class Admissibility { Admissible, NotAdmissible, NotDecidableFinite };
std::string admissibility_name(Admissibility a);
Admissibility admissible(const Collection& l);

bool generated_by_points(const Collection& l);
bool generated_by_hyperplanes(const Collection& l);
bool generated_by_both(const Collection& l);

// Members of l inside the carrier of the frame, in local coordinates.
Collection localize(const Collection& l, const Frame& f);

// Intersection of all hyperplane carriers (the whole space when there are none).
LinearSubspace common_intersection(const Collection& l);

}  // namespace tits
