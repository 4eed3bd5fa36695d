#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tits/collections.hpp"
#include "tits/integer.hpp"

namespace tits {

struct Cell {
  std::vector<int> signs;  // -1, 0, +1 per hyperplane
  LinearSubspace flat;     // span of the cell
  int dim = 0;
  RatVec witness;          // homogeneous point in the relative interior
  bool in_model = true;    // hyperbolic: the cell meets the open ball
};

std::string sign_key(const std::vector<int>& signs);

// The arrangement cut out on X^n by finitely many hyperplanes. For hyperbolic
// geometry every cell of the Klein chart is kept and flagged by whether it
// meets the model.
struct Arrangement {
  Geometry geometry;
  std::vector<RatVec> hyperplanes;  // canonical functionals
  std::vector<Cell> cells;          // sorted by dim, then sign key
  std::map<std::vector<int>, std::size_t> index;

  // Closure order: cell i lies in the closure of cell j.
  bool leq(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> cells_of_dim(int d) const;  // model cells only
  std::vector<std::size_t> closure(std::size_t j) const;  // model cells below j, j included
  std::vector<int> signs_of(const RatVec& x) const;
  std::optional<std::size_t> locate(const RatVec& x) const;
  std::optional<std::size_t> hyperplane_index(const RatVec& functional) const;
  // Half-space description of the closure of a cell (equalities as two rows).
  std::vector<RatVec> closure_halfspaces(std::size_t j) const;
};

// Refuses n > 4 or more than 16 hyperplanes.
Arrangement build_arrangement(const Geometry& g, const std::vector<RatVec>& hyperplanes);
Arrangement build_arrangement(const Collection& l);

// Whether the closed chart polyhedron {rows >= 0, eqs = 0} meets the open
// hyperbolic model; on success also returns a point of the relatively open
// set {rows > 0, eqs = 0} inside the model, starting from `interior`.
std::optional<RatVec> model_witness(const Geometry& g, const std::vector<RatVec>& rows,
                                    const std::vector<RatVec>& eqs, const RatVec& interior);

bool cell_bounded(const Arrangement& a, std::size_t cell);

// Bounded n-cells (E, H) or all n-cells (S), ordered by sign key.
std::vector<std::size_t> region_basis(const Arrangement& a);
// Basis regions whose interiors lie in the polytope with the given half-spaces.
std::vector<std::size_t> regions_inside(const Arrangement& a, const std::vector<std::size_t>& basis,
                                        const std::vector<RatVec>& halfspaces);

// Multiplicity vector over the basis; nothing when a defining hyperplane is
// outside the arrangement.
std::optional<std::vector<Integer>> polytope_to_vector(const Arrangement& a, const std::vector<std::size_t>& basis,
                                                       const std::vector<ConvexPolytope>& pieces);

// Closures of the full-dimensional pieces of p cut by the cutters.
std::vector<ConvexPolytope> subdivide(const ConvexPolytope& p, const std::vector<RatVec>& cutters);

struct SignedFace {
  int sign = 0;          // +1 when the polytope lies on the positive side of u
  std::size_t face = 0;  // index into the polytope's faces
};
std::optional<SignedFace> facet_map(const ConvexPolytope& q, const RatVec& u);

// The (n-1)-cell below `region` spanning the hyperplane with index h.
std::optional<std::size_t> region_facet(const Arrangement& a, std::size_t region, std::size_t h);
// The n-cells having `cell` in their closure.
std::vector<std::size_t> cofaces(const Arrangement& a, std::size_t cell);

// The closed convex polytope of a bounded region.
ConvexPolytope region_polytope(const Arrangement& a, std::size_t region);

}  // namespace tits

namespace tits {

struct Lift {
  int sign = 0;            // the facet map of sign * region is +cell
  std::size_t region = 0;  // index into the arrangement cells
};

// A basis region of `cup` having the (n-1)-cell `cell` (lying on hyperplane
// u) as a facet. The preferred side is used when both sides qualify.
std::optional<Lift> cofacet_lift(const Arrangement& cup, const std::vector<std::size_t>& basis, std::size_t cell,
                                 std::size_t u, int preferred_side);

}  // namespace tits
