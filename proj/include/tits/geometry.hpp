#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tits/exact.hpp"

namespace tits {

enum class GeometryKind { Euclidean, Hyperbolic, Spherical };

char kind_letter(GeometryKind k);

// X^n inside Q^(n+1). Euclidean and hyperbolic points live in the chart
// x0 = 1 (Klein chart for H); spherical points are nonzero vectors up to
// positive scaling. For hyperbolic geometry `form` is the Lorentzian form whose
// negative cone is the model; the default is -x0^2 + sum xi^2.
struct Geometry {
  GeometryKind kind = GeometryKind::Euclidean;
  int n = 0;
  RatMatrix form;

  static Geometry euclidean(int n);
  static Geometry hyperbolic(int n);
  static Geometry spherical(int n);

  std::size_t ambient() const { return static_cast<std::size_t>(n) + 1; }
  bool is_chart() const { return kind != GeometryKind::Spherical; }
  bool operator==(const Geometry& o) const { return kind == o.kind && n == o.n && form == o.form; }
};

// Linear subspace of Q^(n+1) with its canonical RREF basis.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  static LinearSubspace span(std::size_t ambient, const std::vector<RatVec>& vectors);
  static LinearSubspace kernel(std::size_t ambient, const std::vector<RatVec>& functionals);
  static LinearSubspace whole(std::size_t ambient);
  static LinearSubspace zero(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  // Rows: canonical basis of the functionals vanishing on this subspace.
  RatMatrix annihilator() const;
  LinearSubspace orthogonal_complement() const;

  bool contains(const RatVec& v) const;
  bool contains(const LinearSubspace& other) const;  // other is a subset of this
  LinearSubspace intersect(const LinearSubspace& o) const;
  LinearSubspace sum(const LinearSubspace& o) const;

  std::string key() const;
  bool operator==(const LinearSubspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const LinearSubspace& o) const { return !(*this == o); }
  // Orders by dimension, then by basis entries.
  bool operator<(const LinearSubspace& o) const;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Whether the flat X^n cut by v is nonempty.
bool geo_nonempty(const LinearSubspace& v, const Geometry& g);
inline int geo_dim(const LinearSubspace& v) { return static_cast<int>(v.dim()) - 1; }

// Homogeneous coordinates of a chart point (prepends x0 = 1).
RatVec homogeneous(const RatVec& chart_point);
// Chart coordinates of a homogeneous vector with x0 != 0.
RatVec dehomogenize(const RatVec& x);

// Hyperbolic model test: q(x) < 0 for the geometry's form.
Rational quadratic_value(const Geometry& g, const RatVec& x);
bool inside_model(const Geometry& g, const RatVec& x);

LinearSubspace span_points(const Geometry& g, const std::vector<LinearSubspace>& points);
std::optional<LinearSubspace> intersect_subspaces(const Geometry& g, const LinearSubspace& a,
                                                  const LinearSubspace& b);

// Canonical functional of a hyperplane carrier (RREF row of its annihilator).
RatVec hyperplane_functional(const LinearSubspace& hyperplane);

// Orientation of a simplex given by homogeneous vertices: affine chart
// orientation for E/H, determinant of representatives for S.
int orientation_sign(const Geometry& g, const std::vector<RatVec>& vertices);

struct HalfSpace {
  RatVec functional;  // the half-space is functional . x >= 0
};

// The feasibility system for {relations on x} in the working chart: chart
// geometries use the affine variables x1..xn, spherical ones x0..xn.
LinearSystem chart_system(const Geometry& g);
void add_constraint(LinearSystem& sys, const Geometry& g, const RatVec& functional, int sense);
// sense: +1 strict positive, 0 equality, 2 nonstrict
RatVec chart_witness_to_homogeneous(const Geometry& g, const RatVec& w);

struct Face {
  std::vector<std::size_t> active;  // indices of tight half-spaces
  LinearSubspace span;
  int dim = 0;
  RatVec witness;  // homogeneous point in the relative interior
};

enum class PolytopeDefect { None, Empty, LowerDimensional, Unbounded, TooLarge };
std::string defect_name(PolytopeDefect d);

struct ConvexPolytope {
  Geometry geometry;
  std::vector<RatVec> halfspaces;  // each functional >= 0
  std::vector<Face> faces;         // sorted by dim; the last one is the polytope itself
  std::vector<RatVec> vertices;    // homogeneous witnesses of the 0-dimensional faces

  bool face_leq(std::size_t i, std::size_t j) const;  // face i inside closure of face j
  const Face& top() const { return faces.back(); }
  bool contains_point(const RatVec& x) const;          // closed polytope
  bool contains_interior_point(const RatVec& x) const;  // strictly inside
  std::vector<std::size_t> facets() const;
};

struct PolytopeBuild {
  std::optional<ConvexPolytope> polytope;
  PolytopeDefect defect = PolytopeDefect::None;
};

PolytopeBuild polytope_from_halfspaces(const Geometry& g, const std::vector<RatVec>& halfspaces);

// Chart-geometry boundedness (E: recession cone is zero; H: additionally all
// vertices strictly inside the model). Spherical polytopes are always bounded.
bool is_bounded(const Geometry& g, const std::vector<RatVec>& halfspaces);
bool euclid_bounded(const Geometry& g, const std::vector<RatVec>& halfspaces);
std::vector<RatVec> enumerate_vertices(const Geometry& g, const std::vector<RatVec>& halfspaces);
bool is_strongly_convex(const ConvexPolytope& p);

// Orthogonal projection onto the complement of u, as a matrix acting on column vectors.
RatMatrix projection_onto_complement(const LinearSubspace& u);

// S(U) * p, where p is described by functionals read on U^perp.
PolytopeBuild join(const Geometry& g, const LinearSubspace& u, const std::vector<RatVec>& p_halfspaces);

// A flat viewed as a geometry of its own. Local coordinates y map to ambient
// y * basis. For chart geometries the first basis row has x0 = 1 and the others
// x0 = 0, so the local chart is again y0 = 1.
struct Frame {
  Geometry ambient;
  Geometry local;
  LinearSubspace carrier;
  RatMatrix basis;

  RatVec to_ambient(const RatVec& y) const;
  std::optional<RatVec> to_local(const RatVec& x) const;
  RatVec pull_functional(const RatVec& a) const;
  LinearSubspace push(const LinearSubspace& local_subspace) const;
  std::optional<LinearSubspace> pull(const LinearSubspace& ambient_subspace) const;
};

Frame make_frame(const Geometry& g, const LinearSubspace& carrier);

}  // namespace tits
