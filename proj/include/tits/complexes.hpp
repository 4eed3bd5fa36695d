#pragma once

#include <map>
#include <string>
#include <vector>

#include "tits/arrangement.hpp"
#include "tits/collections.hpp"
#include "tits/integer.hpp"

namespace tits {

// Graded free chain complex. boundary[k] maps degree min_degree+k to the
// degree below it (boundary[0] is the zero map out of the lowest degree).
struct ChainComplex {
  int min_degree = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMatrix> boundary;

  int max_degree() const { return min_degree + static_cast<int>(labels.size()) - 1; }
  std::size_t rank(int degree) const;
  const IntMatrix& d(int degree) const { return boundary[static_cast<std::size_t>(degree - min_degree)]; }
  // Throws std::logic_error unless every composite of two boundaries vanishes.
  void check() const;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologySummary {
  std::vector<HomologyGroup> groups;  // every degree of the complex
  std::size_t betti(int degree) const;
  bool operator==(const HomologySummary& o) const;  // compares nonzero groups
  std::string describe() const;
};

HomologySummary homology(const ChainComplex& c);
// Free, no torsion, and concentrated in degree n.
bool wedge_verdict(const HomologySummary& h, int n);

// Simplices are strictly increasing vertex lists. Every listed simplex is a
// basis element of degree size-1; faces that are not listed map to zero, so the
// list must be the difference of two subcomplexes. With `augmented` the empty
// simplex is added in degree -1 (reduced homology).
struct SimplicialModel {
  ChainComplex complex;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;  // per degree from min_degree
  std::size_t coordinate(const std::vector<std::size_t>& simplex) const;
  bool has(const std::vector<std::size_t>& simplex) const;
};
SimplicialModel simplicial_chains(const std::vector<std::vector<std::size_t>>& simplices, bool augmented,
                                  const std::vector<std::string>& vertex_names = {});

// All strictly increasing chains in a finite poset given by its order
// relation on 0..n-1 (less(i,j) must imply i < j).
std::vector<std::vector<std::size_t>> all_chains(std::size_t n, const std::vector<std::vector<bool>>& less);

// Containment order of collection members (indices are compatible with dimension).
std::vector<std::vector<bool>> member_order(const Collection& l);

// Order complex T (proper members) or CT (all members), augmented.
SimplicialModel order_complex(const Collection& l, bool include_top);
// Flags anchored at the top; H_p equals reduced H_p of ST.
SimplicialModel relative_st_complex(const Collection& l);
// The same on the sub-poset of members meeting a bounded convex L-polytope A.
SimplicialModel local_complex(const Collection& l, const ConvexPolytope& a);

// Increasing tuples of point indices spanning X^n; H_n is the Lee-Szczarba group.
SimplicialModel tpl_complex(const Collection& l, const std::vector<LinearSubspace>& points);

// Barycentric subdivision of the cell structure of an admissible spherical arrangement.
struct SphereTriangulation {
  Arrangement arrangement;
  std::vector<std::size_t> cells;                  // vertices of the triangulation, arrangement cell ids
  std::vector<std::vector<std::size_t>> simplices;  // chains of positions in `cells`
  // Simplices lying in the flat v (their top cell's flat is inside v).
  bool inside(const std::vector<std::size_t>& simplex, const LinearSubspace& v) const;
  SimplicialModel model() const;
};
SphereTriangulation sphere_triangulation(const Collection& l);

// Relative total complex of the diagram V -> S(V) over flags ending at the top.
struct PtBicomplex {
  SphereTriangulation tri;
  std::vector<std::vector<std::size_t>> flags;  // member indices ending at the top
  struct Generator {
    std::size_t flag;
    std::vector<std::size_t> simplex;
  };
  std::vector<std::vector<Generator>> basis;  // per degree
  std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t>> index;
  ChainComplex complex;
  std::size_t top_flag = 0;  // the flag (X)
};
PtBicomplex pt_bicomplex(const Collection& l);

// Relative homology of the triangulated sphere modulo all proper-flat subcomplexes.
SimplicialModel pt_collapse_complex(const SphereTriangulation& tri);
HomologySummary pt_collapse_crosscheck(const Collection& l);

}  // namespace tits
