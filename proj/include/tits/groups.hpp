#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tits/arrangement.hpp"
#include "tits/complexes.hpp"
#include "tits/integer.hpp"

namespace tits {

using Chain = std::vector<Integer>;

// Finitely presented abelian group: free on the generators modulo the columns
// of `relations`.
struct GroupPresentation {
  std::vector<std::string> generators;
  ZMatrix relations;  // generators x relations
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};
GroupPresentation make_presentation(std::vector<std::string> generators, ZMatrix relations);

// A matrix between groups together with what was certified about it.
struct GroupHom {
  ZMatrix matrix;
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool iso() const { return well_defined && injective && surjective; }
};

// Map from a presented group (relations r) to a free group Z^rows.
GroupHom certify_into_free(const ZMatrix& m, const ZMatrix& r);
// Map from a free group Z^cols to the presented group Z^rows / r.
GroupHom certify_into_presented(const ZMatrix& m, const ZMatrix& r);
// Kernel of a map from a free group into Z^rows / r, as lattice generators.
ZMatrix kernel_into_presented(const ZMatrix& m, const ZMatrix& r);

// Top-degree homology of a complex with nothing above degree n: ker d_n.
struct TopHomology {
  int degree = 0;
  ZMatrix basis;  // columns span ker d_n
  std::size_t rank() const { return basis.cols; }
};
TopHomology top_homology(const ChainComplex& c, int n);
bool is_cycle(const ChainComplex& c, int degree, const Chain& z);
// Coordinates of a cycle in the basis; throws if z is not in the lattice.
std::vector<Integer> homology_coordinates(const TopHomology& h, const Chain& z);

ZMatrix columns_to_matrix(const std::vector<std::vector<Integer>>& columns, std::size_t rows);

// ---------------------------------------------------------------- groups

GroupPresentation pt_group(const Arrangement& a, const std::vector<std::size_t>& basis);

struct LsGroup {
  std::vector<LinearSubspace> points;  // L^0 in canonical order
  SimplicialModel tpl;
  std::vector<std::vector<std::size_t>> tuples;  // generator tuples
  GroupPresentation group;
};
// Throws std::invalid_argument("NOT_GENERATED_BY_POINTS") when the hypothesis fails.
LsGroup ls_group(const Collection& l);
// Element of Ls for an ordered tuple of point representatives: +-1 times a
// generator, or zero for a degenerate tuple.
std::vector<Integer> ls_element(const LsGroup& ls, const Geometry& g, const std::vector<RatVec>& reps);

// ---------------------------------------------------------------- apartments

// Sum over orderings of the tuple of sign(ordering) times its flag of spans,
// as a chain in degree n of the relative complex built on l.
Chain apartment_tuple(const Collection& l, const SimplicialModel& st, const std::vector<RatVec>& reps);
// Sum over complete face flags of P of the barycentric orientation times the flag of spans.
Chain apartment_polytope(const Collection& l, const SimplicialModel& st, const ConvexPolytope& p);

// Fundamental chain of a union of regions in the collapse model.
Chain collapse_fundamental_chain(const SphereTriangulation& tri, const SimplicialModel& collapse,
                                 const std::vector<std::size_t>& regions);
// The collapse map in top degree, bicomplex -> collapse model.
ZMatrix collapse_projection(const PtBicomplex& b, const SimplicialModel& collapse);

// ---------------------------------------------------------------- verification

enum class ApartmentFlavor { StPoints, StPolytopes, Local, PtSpherical };
std::string flavor_name(ApartmentFlavor f);

struct ApartmentReport {
  ApartmentFlavor flavor{};
  int degree = 0;
  std::string hypotheses;  // "MET" or the violated hypothesis
  HomologySummary homology;
  std::size_t generators = 0;
  std::size_t homology_rank = 0;
  GroupHom map;
  bool all_cycles = false;
  bool collapse_agrees = true;  // PT only: the collapse map is an isomorphism in top degree
  bool pass() const;
};
ApartmentReport apartment_matrix(const Collection& l, ApartmentFlavor flavor,
                                 const std::optional<ConvexPolytope>& a = std::nullopt);

struct PtLsReport {
  std::string hypotheses;
  std::size_t pt_rank = 0;
  std::size_t ls_rank = 0;
  GroupHom map;
  std::size_t kernel_rank = 0;
  bool kernel_matches_joins = true;  // spherical only
  bool spherical = false;
  bool pass() const;
};
// Element of the Ls presentation for a convex polytope, via the placing triangulation.
std::vector<Integer> pt_to_ls(const Collection& l, const LsGroup& ls, const ConvexPolytope& p);
PtLsReport verify_pt_ls(const Collection& l);

struct ExactSequenceReport {
  std::string hypotheses;
  bool local = false;
  std::size_t rank_l = 0, rank_cup = 0, rank_cap = 0;
  bool composite_zero = false;
  bool inclusion_injective = false;
  bool facet_surjective = false;
  bool kernel_is_image = false;
  bool rank_additive = false;
  bool lifts_ok = false;        // facet map of every cofacet lift is +1 times the facet
  bool dashed_map_agrees = false;
  bool pass() const;
};
ExactSequenceReport exact_sequence_check(const Collection& l, const RatVec& u,
                                         const std::optional<ConvexPolytope>& a = std::nullopt);

struct DualityReport {
  std::string hypotheses;
  bool bijection_ok = false;
  std::size_t ls_dual_rank = 0;
  std::size_t st_rank = 0;
  bool apartment_iso = false;
  bool pass() const;
};
DualityReport duality_check(const Collection& l);

struct SuspensionReport {
  std::string hypotheses;
  std::size_t u_dim = 0;  // linear dimension of the common intersection
  std::size_t pt_rank = 0;
  std::size_t reduced_pt_rank = 0;
  bool region_bijection = false;
  std::size_t predicted_rank = 0;  // rank of H_{n - dim U} of the reduced PT complex
  bool reduced_wedge = false;
  bool pass() const;
};
SuspensionReport suspension_check(const Collection& l);

}  // namespace tits
