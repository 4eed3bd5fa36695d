#include <random>

#include "doctest.h"
#include "support/scenes.hpp"
#include "tits/groups.hpp"

using namespace tits;
using testsupport::q;
using testsupport::qi;

namespace {

Collection from_points(const Geometry& g, const std::vector<RatVec>& coords) {
  return closure_by_points(g, point_flats(g, coords)).collection;
}

bool all_zero(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

Chain combine(const Chain& a, const Chain& b, int s) {
  Chain out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

// Square [0,1]^2 with both diagonals.
std::vector<RatVec> square_lines() {
  return {qi({0, 1, 0}), qi({1, -1, 0}), qi({0, 0, 1}), qi({1, 0, -1}), qi({0, 1, -1}), qi({1, -1, -1})};
}

ConvexPolytope polytope(const Geometry& g, const std::vector<RatVec>& hs) {
  auto b = polytope_from_halfspaces(g, hs);
  REQUIRE(b.polytope);
  return *b.polytope;
}

// Difference of two Ls elements lies in the relation lattice.
bool same_ls_class(const LsGroup& ls, const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> d = a;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  if (all_zero(d)) return true;
  return ls.group.relations.cols > 0 && lattice_contains(ls.group.relations, d);
}

}  // namespace

TEST_CASE("polytope groups are free on the region basis") {
  auto tri = testsupport::triangle_collection();
  auto a = build_arrangement(tri);
  CHECK(pt_group(a, region_basis(a)).free_rank == 1);

  auto concurrent = closure_by_functionals(Geometry::euclidean(2), {qi({0, 1, 0}), qi({0, 0, 1}), qi({0, 1, 1})});
  auto ac = build_arrangement(concurrent);
  CHECK(pt_group(ac, region_basis(ac)).free_rank == 0);

  auto s2 = build_arrangement(testsupport::coordinate_sphere(2));
  auto p = pt_group(s2, region_basis(s2));
  CHECK(p.free_rank == 8);
  CHECK(p.torsion.empty());
}

TEST_CASE("restricted Lee-Szczarba groups") {
  CHECK(ls_group(from_points(Geometry::euclidean(1), {qi({0}), qi({1}), qi({3})})).group.free_rank == 2);
  CHECK(ls_group(from_points(Geometry::euclidean(2), {qi({0, 0}), qi({1, 0}), qi({0, 1})})).group.free_rank == 1);
  auto four = from_points(Geometry::euclidean(2), {qi({0, 0}), qi({2, 0}), qi({0, 2}), qi({3, 3})});
  auto ls = ls_group(four);
  CHECK(ls.group.free_rank == 3);
  CHECK(ls.group.torsion.empty());
  CHECK(homology(relative_st_complex(four).complex).betti(2) == 3);

  CHECK_THROWS_WITH(ls_group(closure_by_functionals(Geometry::euclidean(2), {qi({0, 1, 0}), qi({0, 0, 1}),
                                                                             qi({0, 1, 1})})),
                    "NOT_GENERATED_BY_POINTS");
}

TEST_CASE("Lee-Szczarba elements of ordered tuples") {
  auto g = Geometry::euclidean(2);
  auto l = from_points(g, {qi({0, 0}), qi({1, 0}), qi({0, 1})});
  auto ls = ls_group(l);
  std::vector<RatVec> t{homogeneous(qi({0, 0})), homogeneous(qi({1, 0})), homogeneous(qi({0, 1}))};
  auto e = ls_element(ls, g, t);
  std::swap(t[0], t[1]);
  auto f = ls_element(ls, g, t);
  CHECK(e[0] == -f[0]);
  CHECK(abs(e[0]) == 1);
  t[0] = t[1];
  CHECK(all_zero(ls_element(ls, g, t)));
}

TEST_CASE("tuple apartments") {
  SUBCASE("an interval of E^1") {
    auto g = Geometry::euclidean(1);
    auto l = from_points(g, {qi({0}), qi({1})});
    auto st = relative_st_complex(l);
    auto p = LinearSubspace::span(2, {homogeneous(qi({0}))});
    auto pp = LinearSubspace::span(2, {homogeneous(qi({1}))});
    auto c = apartment_tuple(l, st, {homogeneous(qi({0})), homogeneous(qi({1}))});
    const std::size_t top = l.size() - 1;
    Integer at_p = c[st.coordinate({*l.index_of(p), top})];
    Integer at_pp = c[st.coordinate({*l.index_of(pp), top})];
    CHECK(abs(at_p) == 1);
    CHECK(at_pp == -at_p);
    CHECK(is_cycle(st.complex, 1, c));
  }
  SUBCASE("a triangle gives a six-term generator") {
    auto g = Geometry::euclidean(2);
    auto l = from_points(g, {qi({0, 0}), qi({1, 0}), qi({0, 1})});
    auto st = relative_st_complex(l);
    auto c = apartment_tuple(l, st, {homogeneous(qi({0, 0})), homogeneous(qi({1, 0})), homogeneous(qi({0, 1}))});
    std::size_t terms = 0;
    for (const auto& x : c) terms += x != 0;
    CHECK(terms == 6);
    auto h = top_homology(st.complex, 2);
    REQUIRE(h.rank() == 1);
    auto y = homology_coordinates(h, c);
    CHECK(abs(y[0]) == 1);
  }
  SUBCASE("the simplicial relation and degenerate tuples") {
    auto g = Geometry::euclidean(2);
    std::vector<RatVec> pts{qi({0, 0}), qi({2, 0}), qi({0, 2}), qi({3, 3}), qi({1, 0})};
    auto l = from_points(g, pts);
    auto st = relative_st_complex(l);
    Chain sum(st.complex.rank(2), 0);
    for (std::size_t drop = 0; drop < 4; ++drop) {
      std::vector<RatVec> t;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != drop) t.push_back(homogeneous(pts[i]));
      sum = combine(sum, apartment_tuple(l, st, t), drop % 2 ? -1 : 1);
    }
    CHECK(all_zero(sum));
    // (0,0), (1,0), (2,0) are collinear
    CHECK(all_zero(apartment_tuple(l, st, {homogeneous(pts[0]), homogeneous(pts[4]), homogeneous(pts[1])})));
  }
  SUBCASE("antipodal representatives give the same class") {
    auto g = Geometry::spherical(2);
    auto l = from_points(g, {qi({1, 0, 0}), qi({0, 1, 0}), qi({0, 0, 1})});
    auto ls = ls_group(l);
    auto st = relative_st_complex(l);
    std::vector<RatVec> t{qi({1, 0, 0}), qi({0, 1, 0}), qi({0, 0, 1})};
    auto flipped = t;
    flipped[1] = qi({0, -1, 0});
    CHECK(same_ls_class(ls, ls_element(ls, g, t), ls_element(ls, g, flipped)));
    CHECK(apartment_tuple(l, st, t) == apartment_tuple(l, st, flipped));
  }
}

TEST_CASE("polytope apartments") {
  SUBCASE("an interval matches its endpoint tuple") {
    auto g = Geometry::euclidean(1);
    auto l = from_points(g, {qi({0}), qi({1})});
    auto st = relative_st_complex(l);
    auto p = polytope(g, {qi({0, 1}), qi({1, -1})});
    CHECK(apartment_polytope(l, st, p) == apartment_tuple(l, st, {homogeneous(qi({0})), homogeneous(qi({1}))}));
  }
  SUBCASE("a triangle region matches its oriented vertex tuple") {
    auto g = Geometry::euclidean(2);
    auto l = testsupport::triangle_collection();
    auto st = relative_st_complex(l);
    auto a = build_arrangement(l);
    auto basis = region_basis(a);
    REQUIRE(basis.size() == 1);
    auto p = region_polytope(a, basis[0]);
    std::vector<RatVec> vs{homogeneous(qi({0, 0})), homogeneous(qi({1, 0})), homogeneous(qi({0, 1}))};
    int o = orientation_sign(g, vs);
    Chain tuple = apartment_tuple(l, st, vs);
    for (auto& x : tuple) x *= o;
    CHECK(apartment_polytope(l, st, p) == tuple);
    CHECK(is_cycle(st.complex, 2, tuple));
  }
  SUBCASE("cutting a triangle in two adds up") {
    auto g = Geometry::euclidean(2);
    auto lines = testsupport::triangle_lines();
    lines.push_back(qi({0, 1, -1}));
    auto l = closure_by_functionals(g, lines);
    auto st = relative_st_complex(l);
    auto a = build_arrangement(l);
    auto basis = region_basis(a);
    REQUIRE(basis.size() == 2);
    auto whole = polytope(g, testsupport::triangle_lines());
    Chain sum = combine(apartment_polytope(l, st, region_polytope(a, basis[0])),
                        apartment_polytope(l, st, region_polytope(a, basis[1])), 1);
    CHECK(apartment_polytope(l, st, whole) == sum);
  }
}

TEST_CASE("apartment matrices") {
  SUBCASE("triangle") {
    auto r = apartment_matrix(testsupport::triangle_collection(), ApartmentFlavor::StPolytopes);
    CHECK(r.hypotheses == "MET");
    CHECK(r.map.matrix.rows == 1);
    CHECK(abs(r.map.matrix(0, 0)) == 1);
    CHECK(r.pass());
  }
  SUBCASE("four generic lines") {
    auto lines = testsupport::triangle_lines();
    lines.push_back(testsupport::generic_fourth_line());
    auto r = apartment_matrix(closure_by_functionals(Geometry::euclidean(2), lines), ApartmentFlavor::StPolytopes);
    CHECK(r.map.matrix.rows == 3);
    CHECK(r.map.matrix.cols == 3);
    CHECK(r.pass());
  }
  SUBCASE("points") {
    auto l = from_points(Geometry::euclidean(2), {qi({0, 0}), qi({2, 0}), qi({0, 2}), qi({3, 3})});
    auto r = apartment_matrix(l, ApartmentFlavor::StPoints);
    CHECK(r.map.well_defined);
    CHECK(r.pass());
    CHECK(r.homology_rank == 3);
  }
  SUBCASE("degenerate configurations") {
    auto l = closure_by_functionals(Geometry::euclidean(2), {qi({1, 1, 0}), qi({1, 0, 1})});
    CHECK(apartment_matrix(l, ApartmentFlavor::StPolytopes).pass());
    auto pencil = closure_by_functionals(Geometry::euclidean(2), {qi({0, 1, 0}), qi({0, 0, 1})});
    CHECK(apartment_matrix(pencil, ApartmentFlavor::StPolytopes).pass());
    auto parallel = closure_by_functionals(Geometry::euclidean(2), {qi({0, 1, 0}), qi({1, 1, 0})});
    CHECK(apartment_matrix(parallel, ApartmentFlavor::StPolytopes).hypotheses == "NOT_ADMISSIBLE");
  }
  SUBCASE("coordinate spheres") {
    for (int n : {0, 1, 2}) {
      auto l = n == 0 ? closure_by_functionals(Geometry::spherical(0), {}) : testsupport::coordinate_sphere(n);
      auto r = apartment_matrix(l, ApartmentFlavor::PtSpherical);
      CHECK(r.generators == (std::size_t(1) << (n + 1)));
      CHECK(r.collapse_agrees);
      CHECK(r.pass());
    }
  }
  SUBCASE("an octant is one summand of the octahedral sphere") {
    auto l = testsupport::coordinate_sphere(2);
    auto b = pt_bicomplex(l);
    auto coll = pt_collapse_complex(b.tri);
    auto octant = b.tri.arrangement.locate(qi({1, 1, 1}));
    REQUIRE(octant);
    auto c = collapse_fundamental_chain(b.tri, coll, {*octant});
    CHECK(is_cycle(coll.complex, 2, c));
    auto h = top_homology(coll.complex, 2);
    auto y = homology_coordinates(h, c);
    ZMatrix col = columns_to_matrix({y}, h.rank());
    CHECK(is_saturated(col));
  }
  SUBCASE("cutting an octant keeps the class additive") {
    auto planes = testsupport::coordinate_planes(2);
    planes.push_back(qi({1, -1, 0}));
    auto l = closure_by_functionals(Geometry::spherical(2), planes);
    auto b = pt_bicomplex(l);
    auto coll = pt_collapse_complex(b.tri);
    auto& arr = b.tri.arrangement;
    auto left = arr.locate(qi({1, 2, 1})), right = arr.locate(qi({2, 1, 1}));
    REQUIRE(left);
    REQUIRE(right);
    auto both = collapse_fundamental_chain(b.tri, coll, {*left, *right});
    auto sum = combine(collapse_fundamental_chain(b.tri, coll, {*left}),
                       collapse_fundamental_chain(b.tri, coll, {*right}), 1);
    CHECK(both == sum);
    CHECK(apartment_matrix(l, ApartmentFlavor::PtSpherical).pass());
  }
}

TEST_CASE("local apartment matrices") {
  auto g = Geometry::hyperbolic(2);
  std::vector<RatVec> tri{qi({0, 1, 0}), qi({0, 0, 1}), q({"1/2", "-1", "-1"})};
  auto lines = tri;
  lines.push_back(qi({0, 1, -1}));
  lines.push_back(q({"-3/4", "1", "0"}));
  auto l = closure_by_functionals(g, lines);
  auto a = polytope(g, tri);
  auto r = apartment_matrix(l, ApartmentFlavor::Local, a);
  CHECK(r.hypotheses == "MET");
  CHECK(r.generators == 2);
  CHECK(r.pass());
  CHECK(apartment_matrix(l, ApartmentFlavor::Local).hypotheses == "POLYTOPE_A_REQUIRED");
  CHECK(apartment_matrix(l, ApartmentFlavor::StPolytopes).hypotheses == "NOT_DECIDABLE_FINITE");

  auto e = Geometry::euclidean(2);
  auto sq = closure_by_functionals(e, square_lines());
  auto box = polytope(e, {qi({0, 1, 0}), qi({1, -1, 0}), qi({0, 0, 1}), qi({1, 0, -1})});
  auto rs = apartment_matrix(sq, ApartmentFlavor::Local, box);
  CHECK(rs.generators == 4);
  CHECK(rs.pass());
}

TEST_CASE("from polytopes to tuples") {
  auto g = Geometry::euclidean(2);
  auto l = closure_by_functionals(g, square_lines());
  REQUIRE(generated_by_both(l));
  auto ls = ls_group(l);
  auto square = polytope(g, {qi({0, 1, 0}), qi({1, -1, 0}), qi({0, 0, 1}), qi({1, 0, -1})});
  auto e = pt_to_ls(l, ls, square);
  Integer mass = 0;
  for (const auto& x : e) mass += abs(x);
  CHECK(mass == 2);
  // the same square cut along either diagonal
  for (const auto& diag : {qi({0, 1, -1}), qi({1, -1, -1})}) {
    RatVec neg = diag;
    for (auto& x : neg) x = -x;
    auto hs1 = square.halfspaces, hs2 = square.halfspaces;
    hs1.push_back(diag);
    hs2.push_back(neg);
    auto e1 = pt_to_ls(l, ls, polytope(g, hs1));
    auto e2 = pt_to_ls(l, ls, polytope(g, hs2));
    for (std::size_t i = 0; i < e1.size(); ++i) e1[i] += e2[i];
    CHECK(same_ls_class(ls, e, e1));
  }
  auto t = testsupport::triangle_collection();
  auto tl = ls_group(t);
  auto te = pt_to_ls(t, tl, polytope(g, testsupport::triangle_lines()));
  REQUIRE(te.size() == 1);
  std::vector<RatVec> vs{homogeneous(qi({0, 0})), homogeneous(qi({1, 0})), homogeneous(qi({0, 1}))};
  CHECK(te[0] == orientation_sign(g, vs) * ls_element(tl, g, vs)[0]);
}

TEST_CASE("the canonical map from polytopes to tuples") {
  SUBCASE("triangle") {
    auto r = verify_pt_ls(testsupport::triangle_collection());
    CHECK(r.pt_rank == 1);
    CHECK(r.ls_rank == 1);
    CHECK(r.pass());
  }
  SUBCASE("square with diagonals") {
    auto r = verify_pt_ls(closure_by_functionals(Geometry::euclidean(2), square_lines()));
    CHECK(r.pt_rank == 4);
    CHECK(r.pass());
  }
  SUBCASE("hyperbolic triangle") {
    auto l = closure_by_functionals(Geometry::hyperbolic(2), {qi({0, 1, 0}), qi({0, 0, 1}), q({"1/2", "-1", "-1"})});
    auto r = verify_pt_ls(l);
    CHECK(r.hypotheses == "MET");
    CHECK(r.pass());
  }
  SUBCASE("coordinate spheres") {
    auto r = verify_pt_ls(testsupport::coordinate_sphere(2));
    CHECK(r.pt_rank == 8);
    CHECK(r.ls_rank == 1);
    CHECK(r.map.surjective);
    CHECK(r.kernel_rank == 7);
    CHECK(r.kernel_matches_joins);
    CHECK(r.pass());
    auto r1 = verify_pt_ls(testsupport::coordinate_sphere(1));
    CHECK(r1.kernel_rank == 3);
    CHECK(r1.pass());
  }
  SUBCASE("hypothesis") {
    auto l = closure_by_functionals(Geometry::euclidean(2), {qi({0, 1, 0}), qi({0, 0, 1}), qi({0, 1, 1})});
    CHECK(verify_pt_ls(l).hypotheses == "NOT_GENERATED_BY_BOTH");
  }
}

TEST_CASE("facet exact sequences") {
  auto e = Geometry::euclidean(2);
  auto tri = testsupport::triangle_collection();
  SUBCASE("transversal line") {
    auto r = exact_sequence_check(tri, testsupport::generic_fourth_line());
    CHECK(r.rank_l == 1);
    CHECK(r.rank_cap == 2);
    CHECK(r.rank_cup == 3);
    CHECK(r.lifts_ok);
    CHECK(r.dashed_map_agrees);
    CHECK(r.pass());
  }
  SUBCASE("line missing the triangle") {
    auto r = exact_sequence_check(tri, qi({-3, 1, 0}));
    CHECK(r.rank_l == 1);
    CHECK(r.rank_cup == 1 + r.rank_cap);
    CHECK(r.pass());
  }
  SUBCASE("line already present") {
    CHECK(exact_sequence_check(tri, qi({0, 2, 0})).hypotheses == "U_IN_L");
  }
  SUBCASE("sphere with a generic fourth plane") {
    auto r = exact_sequence_check(testsupport::coordinate_sphere(2), qi({1, 2, 3}));
    CHECK(r.rank_l == 8);
    CHECK(r.rank_cap == 6);
    CHECK(r.rank_cup == 14);
    CHECK(r.pass());
  }
  SUBCASE("circle, where the local geometry is the zero sphere") {
    auto r = exact_sequence_check(testsupport::coordinate_sphere(1), qi({1, 1}));
    CHECK(r.rank_l == 4);
    CHECK(r.rank_cap == 2);
    CHECK(r.rank_cup == 6);
    CHECK(r.dashed_map_agrees);
    CHECK(r.pass());
  }
  SUBCASE("hyperbolic plane with a supplied polytope") {
    auto h = Geometry::hyperbolic(2);
    std::vector<RatVec> t{qi({0, 1, 0}), qi({0, 0, 1}), q({"1/2", "-1", "-1"})};
    auto l = closure_by_functionals(h, t);
    CHECK(exact_sequence_check(l, qi({0, 1, -1})).hypotheses == "POLYTOPE_A_REQUIRED");
    auto r = exact_sequence_check(l, qi({0, 1, -1}), polytope(h, t));
    CHECK(r.local);
    CHECK(r.rank_l == 1);
    CHECK(r.rank_cup == 2);
    CHECK(r.rank_cap == 1);
    CHECK(r.pass());
  }
}

TEST_CASE("duality") {
  SUBCASE("coordinate spheres are self-dual") {
    for (int n : {1, 2}) {
      auto l = testsupport::coordinate_sphere(n);
      CHECK(dualize(l) == l);
      auto r = duality_check(l);
      CHECK(r.bijection_ok);
      CHECK(r.st_rank == 1);
      CHECK(r.ls_dual_rank == 1);
      CHECK(r.pass());
    }
  }
  SUBCASE("a skew triple of planes") {
    auto l = closure_by_functionals(Geometry::spherical(2), {qi({1, 0, 0}), qi({1, 1, 0}), qi({1, 1, 1})});
    CHECK(!(dualize(l) == l));
    CHECK(duality_check(l).pass());
  }
  SUBCASE("four planes") {
    auto planes = testsupport::coordinate_planes(2);
    planes.push_back(qi({1, 1, 1}));
    auto r = duality_check(closure_by_functionals(Geometry::spherical(2), planes));
    CHECK(r.st_rank == r.ls_dual_rank);
    CHECK(r.pass());
  }
  SUBCASE("not admissible") {
    auto l = closure_by_functionals(Geometry::spherical(2), {qi({1, 0, 0})});
    CHECK(duality_check(l).hypotheses == "NOT_ADMISSIBLE");
  }
}

TEST_CASE("suspension reduction") {
  auto g = Geometry::spherical(2);
  SUBCASE("one plane") {
    auto r = suspension_check(closure_by_functionals(g, {qi({0, 0, 1})}));
    CHECK(r.u_dim == 2);
    CHECK(r.pt_rank == 2);
    CHECK(r.predicted_rank == 2);
    CHECK(r.pass());
  }
  SUBCASE("two planes through an axis") {
    auto r = suspension_check(closure_by_functionals(g, {qi({1, 0, 0}), qi({0, 1, 0})}));
    CHECK(r.u_dim == 1);
    CHECK(r.pt_rank == 4);
    CHECK(r.predicted_rank == 4);
    CHECK(r.pass());
  }
  SUBCASE("three planes through an axis") {
    auto r = suspension_check(closure_by_functionals(g, {qi({1, 0, 0}), qi({0, 1, 0}), qi({1, 1, 0})}));
    CHECK(r.pt_rank == 6);
    CHECK(r.pass());
  }
  SUBCASE("admissible input") {
    CHECK(suspension_check(testsupport::coordinate_sphere(2)).hypotheses == "NOT_APPLICABLE");
  }
}

TEST_CASE("property: apartments of random point tuples") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long> coord(-4, 4);
  auto g = Geometry::euclidean(2);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    std::vector<RatVec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(qi({coord(rng), coord(rng)}));
    bool general = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (orientation_sign(g, {homogeneous(pts[i]), homogeneous(pts[j]), homogeneous(pts[k])}) == 0) general = false;
    if (!general) continue;
    ++checked;
    // a fifth point on the line through the first two
    RatVec mid{(pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2};
    auto all = pts;
    all.push_back(mid);
    auto l = from_points(g, all);
    auto st = relative_st_complex(l);
    Chain sum(st.complex.rank(2), 0);
    for (std::size_t drop = 0; drop < 4; ++drop) {
      std::vector<RatVec> t;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != drop) t.push_back(homogeneous(pts[i]));
      auto c = apartment_tuple(l, st, t);
      CHECK(is_cycle(st.complex, 2, c));
      sum = combine(sum, c, drop % 2 ? -1 : 1);
    }
    CHECK(all_zero(sum));
    CHECK(all_zero(apartment_tuple(l, st, {homogeneous(pts[0]), homogeneous(mid), homogeneous(pts[1])})));
    CHECK(apartment_matrix(l, ApartmentFlavor::StPoints).pass());
  }
  CHECK(checked >= 8);
}

TEST_CASE("property: random Euclidean arrangements") {
  std::mt19937 rng(27182);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto g = Geometry::euclidean(2);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 10; ++trial) {
    std::vector<RatVec> lines;
    std::uniform_int_distribution<int> count(3, 5);
    int k = count(rng);
    while (static_cast<int>(lines.size()) < k) {
      RatVec f = qi({coef(rng), coef(rng), coef(rng)});
      if (f[1] == 0 && f[2] == 0) continue;
      lines.push_back(f);
    }
    Collection l;
    try {
      l = closure_by_functionals(g, lines);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (admissible(l) != Admissibility::Admissible) continue;
    RatVec u = qi({coef(rng), coef(rng), coef(rng)});
    if (u[1] == 0 && u[2] == 0) continue;
    if (l.contains(LinearSubspace::kernel(3, {u}))) continue;
    ++checked;
    auto r = apartment_matrix(l, ApartmentFlavor::StPolytopes);
    CHECK(r.pass());
    CHECK(r.generators == region_basis(build_arrangement(l)).size());
    auto x = exact_sequence_check(l, u);
    CHECK(x.pass());
  }
  CHECK(checked >= 6);
}
