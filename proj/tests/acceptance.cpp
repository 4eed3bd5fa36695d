// One PASS/FAIL line per acceptance criterion. Each criterion runs the bundled
// scenes (or a seeded sweep) through the same entry points as the CLI and
// compares against an oracle computed here, independently of the library
// where that is practical.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "checks.hpp"
#include "scene.hpp"
#include "tits/groups.hpp"
#include "tits/resolution.hpp"

#ifndef TITS_CORPUS_DIR
#define TITS_CORPUS_DIR "corpus"
#endif

using nlohmann::json;
using namespace tits;
using namespace tits::cli;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Scene corpus_scene(const std::string& file) { return load_scene(std::string(TITS_CORPUS_DIR) + "/" + file); }

std::vector<std::pair<std::string, Scene>> corpus() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(TITS_CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path().filename().string());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, Scene>> out;
  for (const auto& f : files) out.emplace_back(f, corpus_scene(f));
  return out;
}

bool lists(const Scene& s, const std::string& check) {
  return std::find(s.checks.begin(), s.checks.end(), check) != s.checks.end();
}

// Runs a check and enforces the per-item time budget.
CheckResult run(const std::string& file, const Scene& s, const std::string& check, double budget) {
  CheckResult r = run_check(s, check);
  require(r.seconds <= budget, file + ": " + check + " took " + std::to_string(r.seconds) + " s");
  return r;
}

void require_pass(const std::string& file, const CheckResult& r) {
  require(r.verdict == Verdict::Pass,
          file + ": " + r.name + " is " + verdict_name(r.verdict) + " (" + r.hypotheses + ")");
}

// Nonzero Betti numbers keyed by degree, and no torsion anywhere.
std::map<int, std::size_t> free_betti(const std::string& file, const json& h) {
  require(h.at("torsion").empty(), file + ": unexpected torsion " + h.at("torsion").dump());
  std::map<int, std::size_t> out;
  for (const auto& [k, v] : h.at("betti").items()) out[std::stoi(k)] = v.get<std::size_t>();
  return out;
}

// Bounded regions of an affine line arrangement: 1 - n + sum over
// intersection points of (lines through it - 1), or 0 if all lines are parallel.
std::size_t bounded_regions_oracle(const std::vector<RatVec>& lines) {
  std::map<std::pair<Rational, Rational>, std::set<std::size_t>> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto &a = lines[i], &b = lines[j];
      Rational det = a[1] * b[2] - a[2] * b[1];
      if (det == 0) continue;
      Rational x = (a[2] * b[0] - a[0] * b[2]) / det, y = (a[0] * b[1] - a[1] * b[0]) / det;
      points[{x, y}].insert(i);
      points[{x, y}].insert(j);
    }
  if (points.empty()) return 0;
  long chi = 1 - static_cast<long>(lines.size());
  for (const auto& [p, through] : points) chi += static_cast<long>(through.size()) - 1;
  return static_cast<std::size_t>(chi);
}

std::size_t pow2(int k) { return std::size_t{1} << k; }

std::vector<RatVec> coordinate_planes(int n) {
  std::vector<RatVec> out;
  for (int i = 0; i <= n; ++i) {
    RatVec e(n + 1, Rational(0));
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

void euclidean_solomon_tits() {
  int scenes = 0, concurrent = 0;
  for (const auto& [file, s] : corpus()) {
    if (s.geometry.kind != GeometryKind::Euclidean || s.geometry.n != 2 || s.mode != "hyperplanes") continue;
    if (s.hyperplanes.size() < 3 || s.hyperplanes.size() > 6) continue;
    if (admissible(scene_collection(s)) != Admissibility::Admissible) continue;
    auto r = run(file, s, "verify solomon-tits", 10);
    require_pass(file, r);
    auto betti = free_betti(file, r.result["homology"]);
    const std::size_t oracle = bounded_regions_oracle(s.hyperplanes);
    require(betti == std::map<int, std::size_t>{{2, oracle}},
            file + ": homology " + r.result["homology"]["summary"].get<std::string>() + ", bounded regions " +
                std::to_string(oracle));
    require(r.result["apartment_map"]["iso"].get<bool>(), file + ": apartment matrix is not unimodular");
    ++scenes;
    // a point where three or more lines meet
    for (std::size_t i = 0; i < s.hyperplanes.size(); ++i)
      for (std::size_t j = i + 1; j < s.hyperplanes.size(); ++j)
        for (std::size_t k = j + 1; k < s.hyperplanes.size(); ++k) {
          auto p = LinearSubspace::kernel(3, {s.hyperplanes[i], s.hyperplanes[j], s.hyperplanes[k]});
          if (p.dim() == 1 && p.basis().row_data()[0][0] != 0) ++concurrent;
        }
  }
  require(scenes >= 4, "only " + std::to_string(scenes) + " admissible plane scenes");
  require(concurrent > 0, "no scene with a concurrence");
}

void concurrent_vanishing() {
  for (const char* file : {"e2_lcirc.json", "e3_lcirc.json"}) {
    Scene s = corpus_scene(file);
    const int n = s.geometry.n;
    require(static_cast<int>(s.hyperplanes.size()) == n, std::string(file) + ": expected n hyperplanes");
    auto common = LinearSubspace::kernel(s.geometry.ambient(), s.hyperplanes);
    require(common.dim() == 1 && common.basis().row_data()[0][0] != 0, std::string(file) + ": not concurrent");
    auto t = run(file, s, "homology t", 5);
    require_pass(file, t);
    require(free_betti(file, t.result["homology"]).empty(), std::string(file) + ": T is not acyclic");
    auto pt = run(file, s, "groups pt", 5);
    require(pt.result["free_rank"] == 0 && pt.result["torsion"].empty(), std::string(file) + ": Pt is not zero");
  }
}

void spherical_coordinate() {
  for (int n : {1, 2}) {
    const std::string file = "s" + std::to_string(n) + "_coordinate.json";
    Scene s = corpus_scene(file);
    require(s.hyperplanes == coordinate_planes(n), file + ": not the coordinate arrangement");
    auto h = run(file, s, "homology pt", 60);
    require_pass(file, h);
    require(free_betti(file, h.result["homology"]) == std::map<int, std::size_t>{{n, pow2(n + 1)}},
            file + ": " + h.result["homology"]["summary"].get<std::string>());
    require(h.result["collapse_agrees"].get<bool>(), file + ": bicomplex and collapse disagree");
    auto a = run(file, s, "verify solomon-tits", 60);
    require_pass(file, a);
    require(a.result["generators"] == pow2(n + 1) && a.result["apartment_map"]["iso"].get<bool>(),
            file + ": apartment map is not an isomorphism on 2^(n+1) generators");
    require(a.result["collapse_agrees"].get<bool>(), file + ": collapse map is not unimodular");
  }
}

void zero_sphere() {
  const std::string file = "s0_base.json";
  Scene s = corpus_scene(file);
  auto l = scene_collection(s);
  // the zero subspace is the empty flat, so only the whole S^0 is stored
  require(s.geometry.n == 0 && l.size() == 1 && l.contains_top(), file + ": expected the collection {0, R^1}");
  auto pt = run(file, s, "groups pt", 1);
  require(pt.result["free_rank"] == 2 && pt.result["torsion"].empty(), file + ": Pt is not Z^2");
  auto h = run(file, s, "homology pt", 1);
  require_pass(file, h);
  require(free_betti(file, h.result["homology"]) == std::map<int, std::size_t>{{0, 2}},
          file + ": " + h.result["homology"]["summary"].get<std::string>());
}

void hyperbolic_two_cubes() {
  const std::string file = "h3_two_cubes.json";
  Scene s = corpus_scene(file);
  require(s.geometry.kind == GeometryKind::Hyperbolic && s.geometry.n == 3 && s.hyperplanes.size() == 7,
          file + ": expected seven planes in H^3");
  // Axis-parallel planes: two boxes stacked along z sharing a face.
  std::vector<std::set<Rational>> levels(3);
  for (const auto& f : s.hyperplanes) {
    int axis = -1;
    for (int i = 1; i <= 3; ++i)
      if (f[i] != 0) {
        require(axis < 0, file + ": plane is not axis-parallel");
        axis = i - 1;
      }
    levels[axis].insert(-f[0] / f[axis + 1]);
  }
  require(levels[0].size() == 2 && levels[1].size() == 2 && levels[2].size() == 3, file + ": not two boxes");
  std::vector<RatVec> outside;
  for (const auto& x : levels[0])
    for (const auto& y : levels[1])
      for (const auto& z : levels[2])
        if (x * x + y * y + z * z >= 1) outside.push_back({x, y, z});
  const RatVec a{Rational(1, 2), Rational(1, 2), Rational(3, 4)}, b{Rational(1, 2), Rational(-1, 2), Rational(3, 4)};
  require(outside.size() == 2, file + ": " + std::to_string(outside.size()) + " box vertices outside the ball");
  require(std::count(outside.begin(), outside.end(), a) && std::count(outside.begin(), outside.end(), b),
          file + ": the outside vertices are not (1/2, +-1/2, 3/4)");
  auto h = run(file, s, "homology st", 120);
  require(free_betti(file, h.result["homology"]) == std::map<int, std::size_t>{{2, 1}, {3, 1}},
          file + ": ST homology " + h.result["homology"]["summary"].get<std::string>());
  require(!h.result["wedge"].get<bool>(), file + ": wedge verdict should be false");
  require(free_betti(file, h.result["order_complex"]) == std::map<int, std::size_t>{{1, 1}, {2, 1}},
          file + ": order complex " + h.result["order_complex"]["summary"].get<std::string>());
}

void local_theorem() {
  std::set<std::size_t> shapes;
  std::set<GeometryKind> kinds;
  for (const auto& [file, s] : corpus()) {
    if (!s.polytope_a || s.geometry.n != 2 || !lists(s, "verify local")) continue;
    auto r = run(file, s, "verify local", 30);
    require_pass(file, r);
    std::size_t inside = 0;
    auto arr = build_arrangement(s.geometry, s.hyperplanes);
    for (std::size_t c : arr.cells_of_dim(2)) inside += s.polytope_a->contains_interior_point(arr.cells[c].witness);
    require(free_betti(file, r.result["homology"]) == std::map<int, std::size_t>{{2, inside}},
            file + ": " + r.result["homology"]["summary"].get<std::string>() + ", regions inside A " +
                std::to_string(inside));
    require(r.result["apartment_map"]["iso"].get<bool>(), file + ": restricted apartment matrix is not an iso");
    shapes.insert(s.polytope_a->vertices.size());
    kinds.insert(s.geometry.kind);
  }
  require(shapes.count(3) && shapes.count(4), "need a triangle and a quadrilateral A");
  require(kinds.count(GeometryKind::Euclidean) && kinds.count(GeometryKind::Hyperbolic), "need E^2 and H^2 scenes");
}

void exact_sequences() {
  int pairs = 0;
  for (const auto& [file, s] : corpus()) {
    if (!s.u || !lists(s, "verify exact-seq")) continue;
    auto r = run(file, s, "verify exact-seq", 10);
    require_pass(file, r);
    for (const char* k : {"composite_zero", "inclusion_injective", "facet_surjective", "kernel_is_image",
                          "rank_additive"})
      require(r.result[k].get<bool>(), file + ": " + k + " is false");
    require(r.result["rank_cup"].get<std::size_t>() ==
                r.result["rank_l"].get<std::size_t>() + r.result["rank_cap"].get<std::size_t>(),
            file + ": ranks are not additive");
    ++pairs;
  }
  require(pairs >= 8, "only " + std::to_string(pairs) + " exact-sequence pairs");
}

void points_and_duality() {
  int points = 0, dual = 0;
  for (const auto& [file, s] : corpus()) {
    if (s.mode == "points") {
      auto r = run(file, s, "verify solomon-tits", 30);
      require_pass(file, r);
      require(r.result["flavor"] == "st-points" && r.result["apartment_map"]["iso"].get<bool>(),
              file + ": tuple apartment map is not an isomorphism");
      auto ls = run(file, s, "groups ls", 30);
      require(ls.result["free_rank"] == r.result["homology_rank"], file + ": Ls rank differs from ST rank");
      ++points;
    }
    if (s.geometry.kind == GeometryKind::Spherical && lists(s, "verify duality") &&
        admissible(scene_collection(s)) == Admissibility::Admissible) {
      auto r = run(file, s, "verify duality", 30);
      require_pass(file, r);
      require(r.result["bijection_ok"].get<bool>(), file + ": duality bijection fails");
      require(r.result["ls_dual_rank"] == r.result["st_rank"], file + ": dual Ls rank differs from ST rank");
      ++dual;
    }
  }
  require(points >= 3 && dual >= 3, "too few points-generated or duality scenes");
}

void polytopes_to_tuples() {
  std::set<GeometryKind> kinds;
  for (const auto& [file, s] : corpus()) {
    if (!lists(s, "verify pt-ls") || s.geometry.kind == GeometryKind::Spherical) continue;
    if (!generated_by_both(scene_collection(s))) continue;
    auto r = run(file, s, "verify pt-ls", 60);
    require_pass(file, r);
    require(r.result["map"]["iso"].get<bool>(), file + ": Pt -> Ls is not an isomorphism");
    kinds.insert(s.geometry.kind);
  }
  require(kinds.size() == 2, "need both E^2 and H^2 scenes generated by points and hyperplanes");
  const std::string file = "s2_coordinate.json";
  Scene s = corpus_scene(file);
  auto r = run(file, s, "verify pt-ls", 60);
  require_pass(file, r);
  require(r.result["map"]["surjective"].get<bool>(), file + ": Pt -> Ls is not surjective");
  require(r.result["kernel_matches_joins"].get<bool>(), file + ": kernel lattice differs from the join lattice");
  require(r.result["kernel_rank"] == r.result["pt_rank"].get<std::size_t>() - r.result["ls_rank"].get<std::size_t>(),
          file + ": kernel rank");
}

void suspension() {
  int scenes = 0;
  for (const auto& [file, s] : corpus()) {
    if (s.geometry.kind != GeometryKind::Spherical || !lists(s, "verify suspension")) continue;
    require(admissible(scene_collection(s)) == Admissibility::NotAdmissible, file + ": scene is admissible");
    auto r = run(file, s, "verify suspension", 30);
    require_pass(file, r);
    require(r.result["region_bijection"].get<bool>(), file + ": regions do not correspond");
    require(r.result["pt_rank"] == r.result["reduced_pt_rank"], file + ": Pt ranks differ");
    require(r.result["predicted_rank"] == r.result["pt_rank"], file + ": predicted rank differs");
    ++scenes;
  }
  require(scenes >= 3, "only " + std::to_string(scenes) + " suspension scenes");
}

void resolution_observations() {
  int probes = 0;
  std::size_t largest = 0;
  for (const auto& [file, s] : corpus()) {
    if (!lists(s, "resolution")) continue;
    auto r = run(file, s, "resolution", 120);
    require_pass(file, r);
    const auto betti = free_betti(file, r.result["homology"]);
    const std::size_t pt = r.result["pt_rank"];
    require(!betti.count(0), file + ": H0 does not vanish");
    require(betti.count(1) && betti.at(1) == pt, file + ": H1 is not Pt");
    // regression pins for the higher groups live in the scene expectations
    const json& pins = s.expect.at("resolution").at("values");
    require(pins.contains("/homology/summary"), file + ": higher homology is not pinned");
    require(expectation_mismatch(r, s.expect.at("resolution")).empty(), expectation_mismatch(r, s.expect.at("resolution")));
    largest = std::max(largest, pt);
    ++probes;
  }
  require(probes >= 5 && largest == 5, "probe scenes should reach |basis| = 5");
}

// --- seeded property sweep -------------------------------------------------

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int k = c.min_degree + 1; k <= c.max_degree(); ++k) {
    ZMatrix m = (c.d(k - 1) * c.d(k)).to_dense();
    for (const auto& row : m.a)
      for (const auto& x : row)
        if (x != 0) return false;
  }
  return true;
}

RatVec random_functional(std::mt19937& rng, const Geometry& g) {
  std::uniform_int_distribution<long> d(-3, 3);
  while (true) {
    RatVec f(g.ambient());
    for (auto& x : f) x = d(rng);
    if (is_zero(RatVec(f.begin() + (g.is_chart() ? 1 : 0), f.end()))) continue;
    return f;
  }
}

Chain add(const Chain& a, const Chain& b, int s) {
  Chain out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

bool zero(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

std::vector<Integer> invariant_factors(const ZMatrix& m) { return smith_normal_form_certified(m).invariant_factors; }

void property_sweep() {
  std::mt19937 rng(20260518);
  int complexes = 0, snf = 0, tuples = 0, pieces = 0, duals = 0, faces = 0;

  // boundaries square to zero on every model
  for (int t = 0; t < 12; ++t) {
    Geometry g = t % 3 == 0 ? Geometry::spherical(2) : Geometry::euclidean(2);
    std::vector<RatVec> fs;
    if (g.kind == GeometryKind::Spherical)
      fs = {RatVec{1, 0, 0}, RatVec{0, 1, 0}, RatVec{0, 0, 1}};
    while (fs.size() < 4) fs.push_back(random_functional(rng, g));
    Collection l;
    try {
      l = closure_by_functionals(g, fs);
    } catch (const std::invalid_argument&) {
      continue;
    }
    std::vector<ChainComplex> cs{order_complex(l, false).complex, order_complex(l, true).complex,
                                 relative_st_complex(l).complex};
    if (admissible(l) == Admissibility::Admissible) {
      if (g.kind == GeometryKind::Spherical) cs.push_back(pt_bicomplex(l).complex);
      auto arr = build_arrangement(l);
      if (region_basis(arr).size() <= 5) cs.push_back(build_resolution(arr, -1).complex);
    }
    for (const auto& c : cs) require(boundary_squares_to_zero(c), "a boundary does not square to zero");
    complexes += static_cast<int>(cs.size());
  }

  // SNF under unimodular changes of basis
  std::uniform_int_distribution<long> e(-4, 4), pick(0, 3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 2 + t % 3, c = 2 + (t / 3) % 3;
    ZMatrix m(r, c);
    for (auto& row : m.a)
      for (auto& x : row) x = e(rng);
    auto unimodular = [&](std::size_t n) {
      ZMatrix u = ZMatrix::identity(n);
      for (int step = 0; step < 5; ++step) {
        std::size_t i = pick(rng) % n, j = pick(rng) % n;
        if (i == j) continue;
        long k = e(rng);
        for (std::size_t col = 0; col < n; ++col) u(i, col) += k * u(j, col);
      }
      return u;
    };
    require(invariant_factors(unimodular(r) * m * unimodular(c)) == invariant_factors(m), "SNF changed");
    ++snf;
  }

  // apartments of point tuples: cycles, the simplicial relation, degenerate tuples
  const Geometry e2 = Geometry::euclidean(2);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int t = 0; t < 40 && tuples < 8; ++t) {
    std::vector<RatVec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back({Rational(coord(rng)), Rational(coord(rng))});
    bool general = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          general = general && orientation_sign(e2, {homogeneous(pts[i]), homogeneous(pts[j]), homogeneous(pts[k])}) != 0;
    if (!general) continue;
    RatVec mid{(pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2};
    auto all = pts;
    all.push_back(mid);
    auto l = closure_by_points(e2, point_flats(e2, all)).collection;
    auto st = relative_st_complex(l);
    Chain sum(st.complex.rank(2), 0);
    for (std::size_t drop = 0; drop < 4; ++drop) {
      std::vector<RatVec> tuple;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != drop) tuple.push_back(homogeneous(pts[i]));
      auto c = apartment_tuple(l, st, tuple);
      require(is_cycle(st.complex, 2, c), "a tuple apartment is not a cycle");
      sum = add(sum, c, drop % 2 ? -1 : 1);
    }
    require(zero(sum), "the simplicial relation fails");
    require(zero(apartment_tuple(l, st, {homogeneous(pts[0]), homogeneous(mid), homogeneous(pts[1])})),
            "a degenerate tuple has a nonzero apartment");
    ++tuples;
  }

  // subdivision additivity of indicator vectors and of apartment classes
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 30 && pieces < 10; ++t) {
    std::vector<RatVec> fs;
    while (fs.size() < 5) fs.push_back(random_functional(rng, e2));
    Collection l;
    try {
      l = closure_by_functionals(e2, fs);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto arr = build_arrangement(l);
    auto basis = region_basis(arr);
    if (basis.empty()) continue;
    auto st = relative_st_complex(l);
    for (int k = 0; k < 20; ++k) {
      std::vector<RatVec> hs;
      for (const auto& h : arr.hyperplanes)
        if (coin(rng)) hs.push_back(coin(rng) ? h : RatVec{-h[0], -h[1], -h[2]});
      auto b = polytope_from_halfspaces(e2, hs);
      if (!b.polytope) continue;
      auto split = subdivide(*b.polytope, arr.hyperplanes);
      require(polytope_to_vector(arr, basis, {*b.polytope}) == polytope_to_vector(arr, basis, split),
              "indicator vectors are not additive");
      Chain whole = apartment_polytope(l, st, *b.polytope), parts(whole.size(), 0);
      for (const auto& p : split) parts = add(parts, apartment_polytope(l, st, p), 1);
      require(whole == parts, "apartment classes are not additive");
      ++pieces;
    }
  }

  // orthogonal complement is an order-reversing involution
  std::uniform_int_distribution<long> small(-2, 2);
  const Geometry s3 = Geometry::spherical(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<RatVec> fs;
    while (fs.size() < 4) {
      RatVec f(4);
      for (auto& x : f) x = small(rng);
      if (!is_zero(f)) fs.push_back(f);
    }
    auto l = closure_by_functionals(s3, fs);
    require(dualize(dualize(l)) == l, "dualizing twice changes the collection");
    for (const auto& v : l.members)
      for (const auto& w : l.members)
        require(v.contains(w) == w.orthogonal_complement().contains(v.orthogonal_complement()),
                "complement does not reverse inclusion");
    ++duals;
  }

  // face spans: span F is cut out by the facets containing F, and F = P cut by span F
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 2;
    auto g = Geometry::euclidean(n);
    std::vector<RatVec> hs;
    for (int i = 0; i < n; ++i) {
      RatVec lo(n + 1, Rational(0)), hi(n + 1, Rational(0));
      lo[0] = hi[0] = 2;
      lo[i + 1] = 1;
      hi[i + 1] = -1;
      hs.push_back(lo);
      hs.push_back(hi);
    }
    RatVec cut = random_functional(rng, g);
    cut[0] = 1;
    hs.push_back(cut);
    auto b = polytope_from_halfspaces(g, hs);
    if (!b.polytope) continue;
    const auto& p = *b.polytope;
    auto facets = p.facets();
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
      std::vector<RatVec> fun;
      for (auto fi : facets)
        if (p.face_leq(i, fi)) fun.push_back(p.halfspaces[p.faces[fi].active.front()]);
      require(LinearSubspace::kernel(g.ambient(), fun) == p.faces[i].span, "face span is not cut out by facets");
      for (std::size_t j = 0; j < p.faces.size(); ++j)
        require(p.faces[i].span.contains(p.faces[j].witness) == p.face_leq(j, i), "face is not P cut by its span");
      ++faces;
    }
  }

  require(complexes >= 30 && snf == 60 && tuples >= 6 && pieces >= 6 && duals == 10 && faces >= 100,
          "property sweep too small: " + std::to_string(complexes) + " complexes, " + std::to_string(tuples) +
              " tuples, " + std::to_string(pieces) + " subdivisions, " + std::to_string(faces) + " faces");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "euclidean_solomon_tits", euclidean_solomon_tits},
      {2, "concurrent_vanishing", concurrent_vanishing},
      {3, "spherical_coordinate", spherical_coordinate},
      {4, "zero_sphere", zero_sphere},
      {5, "hyperbolic_two_cubes", hyperbolic_two_cubes},
      {6, "local_theorem", local_theorem},
      {7, "exact_sequences", exact_sequences},
      {8, "points_and_duality", points_and_duality},
      {9, "polytopes_to_tuples", polytopes_to_tuples},
      {10, "suspension", suspension},
      {11, "resolution_observations", resolution_observations},
      {12, "property_sweep", property_sweep},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    std::cout << (why.empty() ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << buf << " s)";
    if (!why.empty()) std::cout << ": " << why;
    std::cout << "\n";
    failed += !why.empty();
  }
  return failed ? 1 : 0;
}
