#include "checks.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "tits/groups.hpp"
#include "tits/resolution.hpp"

namespace tits::cli {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
    case Verdict::Invalid: return "INVALID_SCENE";
  }
  return "?";
}

json CheckResult::to_json(bool timings) const {
  json j{{"name", name}, {"hypotheses", hypotheses}, {"verdict", verdict_name(verdict)}, {"result", result}};
  if (timings) j["seconds"] = seconds;
  return j;
}

json homology_json(const HomologySummary& h) {
  json betti = json::object(), torsion = json::object();
  for (const auto& g : h.groups) {
    if (g.betti) betti[std::to_string(g.degree)] = g.betti;
    if (!g.torsion.empty()) {
      json t = json::array();
      for (const auto& x : g.torsion) t.push_back(x.get_str());
      torsion[std::to_string(g.degree)] = t;
    }
  }
  return {{"betti", betti}, {"torsion", torsion}, {"summary", h.describe()}};
}

namespace {

json matrix_json(const ZMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.a) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.get_str());
    rows.push_back(row);
  }
  return rows;
}

json hom_json(const GroupHom& h) {
  return {{"rows", h.matrix.rows},         {"cols", h.matrix.cols},     {"well_defined", h.well_defined},
          {"injective", h.injective},      {"surjective", h.surjective}, {"iso", h.iso()},
          {"matrix", h.matrix.rows * h.matrix.cols <= 144 ? matrix_json(h.matrix) : json("omitted")}};
}

json presentation_json(const GroupPresentation& p) {
  json t = json::array();
  for (const auto& x : p.torsion) t.push_back(x.get_str());
  return {{"generators", p.generators.size()}, {"relations", p.relations.cols}, {"free_rank", p.free_rank},
          {"torsion", t}};
}

CheckResult hypotheses_failed(std::string why) {
  CheckResult r;
  r.hypotheses = std::move(why);
  r.verdict = Verdict::HypothesesNotMet;
  return r;
}

CheckResult judged(const std::string& hypotheses, bool pass) {
  CheckResult r;
  r.hypotheses = hypotheses;
  if (hypotheses != "MET")
    r.verdict = Verdict::HypothesesNotMet;
  else
    r.verdict = pass ? Verdict::Pass : Verdict::Fail;
  return r;
}

CheckResult apartment_result(const ApartmentReport& a) {
  CheckResult r = judged(a.hypotheses, a.pass());
  r.result = {{"flavor", flavor_name(a.flavor)}, {"homology", homology_json(a.homology)},
              {"generators", a.generators},      {"homology_rank", a.homology_rank},
              {"wedge", wedge_verdict(a.homology, a.degree)},
              {"all_cycles", a.all_cycles},      {"collapse_agrees", a.collapse_agrees},
              {"apartment_map", hom_json(a.map)}};
  return r;
}

CheckResult check_validate(const Scene& s, const Collection& l) {
  CheckResult r;
  r.result = {{"geometry", std::string(1, kind_letter(s.geometry.kind))},
              {"n", s.geometry.n},
              {"mode", s.mode},
              {"members", l.size()},
              {"hyperplanes", l.hyperplanes().size()},
              {"points", l.points().size()},
              {"admissibility", admissibility_name(admissible(l))},
              {"generated_by_points", generated_by_points(l)},
              {"generated_by_hyperplanes", generated_by_hyperplanes(l)}};
  return r;
}

CheckResult check_closure(const Scene&, const Collection& l) {
  CheckResult r;
  json members = json::array();
  std::map<int, std::size_t> by_dim;
  for (const auto& m : l.members) {
    members.push_back({{"dim", geo_dim(m)}, {"basis", to_json(m)}});
    by_dim[geo_dim(m)]++;
  }
  json counts = json::object();
  for (auto [d, c] : by_dim) counts[std::to_string(d)] = c;
  r.result = {{"count", l.size()}, {"by_dim", counts}, {"members", members}};
  return r;
}

CheckResult check_arrangement(const Scene&, const Collection& l) {
  CheckResult r;
  Arrangement a = build_arrangement(l);
  json counts = json::object();
  std::size_t outside = 0;
  for (const auto& c : a.cells) {
    if (!c.in_model) {
      ++outside;
      continue;
    }
    std::string k = std::to_string(c.dim);
    counts[k] = counts.value(k, 0) + 1;
  }
  json basis = json::array();
  for (auto b : region_basis(a)) basis.push_back(sign_key(a.cells[b].signs));
  r.result = {{"hyperplanes", a.hyperplanes.size()}, {"cells_by_dim", counts}, {"chart_cells_outside_model", outside},
              {"regions", a.cells_of_dim(l.geometry.n).size()}, {"region_basis", basis}};
  return r;
}

CheckResult check_homology(const Scene& s, const Collection& l, const std::string& which) {
  CheckResult r;
  const int n = l.geometry.n;
  if (which == "t") {
    auto h = homology(order_complex(l, false).complex);
    bool zero = true;
    for (const auto& g : h.groups) zero = zero && g.betti == 0 && g.torsion.empty();
    r.result = {{"complex", "order complex of the proper members, reduced"},
                {"homology", homology_json(h)},
                {"acyclic", zero},
                {"wedge", wedge_verdict(h, n - 1)}};
  } else if (which == "st") {
    auto h = homology(relative_st_complex(l).complex);
    auto t = homology(order_complex(l, false).complex);
    r.result = {{"complex", "relative suspended complex"}, {"homology", homology_json(h)},
                {"wedge", wedge_verdict(h, n)},       {"order_complex", homology_json(t)}};
  } else if (which == "pt") {
    if (l.geometry.kind != GeometryKind::Spherical) return hypotheses_failed("PT_MODEL_IS_SPHERICAL");
    if (admissible(l) == Admissibility::Admissible) {
      auto h = homology(pt_bicomplex(l).complex);
      auto c = pt_collapse_crosscheck(l);
      r.result = {{"complex", "polytopal bicomplex"}, {"homology", homology_json(h)},
                  {"collapse", homology_json(c)},    {"collapse_agrees", h == c},
                  {"wedge", wedge_verdict(h, n)}};
      if (!(h == c)) r.verdict = Verdict::Fail;
    } else {
      auto sr = suspension_check(l);
      if (sr.hypotheses != "MET") return hypotheses_failed(sr.hypotheses);
      r.result = {{"complex", "suspension of the reduced bicomplex"},
                  {"predicted_top_rank", sr.predicted_rank},
                  {"reduced_wedge", sr.reduced_wedge},
                  {"regions", sr.pt_rank}};
    }
  } else if (which == "local") {
    if (!s.polytope_a) return hypotheses_failed("POLYTOPE_A_REQUIRED");
    auto h = homology(local_complex(l, *s.polytope_a).complex);
    r.result = {{"complex", "relative suspended complex over A"}, {"homology", homology_json(h)},
                {"wedge", wedge_verdict(h, n)}};
  } else {
    throw SceneError("homology: expected t, st, pt or local");
  }
  return r;
}

CheckResult check_verify(const Scene& s, const Collection& l, const std::string& which) {
  const Geometry& g = l.geometry;
  if (which == "solomon-tits") {
    if (s.mode == "points") return apartment_result(apartment_matrix(l, ApartmentFlavor::StPoints));
    switch (g.kind) {
      case GeometryKind::Euclidean: return apartment_result(apartment_matrix(l, ApartmentFlavor::StPolytopes));
      case GeometryKind::Spherical: return apartment_result(apartment_matrix(l, ApartmentFlavor::PtSpherical));
      case GeometryKind::Hyperbolic:
        if (s.polytope_a) return apartment_result(apartment_matrix(l, ApartmentFlavor::Local, s.polytope_a));
        return hypotheses_failed(admissibility_name(admissible(l)));
    }
  }
  if (which == "local") return apartment_result(apartment_matrix(l, ApartmentFlavor::Local, s.polytope_a));
  if (which == "pt-ls") {
    auto p = verify_pt_ls(l);
    CheckResult r = judged(p.hypotheses, p.pass());
    r.result = {{"pt_rank", p.pt_rank},       {"ls_rank", p.ls_rank},     {"map", hom_json(p.map)},
                {"kernel_rank", p.kernel_rank}, {"spherical", p.spherical}, {"kernel_matches_joins", p.kernel_matches_joins}};
    return r;
  }
  if (which == "exact-seq") {
    if (!s.u) return hypotheses_failed("HYPERPLANE_U_REQUIRED");
    auto e = exact_sequence_check(l, *s.u, s.polytope_a);
    CheckResult r = judged(e.hypotheses, e.pass());
    r.result = {{"local", e.local},
                {"rank_l", e.rank_l},
                {"rank_cup", e.rank_cup},
                {"rank_cap", e.rank_cap},
                {"composite_zero", e.composite_zero},
                {"inclusion_injective", e.inclusion_injective},
                {"facet_surjective", e.facet_surjective},
                {"kernel_is_image", e.kernel_is_image},
                {"rank_additive", e.rank_additive},
                {"lifts_ok", e.lifts_ok},
                {"dashed_map_agrees", e.dashed_map_agrees}};
    return r;
  }
  if (which == "duality") {
    auto d = duality_check(l);
    CheckResult r = judged(d.hypotheses, d.pass());
    r.result = {{"bijection_ok", d.bijection_ok}, {"ls_dual_rank", d.ls_dual_rank}, {"st_rank", d.st_rank},
                {"apartment_iso", d.apartment_iso}};
    return r;
  }
  if (which == "suspension") {
    auto d = suspension_check(l);
    CheckResult r = judged(d.hypotheses, d.pass());
    r.result = {{"u_dim", d.u_dim},
                {"pt_rank", d.pt_rank},
                {"reduced_pt_rank", d.reduced_pt_rank},
                {"region_bijection", d.region_bijection},
                {"predicted_rank", d.predicted_rank},
                {"reduced_wedge", d.reduced_wedge}};
    return r;
  }
  throw SceneError("verify: unknown check " + which);
}

CheckResult check_groups(const Scene&, const Collection& l, const std::string& which) {
  CheckResult r;
  if (which == "pt") {
    Arrangement a = build_arrangement(l);
    r.result = presentation_json(pt_group(a, region_basis(a)));
    return r;
  }
  if (which == "ls") {
    if (!generated_by_points(l)) return hypotheses_failed("NOT_GENERATED_BY_POINTS");
    r.result = presentation_json(ls_group(l).group);
    return r;
  }
  throw SceneError("groups: expected pt or ls");
}

CheckResult check_resolution(const Scene& s, const Collection& l) {
  auto rep = resolution_homology(l, s.p_max);
  CheckResult r = judged("MET", rep.pass());
  json higher = json::object();
  for (const auto& g : rep.homology.groups)
    if (g.degree >= 2 && (g.betti || !g.torsion.empty())) {
      json t = json::array();
      for (const auto& x : g.torsion) t.push_back(x.get_str());
      higher[std::to_string(g.degree)] = {{"betti", g.betti}, {"torsion", t}};
    }
  r.result = {{"level_counts", rep.level_counts},
              {"pt_rank", rep.pt_rank},
              {"homology", homology_json(rep.homology)},
              {"face_identities", rep.identities_ok},
              {"h0_vanishes", rep.h0_vanishes},
              {"h1_is_pt", rep.h1_is_pt},
              {"higher_homology", {{"groups", higher}, {"claim", "none"}, {"unreliable_degrees", rep.unreliable}}}};
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "validate",         "closure",           "arrangement",           "homology t",
      "homology st",      "homology pt",       "homology local",        "verify solomon-tits",
      "verify pt-ls",     "verify exact-seq",  "verify duality",        "verify suspension",
      "verify local",     "groups pt",         "groups ls",             "resolution"};
  return names;
}

CheckResult run_check(const Scene& scene, const std::string& name) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    Collection l = scene_collection(scene);
    auto space = name.find(' ');
    std::string head = name.substr(0, space), arg = space == std::string::npos ? "" : name.substr(space + 1);
    if (head == "validate")
      r = check_validate(scene, l);
    else if (head == "closure")
      r = check_closure(scene, l);
    else if (head == "arrangement")
      r = check_arrangement(scene, l);
    else if (head == "homology")
      r = check_homology(scene, l, arg);
    else if (head == "verify")
      r = check_verify(scene, l, arg);
    else if (head == "groups")
      r = check_groups(scene, l, arg);
    else if (head == "resolution")
      r = check_resolution(scene, l);
    else
      throw SceneError("unknown check: " + name);
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.verdict = Verdict::Invalid;
    r.hypotheses = "UNKNOWN";
    r.result = {{"diagnostic", e.what()}};
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code(const std::vector<CheckResult>& results) {
  bool fail = false, hyp = false;
  for (const auto& r : results) {
    if (r.verdict == Verdict::Invalid) return 2;
    fail = fail || r.verdict == Verdict::Fail;
    hyp = hyp || r.verdict == Verdict::HypothesesNotMet;
  }
  return fail ? 1 : hyp ? 3 : 0;
}

std::string expectation_mismatch(const CheckResult& r, const json& expected) {
  json e = expected.is_string() ? json{{"verdict", expected}} : expected;
  std::string want = e.value("verdict", std::string("PASS"));
  if (verdict_name(r.verdict) != want) return r.name + ": expected " + want + ", got " + verdict_name(r.verdict);
  if (e.contains("values"))
    for (const auto& [ptr, value] : e["values"].items()) {
      json::json_pointer p(ptr);
      if (!r.result.contains(p)) return r.name + ": missing " + ptr;
      if (r.result.at(p) != value)
        return r.name + ": " + ptr + " is " + r.result.at(p).dump() + ", expected " + value.dump();
    }
  return "";
}

}  // namespace tits::cli
