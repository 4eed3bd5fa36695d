#include "tits/collections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tits {

bool Collection::contains(const LinearSubspace& v) const { return index_of(v).has_value(); }

std::optional<std::size_t> Collection::index_of(const LinearSubspace& v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

bool Collection::contains_top() const { return !members.empty() && members.back().dim() == geometry.ambient(); }

std::vector<LinearSubspace> Collection::of_dim(int k) const {
  std::vector<LinearSubspace> out;
  for (const auto& m : members)
    if (geo_dim(m) == k) out.push_back(m);
  return out;
}

std::vector<RatVec> Collection::hyperplane_functionals() const {
  // On S^0 the only hyperplane is the empty flat {0}; it separates the two points.
  if (geometry.kind == GeometryKind::Spherical && geometry.n == 0) return {RatVec{Rational(1)}};
  std::vector<RatVec> out;
  for (const auto& h : hyperplanes()) out.push_back(hyperplane_functional(h));
  return out;
}

Collection make_collection(const Geometry& g, std::vector<LinearSubspace> members, GenerationMode mode) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {g, std::move(members), mode};
}

Collection closure_by_hyperplanes(const Geometry& g, const std::vector<LinearSubspace>& hyperplanes) {
  for (const auto& h : hyperplanes)
    if (h.ambient_dim() != g.ambient() || h.dim() != g.ambient() - 1 || !geo_nonempty(h, g))
      throw std::invalid_argument("closure_by_hyperplanes: input is not a hyperplane of the geometry");
  std::set<LinearSubspace> seen{LinearSubspace::whole(g.ambient())};
  std::vector<LinearSubspace> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<LinearSubspace> next;
    for (const auto& v : frontier)
      for (const auto& h : hyperplanes) {
        if (h.contains(v)) continue;
        auto w = intersect_subspaces(g, v, h);
        if (w && seen.insert(*w).second) next.push_back(*w);
      }
    frontier = std::move(next);
  }
  return make_collection(g, {seen.begin(), seen.end()}, GenerationMode::Hyperplanes);
}

Collection closure_by_functionals(const Geometry& g, const std::vector<RatVec>& functionals) {
  std::vector<LinearSubspace> hs;
  for (const auto& f : functionals) hs.push_back(LinearSubspace::kernel(g.ambient(), {f}));
  return closure_by_hyperplanes(g, hs);
}

std::vector<LinearSubspace> point_flats(const Geometry& g, const std::vector<RatVec>& coords) {
  std::vector<LinearSubspace> out;
  for (const auto& c : coords) {
    RatVec x = g.is_chart() ? homogeneous(c) : c;
    if (x.size() != g.ambient() || is_zero(x)) throw std::invalid_argument("point_flats: bad point");
    if (!inside_model(g, x)) throw std::invalid_argument("point_flats: point outside the model");
    out.push_back(LinearSubspace::span(g.ambient(), {x}));
  }
  return out;
}

PointClosure closure_by_points(const Geometry& g, const std::vector<LinearSubspace>& points) {
  for (const auto& p : points)
    if (p.dim() != 1 || !geo_nonempty(p, g)) throw std::invalid_argument("closure_by_points: input is not a point");
  std::set<LinearSubspace> seen(points.begin(), points.end());
  std::vector<LinearSubspace> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<LinearSubspace> next;
    for (const auto& v : frontier)
      for (const auto& p : points) {
        if (v.contains(p)) continue;
        auto w = v.sum(p);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  PointClosure out;
  out.collection = make_collection(g, {seen.begin(), seen.end()}, GenerationMode::Points);
  out.generating = out.collection.contains_top();
  return out;
}

Variants variants(const Collection& l, const LinearSubspace& u) {
  auto hs = l.hyperplanes();
  if (std::find(hs.begin(), hs.end(), u) == hs.end()) hs.push_back(u);
  Variants v;
  v.cup = closure_by_hyperplanes(l.geometry, hs);
  std::vector<LinearSubspace> plus, cap;
  for (const auto& m : v.cup.members) {
    if (m != u) plus.push_back(m);
    if (u.contains(m)) cap.push_back(m);
  }
  v.uplus = make_collection(l.geometry, plus, GenerationMode::Raw);
  v.cap = make_collection(l.geometry, cap, GenerationMode::Raw);
  return v;
}

bool meets(const Geometry& g, const LinearSubspace& v, const std::vector<RatVec>& halfspaces) {
  auto base = [&] {
    LinearSystem s = chart_system(g);
    if (v.dim() < g.ambient()) {
      RatMatrix ann = v.annihilator();
      for (const auto& a : ann.row_data()) add_constraint(s, g, a, 0);
    }
    for (const auto& h : halfspaces) add_constraint(s, g, h, 2);
    return s;
  };
  if (g.is_chart()) {
    // Bounded hyperbolic polytopes lie inside the model, so the chart test suffices.
    return feasible(base()).has_value();
  }
  for (std::size_t i = 0; i < g.ambient(); ++i)
    for (int sign : {1, -1}) {
      LinearSystem s = base();
      RatVec e(g.ambient() + 1, Rational(0));
      e[0] = -1;
      e[i + 1] = sign;
      s.nonstrict.push_back(e);
      if (feasible(s)) return true;
    }
  return false;
}

Collection restrict_to(const Collection& l, const ConvexPolytope& a) {
  std::vector<LinearSubspace> out;
  for (const auto& m : l.members)
    if (meets(l.geometry, m, a.halfspaces)) out.push_back(m);
  return make_collection(l.geometry, out, GenerationMode::Raw);
}

Collection dualize(const Collection& l) {
  if (l.geometry.kind != GeometryKind::Spherical) throw std::invalid_argument("dualize: spherical geometry only");
  std::vector<LinearSubspace> out{LinearSubspace::whole(l.geometry.ambient())};
  for (const auto& m : l.members) {
    auto c = m.orthogonal_complement();
    if (c.dim() > 0) out.push_back(c);
  }
  return make_collection(l.geometry, out, GenerationMode::Raw);
}

std::string admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "ADMISSIBLE";
    case Admissibility::NotAdmissible: return "NOT_ADMISSIBLE";
    case Admissibility::NotDecidableFinite: return "NOT_DECIDABLE_FINITE";
  }
  return "?";
}

LinearSubspace common_intersection(const Collection& l) {
  LinearSubspace v = LinearSubspace::whole(l.geometry.ambient());
  for (const auto& f : l.hyperplane_functionals()) v = v.intersect(LinearSubspace::kernel(l.geometry.ambient(), {f}));
  return v;
}

Admissibility admissible(const Collection& l) {
  switch (l.geometry.kind) {
    case GeometryKind::Euclidean:
      return l.points().empty() ? Admissibility::NotAdmissible : Admissibility::Admissible;
    case GeometryKind::Spherical:
      return common_intersection(l).dim() == 0 ? Admissibility::Admissible : Admissibility::NotAdmissible;
    case GeometryKind::Hyperbolic: return Admissibility::NotDecidableFinite;
  }
  return Admissibility::NotAdmissible;
}

bool generated_by_points(const Collection& l) {
  auto pts = l.points();
  if (pts.empty()) return false;
  auto c = closure_by_points(l.geometry, pts);
  return c.generating && c.collection.members == l.members;
}

bool generated_by_hyperplanes(const Collection& l) {
  return closure_by_hyperplanes(l.geometry, l.hyperplanes()).members == l.members;
}

bool generated_by_both(const Collection& l) { return generated_by_points(l) && generated_by_hyperplanes(l); }

Collection localize(const Collection& l, const Frame& f) {
  std::vector<LinearSubspace> out;
  for (const auto& m : l.members)
    if (f.carrier.contains(m)) out.push_back(*f.pull(m));
  return make_collection(f.local, out, l.mode);
}

}  // namespace tits
