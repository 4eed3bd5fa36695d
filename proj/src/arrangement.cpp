#include "tits/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace tits {

namespace {

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

RatVec scaled(const RatVec& v, int s) {
  RatVec w = v;
  if (s < 0)
    for (auto& x : w) x = -x;
  return w;
}

RatVec canonical_functional(const Geometry& g, const RatVec& f) {
  if (f.size() != g.ambient() || is_zero(f)) throw std::invalid_argument("arrangement: bad functional");
  return hyperplane_functional(LinearSubspace::kernel(g.ambient(), {f}));
}

// Homogeneous witness of the relatively open cell with the given signs on the
// first signs.size() hyperplanes.
std::optional<RatVec> cell_point(const Geometry& g, const std::vector<RatVec>& hyps, const std::vector<int>& signs) {
  LinearSystem s = chart_system(g);
  std::vector<RatVec> eq;
  bool any_strict = false;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    add_constraint(s, g, hyps[i], signs[i]);
    if (signs[i] == 0)
      eq.push_back(hyps[i]);
    else
      any_strict = true;
  }
  if (!g.is_chart() && !any_strict) {
    LinearSubspace k = LinearSubspace::kernel(g.ambient(), eq);
    if (k.dim() == 0) return std::nullopt;
    return k.basis().row(0);
  }
  auto w = feasible(s);
  if (!w) return std::nullopt;
  return chart_witness_to_homogeneous(g, *w);
}

// Positive rescaling with first nonzero entry of absolute value one.
RatVec positive_normal(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) {
      Rational s = abs(x);
      RatVec w = v;
      for (auto& y : w) y /= s;
      return w;
    }
  return v;
}

Rational chart_quadratic(const Geometry& g, const RatVec& y) { return quadratic_value(g, homogeneous(y)); }

}  // namespace

std::string sign_key(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return s;
}

bool Arrangement::leq(std::size_t i, std::size_t j) const {
  const auto& a = cells[i].signs;
  const auto& b = cells[j].signs;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && a[k] != b[k]) return false;
  return true;
}

std::vector<std::size_t> Arrangement::cells_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == d && cells[i].in_model) out.push_back(i);
  return out;
}

std::vector<std::size_t> Arrangement::closure(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].in_model && leq(i, j)) out.push_back(i);
  return out;
}

std::vector<int> Arrangement::signs_of(const RatVec& x) const {
  std::vector<int> s;
  for (const auto& h : hyperplanes) s.push_back(sgn(dot(h, x)));
  return s;
}

std::optional<std::size_t> Arrangement::locate(const RatVec& x) const {
  auto it = index.find(signs_of(x));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Arrangement::hyperplane_index(const RatVec& functional) const {
  RatVec c = canonical_functional(geometry, functional);
  for (std::size_t i = 0; i < hyperplanes.size(); ++i)
    if (hyperplanes[i] == c) return i;
  return std::nullopt;
}

std::vector<RatVec> Arrangement::closure_halfspaces(std::size_t j) const {
  std::vector<RatVec> out;
  const auto& s = cells[j].signs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) {
      out.push_back(scaled(hyperplanes[i], s[i]));
    } else {
      out.push_back(hyperplanes[i]);
      out.push_back(scaled(hyperplanes[i], -1));
    }
  }
  return out;
}

std::optional<RatVec> model_witness(const Geometry& g, const std::vector<RatVec>& rows, const std::vector<RatVec>& eqs,
                                    const RatVec& interior) {
  if (g.kind != GeometryKind::Hyperbolic) return interior;
  if (inside_model(g, interior)) return interior;
  const std::size_t n = static_cast<std::size_t>(g.n);
  const RatMatrix& F = g.form;
  RatVec b(n);
  RatMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = F(i + 1, 0);
    for (std::size_t j = 0; j < n; ++j) A(i, j) = F(i + 1, j + 1);
  }
  auto affine_part = [&](const RatVec& r) {
    return std::pair<Rational, RatVec>{r[0], RatVec(r.begin() + 1, r.end())};
  };
  // The minimum of the convex quadratic over the closed polyhedron is the
  // minimum over the faces of the unconstrained minimizer on each face's
  // affine hull; enumerate candidate active sets.
  const std::size_t m = rows.size();
  std::optional<RatVec> best;
  for (std::size_t size = 0; size <= std::min(m, n) && !best; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      RatMatrix M(0, n);
      RatVec rhs;
      for (const auto& e : eqs) {
        auto [c, a] = affine_part(e);
        M.append_row(a);
        rhs.push_back(-c);
      }
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) {
          auto [c, a] = affine_part(rows[i]);
          M.append_row(a);
          rhs.push_back(-c);
        }
      RatVec y0(n, Rational(0));
      RatMatrix N = RatMatrix::identity(n);
      if (M.rows() > 0) {
        auto sol = solve(M, rhs);
        if (!sol) continue;
        y0 = *sol;
        N = nullspace(M);
      }
      RatVec y = y0;
      if (N.rows() > 0) {
        RatMatrix NA = N * A;
        RatMatrix H = NA * N.transpose();
        RatVec grad = A.apply(y0);
        for (std::size_t i = 0; i < n; ++i) grad[i] += b[i];
        RatVec r = N.apply(grad);
        for (auto& x : r) x = -x;
        auto t = solve(H, r);
        if (!t) throw std::logic_error("model_witness: form is not positive definite on the chart");
        for (std::size_t k = 0; k < N.rows(); ++k)
          for (std::size_t i = 0; i < n; ++i) y[i] += (*t)[k] * N(k, i);
      }
      bool ok = true;
      for (const auto& r : rows) {
        auto [c, a] = affine_part(r);
        if (c + dot(a, y) < 0) {
          ok = false;
          break;
        }
      }
      if (ok && chart_quadratic(g, y) < 0) {
        best = y;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (!best) return std::nullopt;
  RatVec w = dehomogenize(interior);
  Rational s(1, 2);
  for (;;) {
    RatVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = w[i] + s * ((*best)[i] - w[i]);
    if (chart_quadratic(g, p) < 0) return homogeneous(p);
    s = (s + 1) / 2;
  }
}

Arrangement build_arrangement(const Geometry& g, const std::vector<RatVec>& input) {
  if (g.n > 4) throw std::invalid_argument("arrangement: dimension above 4 is out of range");
  Arrangement a;
  a.geometry = g;
  for (const auto& f : input) {
    RatVec c = canonical_functional(g, f);
    if (std::find(a.hyperplanes.begin(), a.hyperplanes.end(), c) == a.hyperplanes.end()) a.hyperplanes.push_back(c);
  }
  if (a.hyperplanes.size() > 16) throw std::invalid_argument("arrangement: more than 16 hyperplanes");
  struct Partial {
    std::vector<int> signs;
    RatVec witness;
  };
  std::vector<Partial> cur;
  {
    RatVec w(g.ambient(), Rational(0));
    w[0] = 1;
    cur.push_back({{}, w});
  }
  for (std::size_t k = 0; k < a.hyperplanes.size(); ++k) {
    const RatVec& h = a.hyperplanes[k];
    std::vector<Partial> next;
    for (const auto& p : cur) {
      int s0 = sgn(dot(h, p.witness));
      for (int s : {1, 0, -1}) {
        std::vector<int> signs = p.signs;
        signs.push_back(s);
        if (s == s0) {
          next.push_back({signs, p.witness});
          continue;
        }
        auto w = cell_point(g, a.hyperplanes, signs);
        if (w) next.push_back({signs, *w});
      }
    }
    cur = std::move(next);
  }
  for (auto& p : cur) {
    Cell c;
    c.signs = p.signs;
    std::vector<RatVec> eq, rows;
    for (std::size_t i = 0; i < p.signs.size(); ++i) {
      if (p.signs[i] == 0)
        eq.push_back(a.hyperplanes[i]);
      else
        rows.push_back(scaled(a.hyperplanes[i], p.signs[i]));
    }
    c.flat = LinearSubspace::kernel(g.ambient(), eq);
    c.dim = geo_dim(c.flat);
    c.witness = p.witness;
    if (g.is_chart()) {
      Rational s = c.witness[0];
      for (auto& x : c.witness) x /= s;
    }
    if (g.kind == GeometryKind::Hyperbolic) {
      auto w = model_witness(g, rows, eq, c.witness);
      c.in_model = w.has_value();
      if (w) c.witness = *w;
    }
    a.cells.push_back(std::move(c));
  }
  std::sort(a.cells.begin(), a.cells.end(), [](const Cell& x, const Cell& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return sign_key(x.signs) < sign_key(y.signs);
  });
  for (std::size_t i = 0; i < a.cells.size(); ++i) a.index[a.cells[i].signs] = i;
  return a;
}

Arrangement build_arrangement(const Collection& l) { return build_arrangement(l.geometry, l.hyperplane_functionals()); }

bool cell_bounded(const Arrangement& a, std::size_t cell) {
  const Geometry& g = a.geometry;
  if (g.kind == GeometryKind::Spherical) return true;
  if (!a.cells[cell].in_model) return false;
  if (!euclid_bounded(g, a.closure_halfspaces(cell))) return false;
  if (g.kind == GeometryKind::Hyperbolic)
    for (std::size_t i = 0; i < a.cells.size(); ++i)
      if (a.cells[i].dim == 0 && !a.cells[i].in_model && a.leq(i, cell)) return false;
  return true;
}

std::vector<std::size_t> region_basis(const Arrangement& a) {
  std::vector<std::size_t> out;
  for (std::size_t i : a.cells_of_dim(a.geometry.n))
    if (cell_bounded(a, i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> regions_inside(const Arrangement& a, const std::vector<std::size_t>& basis,
                                        const std::vector<RatVec>& halfspaces) {
  std::vector<std::size_t> out;
  for (std::size_t r : basis) {
    bool in = true;
    for (const auto& h : halfspaces)
      if (dot(h, a.cells[r].witness) <= 0) in = false;
    if (in) out.push_back(r);
  }
  return out;
}

std::optional<std::vector<Integer>> polytope_to_vector(const Arrangement& a, const std::vector<std::size_t>& basis,
                                                       const std::vector<ConvexPolytope>& pieces) {
  std::vector<Integer> v(basis.size(), 0);
  for (const auto& p : pieces) {
    for (const auto& h : p.halfspaces)
      if (!a.hyperplane_index(h)) return std::nullopt;
    for (std::size_t r : a.cells_of_dim(a.geometry.n)) {
      if (!p.contains_interior_point(a.cells[r].witness)) continue;
      auto it = std::find(basis.begin(), basis.end(), r);
      if (it == basis.end()) throw std::invalid_argument("polytope_to_vector: polytope covers a region outside the basis");
      v[static_cast<std::size_t>(it - basis.begin())] += 1;
    }
  }
  return v;
}

std::vector<ConvexPolytope> subdivide(const ConvexPolytope& p, const std::vector<RatVec>& cutters) {
  const Geometry& g = p.geometry;
  std::vector<std::vector<int>> partial{{}};
  for (std::size_t k = 0; k < cutters.size(); ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& signs : partial)
      for (int s : {1, -1}) {
        LinearSystem sys = chart_system(g);
        for (const auto& h : p.halfspaces) add_constraint(sys, g, h, 1);
        for (std::size_t i = 0; i <= k; ++i) add_constraint(sys, g, cutters[i], i < k ? signs[i] : s);
        if (feasible(sys)) {
          auto t = signs;
          t.push_back(s);
          next.push_back(t);
        }
      }
    partial = std::move(next);
  }
  std::vector<ConvexPolytope> out;
  for (const auto& signs : partial) {
    std::vector<RatVec> hs = p.halfspaces;
    for (std::size_t i = 0; i < cutters.size(); ++i) hs.push_back(scaled(cutters[i], signs[i]));
    for (auto& h : hs) h = positive_normal(h);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    // Drop redundant rows: keep only those spanning a facet.
    std::vector<RatVec> kept;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      LinearSystem sys = chart_system(g);
      for (std::size_t j = 0; j < hs.size(); ++j)
        if (j != i) add_constraint(sys, g, hs[j], 1);
      add_constraint(sys, g, hs[i], -1);
      if (feasible(sys) && std::find(kept.begin(), kept.end(), hs[i]) == kept.end()) kept.push_back(hs[i]);
    }
    auto b = polytope_from_halfspaces(g, kept);
    if (!b.polytope) throw std::logic_error("subdivide: piece is not a polytope");
    out.push_back(*b.polytope);
  }
  return out;
}

std::optional<SignedFace> facet_map(const ConvexPolytope& q, const RatVec& u) {
  LinearSubspace k = LinearSubspace::kernel(q.geometry.ambient(), {u});
  for (std::size_t f : q.facets())
    if (q.faces[f].span == k) return SignedFace{sgn(dot(u, q.top().witness)), f};
  return std::nullopt;
}

std::optional<std::size_t> region_facet(const Arrangement& a, std::size_t region, std::size_t h) {
  for (std::size_t i : a.cells_of_dim(a.geometry.n - 1))
    if (a.cells[i].signs[h] == 0 && a.leq(i, region)) return i;
  return std::nullopt;
}

std::vector<std::size_t> cofaces(const Arrangement& a, std::size_t cell) {
  std::vector<std::size_t> out;
  for (std::size_t j : a.cells_of_dim(a.geometry.n))
    if (a.leq(cell, j)) out.push_back(j);
  return out;
}

ConvexPolytope region_polytope(const Arrangement& a, std::size_t region) {
  std::vector<RatVec> hs;
  for (std::size_t h = 0; h < a.hyperplanes.size(); ++h) {
    bool facet = false;
    for (std::size_t i = 0; i < a.cells.size() && !facet; ++i)
      facet = a.cells[i].dim == a.geometry.n - 1 && a.cells[i].signs[h] == 0 && a.leq(i, region);
    // On S^0 the separating "hyperplane" is the empty flat and has no cells.
    if (a.geometry.n == 0) facet = true;
    if (facet) hs.push_back(scaled(a.hyperplanes[h], a.cells[region].signs[h]));
  }
  auto b = polytope_from_halfspaces(a.geometry, hs);
  if (!b.polytope) throw std::invalid_argument("region_polytope: " + defect_name(b.defect));
  return *b.polytope;
}

}  // namespace tits

namespace tits {

std::optional<Lift> cofacet_lift(const Arrangement& cup, const std::vector<std::size_t>& basis, std::size_t cell,
                                 std::size_t u, int preferred_side) {
  std::optional<Lift> other;
  for (std::size_t r : cofaces(cup, cell)) {
    if (std::find(basis.begin(), basis.end(), r) == basis.end()) continue;
    int side = cup.cells[r].signs[u];
    if (side == preferred_side) return Lift{side, r};
    other = Lift{side, r};
  }
  return other;
}

}  // namespace tits
