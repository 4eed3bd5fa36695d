#include "tits/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tits {

char kind_letter(GeometryKind k) {
  switch (k) {
    case GeometryKind::Euclidean: return 'E';
    case GeometryKind::Hyperbolic: return 'H';
    case GeometryKind::Spherical: return 'S';
  }
  return '?';
}

Geometry Geometry::euclidean(int n) { return {GeometryKind::Euclidean, n, {}}; }

Geometry Geometry::hyperbolic(int n) {
  RatMatrix f = RatMatrix::identity(static_cast<std::size_t>(n) + 1);
  f(0, 0) = -1;
  return {GeometryKind::Hyperbolic, n, f};
}

Geometry Geometry::spherical(int n) { return {GeometryKind::Spherical, n, {}}; }

// ---------------------------------------------------------------- subspaces

LinearSubspace LinearSubspace::span(std::size_t ambient, const std::vector<RatVec>& vectors) {
  RatMatrix m(0, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("span: vector of wrong length");
    m.append_row(v);
  }
  auto r = rref_with_pivots(m);
  LinearSubspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(r.form);
  s.pivots_ = std::move(r.pivots);
  return s;
}

LinearSubspace LinearSubspace::kernel(std::size_t ambient, const std::vector<RatVec>& functionals) {
  if (functionals.empty()) return whole(ambient);
  RatMatrix m(0, ambient);
  for (const auto& f : functionals) {
    if (f.size() != ambient) throw std::invalid_argument("kernel: functional of wrong length");
    m.append_row(f);
  }
  return span(ambient, nullspace(m).row_data());
}

LinearSubspace LinearSubspace::whole(std::size_t ambient) {
  return span(ambient, RatMatrix::identity(ambient).row_data());
}

LinearSubspace LinearSubspace::zero(std::size_t ambient) { return span(ambient, {}); }

RatMatrix LinearSubspace::annihilator() const {
  if (dim() == 0) return RatMatrix::identity(ambient_);
  return rref(nullspace(basis_));
}

LinearSubspace LinearSubspace::orthogonal_complement() const {
  return span(ambient_, annihilator().row_data());
}

bool LinearSubspace::contains(const RatVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: vector of wrong length");
  RatVec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
  }
  return is_zero(r);
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.dim() > dim()) return false;
  for (const auto& row : other.basis_.row_data())
    if (!contains(row)) return false;
  return true;
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& o) const {
  std::vector<RatVec> f = annihilator().row_data();
  if (dim() == ambient_) f.clear();
  if (o.dim() < o.ambient_) {
    auto g = o.annihilator().row_data();
    f.insert(f.end(), g.begin(), g.end());
  }
  return kernel(ambient_, f);
}

LinearSubspace LinearSubspace::sum(const LinearSubspace& o) const {
  std::vector<RatVec> rows = basis_.row_data();
  for (const auto& r : o.basis_.row_data()) rows.push_back(r);
  return span(ambient_, rows);
}

std::string LinearSubspace::key() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j) s += ",";
      s += basis_(i, j).get_str();
    }
  }
  return s + "]";
}

bool LinearSubspace::operator<(const LinearSubspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != o.basis_(i, j)) return basis_(i, j) < o.basis_(i, j);
  return false;
}

bool geo_nonempty(const LinearSubspace& v, const Geometry& g) {
  if (v.ambient_dim() != g.ambient()) throw std::invalid_argument("geo_nonempty: ambient mismatch");
  switch (g.kind) {
    case GeometryKind::Euclidean: return v.dim() > 0 && v.basis()(0, 0) != 0;
    case GeometryKind::Hyperbolic: return signature_on_subspace(g.form, v.basis()).n_neg >= 1;
    case GeometryKind::Spherical: return v.dim() >= 1;
  }
  return false;
}

RatVec homogeneous(const RatVec& chart_point) {
  RatVec x;
  x.reserve(chart_point.size() + 1);
  x.emplace_back(1);
  x.insert(x.end(), chart_point.begin(), chart_point.end());
  return x;
}

RatVec dehomogenize(const RatVec& x) {
  if (x.empty() || x[0] == 0) throw std::invalid_argument("dehomogenize: point at infinity");
  RatVec p(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) p[i - 1] = x[i] / x[0];
  return p;
}

Rational quadratic_value(const Geometry& g, const RatVec& x) {
  if (g.form.rows() != x.size()) throw std::invalid_argument("quadratic_value: no form or size mismatch");
  return dot(x, g.form.apply(x));
}

bool inside_model(const Geometry& g, const RatVec& x) {
  if (g.kind != GeometryKind::Hyperbolic) return true;
  return quadratic_value(g, x) < 0;
}

LinearSubspace span_points(const Geometry& g, const std::vector<LinearSubspace>& points) {
  if (points.empty()) throw std::invalid_argument("span_points: empty input");
  LinearSubspace s = LinearSubspace::zero(g.ambient());
  for (const auto& p : points) s = s.sum(p);
  return s;
}

std::optional<LinearSubspace> intersect_subspaces(const Geometry& g, const LinearSubspace& a,
                                                  const LinearSubspace& b) {
  LinearSubspace c = a.intersect(b);
  if (!geo_nonempty(c, g)) return std::nullopt;
  return c;
}

RatVec hyperplane_functional(const LinearSubspace& hyperplane) {
  if (hyperplane.dim() + 1 != hyperplane.ambient_dim())
    throw std::invalid_argument("hyperplane_functional: not a hyperplane");
  return hyperplane.annihilator().row(0);
}

int orientation_sign(const Geometry& g, const std::vector<RatVec>& vertices) {
  if (g.is_chart()) {
    std::vector<RatVec> pts;
    for (const auto& v : vertices) pts.push_back(dehomogenize(v));
    return orientation_sign_affine(pts);
  }
  return orientation_sign_linear(vertices);
}

// ---------------------------------------------------------------- systems

LinearSystem chart_system(const Geometry& g) {
  LinearSystem s;
  s.vars = g.is_chart() ? static_cast<std::size_t>(g.n) : g.ambient();
  return s;
}

void add_constraint(LinearSystem& sys, const Geometry& g, const RatVec& functional, int sense) {
  RatVec row;
  if (g.is_chart()) {
    row = functional;
  } else {
    row.reserve(functional.size() + 1);
    row.emplace_back(0);
    row.insert(row.end(), functional.begin(), functional.end());
  }
  switch (sense) {
    case 0: sys.equalities.push_back(row); break;
    case 1: sys.strict.push_back(row); break;
    case -1:
      for (auto& x : row) x = -x;
      sys.strict.push_back(row);
      break;
    case 2: sys.nonstrict.push_back(row); break;
    case -2:
      for (auto& x : row) x = -x;
      sys.nonstrict.push_back(row);
      break;
    default: throw std::invalid_argument("add_constraint: bad sense");
  }
}

RatVec chart_witness_to_homogeneous(const Geometry& g, const RatVec& w) {
  return g.is_chart() ? homogeneous(w) : w;
}

// ---------------------------------------------------------------- polytopes

std::string defect_name(PolytopeDefect d) {
  switch (d) {
    case PolytopeDefect::None: return "NONE";
    case PolytopeDefect::Empty: return "EMPTY";
    case PolytopeDefect::LowerDimensional: return "LOWER_DIMENSIONAL";
    case PolytopeDefect::Unbounded: return "UNBOUNDED";
    case PolytopeDefect::TooLarge: return "TOO_LARGE";
  }
  return "?";
}

bool ConvexPolytope::face_leq(std::size_t i, std::size_t j) const {
  const auto& ai = faces[i].active;
  const auto& aj = faces[j].active;
  return std::includes(ai.begin(), ai.end(), aj.begin(), aj.end());
}

bool ConvexPolytope::contains_point(const RatVec& x) const {
  for (const auto& h : halfspaces)
    if (dot(h, x) < 0) return false;
  return true;
}

bool ConvexPolytope::contains_interior_point(const RatVec& x) const {
  for (const auto& h : halfspaces)
    if (dot(h, x) <= 0) return false;
  return true;
}

std::vector<std::size_t> ConvexPolytope::facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == top().dim - 1) out.push_back(i);
  return out;
}

bool euclid_bounded(const Geometry& g, const std::vector<RatVec>& halfspaces) {
  if (!g.is_chart()) return true;
  const std::size_t n = static_cast<std::size_t>(g.n);
  RatMatrix lin(0, n);
  for (const auto& h : halfspaces) lin.append_row(RatVec(h.begin() + 1, h.end()));
  if (n == 0) return true;
  if (rank(lin) < n) return false;
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    LinearSystem s;
    s.vars = n;
    for (const auto& row : lin.row_data()) {
      RatVec r{Rational(0)};
      r.insert(r.end(), row.begin(), row.end());
      s.nonstrict.push_back(r);
    }
    s.strict.push_back(s.nonstrict[i]);
    if (feasible(s)) return false;
  }
  return true;
}

std::vector<RatVec> enumerate_vertices(const Geometry& g, const std::vector<RatVec>& halfspaces) {
  const std::size_t m = halfspaces.size();
  const std::size_t k = static_cast<std::size_t>(g.n);
  std::vector<RatVec> out;
  if (m < k) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<RatVec> eq;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) eq.push_back(halfspaces[i]);
    LinearSubspace ker = LinearSubspace::kernel(g.ambient(), eq);
    if (ker.dim() != 1) continue;
    RatVec v = ker.basis().row(0);
    if (g.is_chart()) {
      if (v[0] == 0) continue;
      Rational s = v[0];
      for (auto& x : v) x /= s;
      bool ok = std::all_of(halfspaces.begin(), halfspaces.end(), [&](const RatVec& h) { return dot(h, v) >= 0; });
      if (ok) out.push_back(v);
    } else {
      for (int sign : {1, -1}) {
        RatVec w = v;
        for (auto& x : w) x *= sign;
        bool ok = std::all_of(halfspaces.begin(), halfspaces.end(), [&](const RatVec& h) { return dot(h, w) >= 0; });
        if (ok) out.push_back(w);
      }
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_bounded(const Geometry& g, const std::vector<RatVec>& halfspaces) {
  if (g.kind == GeometryKind::Spherical) return true;
  if (!euclid_bounded(g, halfspaces)) return false;
  if (g.kind == GeometryKind::Hyperbolic)
    for (const auto& v : enumerate_vertices(g, halfspaces))
      if (!inside_model(g, v)) return false;
  return true;
}

bool is_strongly_convex(const ConvexPolytope& p) {
  RatMatrix m(p.halfspaces, p.geometry.ambient());
  return rank(m) == p.geometry.ambient();
}

namespace {

// Relative-interior witness of the face where exactly `active` are tight.
std::optional<RatVec> face_witness(const Geometry& g, const std::vector<RatVec>& hs,
                                   const std::vector<bool>& active) {
  LinearSystem s = chart_system(g);
  bool any_strict = false;
  std::vector<RatVec> eq;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (active[i]) {
      add_constraint(s, g, hs[i], 0);
      eq.push_back(hs[i]);
    } else {
      add_constraint(s, g, hs[i], 1);
      any_strict = true;
    }
  }
  if (!g.is_chart() && !any_strict) {
    LinearSubspace ker = LinearSubspace::kernel(g.ambient(), eq);
    if (ker.dim() == 0) return std::nullopt;
    return ker.basis().row(0);
  }
  auto w = feasible(s);
  if (!w) return std::nullopt;
  return chart_witness_to_homogeneous(g, *w);
}

}  // namespace

PolytopeBuild polytope_from_halfspaces(const Geometry& g, const std::vector<RatVec>& halfspaces) {
  PolytopeBuild out;
  for (const auto& h : halfspaces) {
    if (h.size() != g.ambient()) throw std::invalid_argument("polytope: functional of wrong length");
    if (is_zero(h)) throw std::invalid_argument("polytope: zero functional");
  }
  const std::size_t m = halfspaces.size();
  if (m > 16) {
    out.defect = PolytopeDefect::TooLarge;
    return out;
  }
  std::vector<bool> none(m, false);
  if (!face_witness(g, halfspaces, none)) {
    LinearSystem s = chart_system(g);
    for (const auto& h : halfspaces) add_constraint(s, g, h, 2);
    bool nonempty;
    if (g.is_chart()) {
      nonempty = feasible(s).has_value();
    } else {
      RatMatrix a(halfspaces, g.ambient());
      if (rank(a) < g.ambient()) {
        nonempty = true;
      } else {
        RatVec total(g.ambient(), Rational(0));
        for (const auto& h : halfspaces)
          for (std::size_t j = 0; j < total.size(); ++j) total[j] += h[j];
        add_constraint(s, g, total, 1);
        nonempty = feasible(s).has_value();
      }
    }
    out.defect = nonempty ? PolytopeDefect::LowerDimensional : PolytopeDefect::Empty;
    return out;
  }
  if (!is_bounded(g, halfspaces)) {
    out.defect = PolytopeDefect::Unbounded;
    return out;
  }
  ConvexPolytope p;
  p.geometry = g;
  p.halfspaces = halfspaces;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<bool> active(m);
    std::vector<RatVec> eq;
    Face f;
    for (std::size_t i = 0; i < m; ++i) {
      active[i] = (mask >> i) & 1;
      if (active[i]) {
        f.active.push_back(i);
        eq.push_back(halfspaces[i]);
      }
    }
    auto w = face_witness(g, halfspaces, active);
    if (!w) continue;
    f.span = LinearSubspace::kernel(g.ambient(), eq);
    f.dim = geo_dim(f.span);
    f.witness = *w;
    p.faces.push_back(std::move(f));
  }
  std::stable_sort(p.faces.begin(), p.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.active > b.active;
  });
  for (const auto& f : p.faces)
    if (f.dim == 0) p.vertices.push_back(f.witness);
  out.polytope = std::move(p);
  return out;
}

RatMatrix projection_onto_complement(const LinearSubspace& u) {
  const std::size_t N = u.ambient_dim();
  RatMatrix proj = RatMatrix::identity(N);
  if (u.dim() == 0) return proj;
  const RatMatrix& b = u.basis();
  RatMatrix gram = b * b.transpose();
  for (std::size_t j = 0; j < N; ++j) {
    RatVec e(N, Rational(0));
    e[j] = 1;
    RatVec rhs = b.apply(e);
    auto y = solve(gram, rhs);
    for (std::size_t i = 0; i < N; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < b.rows(); ++k) s += b(k, i) * (*y)[k];
      proj(i, j) -= s;
    }
  }
  return proj;
}

PolytopeBuild join(const Geometry& g, const LinearSubspace& u, const std::vector<RatVec>& p_halfspaces) {
  if (g.kind != GeometryKind::Spherical) throw std::invalid_argument("join: spherical geometry only");
  RatMatrix proj = projection_onto_complement(u);
  std::vector<RatVec> hs;
  for (const auto& a : p_halfspaces) {
    RatVec pa = proj.apply(a);
    if (is_zero(pa)) continue;
    if (std::find(hs.begin(), hs.end(), pa) == hs.end()) hs.push_back(pa);
  }
  return polytope_from_halfspaces(g, hs);
}

// ---------------------------------------------------------------- frames

RatVec Frame::to_ambient(const RatVec& y) const {
  RatVec x(ambient.ambient(), Rational(0));
  for (std::size_t k = 0; k < basis.rows(); ++k)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[k] * basis(k, j);
  return x;
}

std::optional<RatVec> Frame::to_local(const RatVec& x) const { return solve(basis.transpose(), x); }

RatVec Frame::pull_functional(const RatVec& a) const { return basis.apply(a); }

LinearSubspace Frame::push(const LinearSubspace& local_subspace) const {
  std::vector<RatVec> rows;
  for (const auto& r : local_subspace.basis().row_data()) rows.push_back(to_ambient(r));
  return LinearSubspace::span(ambient.ambient(), rows);
}

std::optional<LinearSubspace> Frame::pull(const LinearSubspace& ambient_subspace) const {
  std::vector<RatVec> rows;
  for (const auto& r : ambient_subspace.basis().row_data()) {
    auto y = to_local(r);
    if (!y) return std::nullopt;
    rows.push_back(*y);
  }
  return LinearSubspace::span(basis.rows(), rows);
}

Frame make_frame(const Geometry& g, const LinearSubspace& carrier) {
  if (!geo_nonempty(carrier, g)) throw std::invalid_argument("make_frame: empty flat");
  Frame f;
  f.ambient = g;
  f.carrier = carrier;
  f.basis = carrier.basis();
  f.local.kind = g.kind;
  f.local.n = static_cast<int>(carrier.dim()) - 1;
  if (g.kind == GeometryKind::Hyperbolic) f.local.form = f.basis * g.form * f.basis.transpose();
  return f;
}

}  // namespace tits
