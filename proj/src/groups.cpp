#include "tits/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tits {

namespace {

std::size_t zrank(const ZMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return smith_normal_form(IntMatrix::from_dense(m)).rank;
}

bool is_zero_matrix(const ZMatrix& m) {
  for (const auto& row : m.a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

// d_deg as a dense matrix, zero when either side is outside the complex.
ZMatrix dense_d(const ChainComplex& c, int deg) {
  const std::size_t rows = c.rank(deg - 1), cols = c.rank(deg);
  if (deg <= c.min_degree || deg > c.max_degree()) return ZMatrix(rows, cols);
  return c.d(deg).to_dense();
}

bool in_lattice(const ZMatrix& gens, const std::vector<Integer>& v) {
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return true;
  if (gens.cols == 0) return false;
  return lattice_contains(gens, v);
}

bool lattice_inside(const ZMatrix& small, const ZMatrix& big) {
  for (std::size_t j = 0; j < small.cols; ++j)
    if (!in_lattice(big, small.column(j))) return false;
  return true;
}

bool lattices_equal(const ZMatrix& a, const ZMatrix& b) { return lattice_inside(a, b) && lattice_inside(b, a); }

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

const std::map<std::vector<std::size_t>, std::size_t>& degree_index(const SimplicialModel& m, int deg) {
  static const std::map<std::vector<std::size_t>, std::size_t> empty;
  int k = deg - m.complex.min_degree;
  if (k < 0 || static_cast<std::size_t>(k) >= m.index.size()) return empty;
  return m.index[static_cast<std::size_t>(k)];
}

// Functionals of the simplicial cone spanned by n+1 independent vectors:
// row j is positive on vector j and vanishes on the others.
std::vector<RatVec> simplex_cone(const std::vector<RatVec>& vs) {
  const std::size_t d = vs.size();
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < d; ++j) {
    RatMatrix m(d, d);
    RatVec rhs(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) m(i, k) = vs[i][k];
    rhs[j] = 1;
    auto f = solve(m, rhs);
    if (!f) throw std::logic_error("simplex_cone: dependent vectors");
    out.push_back(*f);
  }
  return out;
}

std::string region_label(const Arrangement& a, std::size_t r) { return "R" + sign_key(a.cells[r].signs); }

}  // namespace

// ---------------------------------------------------------------- presentations

GroupPresentation make_presentation(std::vector<std::string> generators, ZMatrix relations) {
  GroupPresentation p;
  p.generators = std::move(generators);
  if (relations.rows != p.generators.size()) throw std::invalid_argument("make_presentation: size mismatch");
  p.relations = std::move(relations);
  std::size_t r = 0;
  if (p.relations.rows && p.relations.cols) {
    SnfResult s = smith_normal_form(IntMatrix::from_dense(p.relations));
    r = s.rank;
    for (const auto& f : s.invariant_factors)
      if (f > 1) p.torsion.push_back(f);
  }
  p.free_rank = p.generators.size() - r;
  return p;
}

GroupHom certify_into_free(const ZMatrix& m, const ZMatrix& r) {
  GroupHom h;
  h.matrix = m;
  if (r.rows != m.cols) throw std::invalid_argument("certify_into_free: size mismatch");
  h.well_defined = r.cols == 0 || is_zero_matrix(m * r);
  h.surjective = m.rows == 0 || (zrank(m) == m.rows && is_saturated(m));
  if (m.cols == 0) {
    h.injective = true;
  } else {
    ZMatrix k = m.rows == 0 ? ZMatrix::identity(m.cols) : kernel_basis(m);
    h.injective = lattice_inside(k, r);
  }
  return h;
}

ZMatrix kernel_into_presented(const ZMatrix& m, const ZMatrix& r) {
  if (r.rows != m.rows) throw std::invalid_argument("kernel_into_presented: size mismatch");
  ZMatrix both = m.hstack(r);
  ZMatrix k = both.rows == 0 ? ZMatrix::identity(both.cols) : kernel_basis(both);
  ZMatrix out(m.cols, k.cols);
  for (std::size_t j = 0; j < k.cols; ++j)
    for (std::size_t i = 0; i < m.cols; ++i) out(i, j) = k(i, j);
  return out;
}

GroupHom certify_into_presented(const ZMatrix& m, const ZMatrix& r) {
  GroupHom h;
  h.matrix = m;
  h.well_defined = true;
  ZMatrix both = m.hstack(r);
  h.surjective = m.rows == 0 || (zrank(both) == m.rows && is_saturated(both));
  h.injective = is_zero_matrix(kernel_into_presented(m, r));
  return h;
}

TopHomology top_homology(const ChainComplex& c, int n) {
  if (c.rank(n + 1) != 0 && !c.d(n + 1).is_zero())
    throw std::invalid_argument("top_homology: the complex continues above the requested degree");
  TopHomology h;
  h.degree = n;
  ZMatrix d = dense_d(c, n);
  h.basis = d.rows == 0 ? ZMatrix::identity(d.cols) : kernel_basis(d);
  return h;
}

bool is_cycle(const ChainComplex& c, int degree, const Chain& z) {
  if (z.size() != c.rank(degree)) return false;
  ZMatrix d = dense_d(c, degree);
  for (const auto& x : d.apply(z))
    if (x != 0) return false;
  return true;
}

std::vector<Integer> homology_coordinates(const TopHomology& h, const Chain& z) {
  if (z.size() != h.basis.rows) throw std::invalid_argument("homology_coordinates: size mismatch");
  if (h.basis.cols == 0) {
    if (std::any_of(z.begin(), z.end(), [](const Integer& x) { return x != 0; }))
      throw std::invalid_argument("homology_coordinates: not a cycle");
    return {};
  }
  auto y = solve_integer(h.basis, z);
  if (!y) throw std::invalid_argument("homology_coordinates: not a cycle");
  return *y;
}

ZMatrix columns_to_matrix(const std::vector<std::vector<Integer>>& columns, std::size_t rows) {
  return ZMatrix::from_columns(columns, rows);
}

// ---------------------------------------------------------------- groups

GroupPresentation pt_group(const Arrangement& a, const std::vector<std::size_t>& basis) {
  std::vector<std::string> names;
  for (auto r : basis) names.push_back(region_label(a, r));
  return make_presentation(std::move(names), ZMatrix(basis.size(), 0));
}

LsGroup ls_group(const Collection& l) {
  if (!generated_by_points(l)) throw std::invalid_argument("NOT_GENERATED_BY_POINTS");
  LsGroup ls;
  ls.points = l.points();
  ls.tpl = tpl_complex(l, ls.points);
  const int n = l.geometry.n;
  const auto& idx = degree_index(ls.tpl, n);
  ls.tuples.assign(idx.size(), {});
  for (const auto& [t, i] : idx) ls.tuples[i] = t;
  std::vector<std::string> names;
  for (const auto& t : ls.tuples) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::string("p") + std::to_string(t[i]);
    names.push_back(s + "]");
  }
  ls.group = make_presentation(std::move(names), dense_d(ls.tpl.complex, n + 1));
  return ls;
}

std::vector<Integer> ls_element(const LsGroup& ls, const Geometry& g, const std::vector<RatVec>& reps) {
  std::vector<Integer> out(ls.tuples.size(), 0);
  if (reps.size() != g.ambient()) throw std::invalid_argument("ls_element: need n+1 points");
  std::vector<std::size_t> ids;
  for (const auto& r : reps) {
    auto s = LinearSubspace::span(g.ambient(), {r});
    auto it = std::find(ls.points.begin(), ls.points.end(), s);
    if (it == ls.points.end()) throw std::invalid_argument("ls_element: point outside the collection");
    ids.push_back(static_cast<std::size_t>(it - ls.points.begin()));
  }
  std::vector<std::size_t> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  for (std::size_t i = 0; i < ls.tuples.size(); ++i)
    if (ls.tuples[i] == sorted) {
      out[i] = permutation_sign(ids);
      return out;
    }
  return out;  // lies in a proper member
}

// ---------------------------------------------------------------- apartments

Chain apartment_tuple(const Collection& l, const SimplicialModel& st, const std::vector<RatVec>& reps) {
  const int n = l.geometry.n;
  const std::size_t amb = l.geometry.ambient();
  if (reps.size() != amb) throw std::invalid_argument("apartment_tuple: need n+1 points");
  Chain out(st.complex.rank(n), 0);
  std::vector<std::size_t> perm(amb);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> flag;
    std::vector<RatVec> prefix;
    bool strict = true;
    for (int i = 0; i < n && strict; ++i) {
      prefix.push_back(reps[perm[static_cast<std::size_t>(i)]]);
      auto u = LinearSubspace::span(amb, prefix);
      if (u.dim() != static_cast<std::size_t>(i) + 1) {
        strict = false;
        break;
      }
      auto k = l.index_of(u);
      if (!k) throw std::invalid_argument("apartment_tuple: span outside the collection");
      flag.push_back(*k);
    }
    if (!strict) continue;
    flag.push_back(l.size() - 1);
    out[st.coordinate(flag)] += permutation_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Chain apartment_polytope(const Collection& l, const SimplicialModel& st, const ConvexPolytope& p) {
  const int n = l.geometry.n;
  if (!(p.geometry == l.geometry)) throw std::invalid_argument("apartment_polytope: geometry mismatch");
  if (p.top().dim != n) throw std::invalid_argument("apartment_polytope: polytope is not full-dimensional");
  Chain out(st.complex.rank(n), 0);
  std::vector<std::size_t> chosen;
  const std::size_t top = p.faces.size() - 1;
  auto emit = [&]() {
    std::vector<RatVec> w;
    std::vector<std::size_t> flag;
    for (auto f : chosen) {
      w.push_back(p.faces[f].witness);
      auto k = l.index_of(p.faces[f].span);
      if (!k) throw std::invalid_argument("apartment_polytope: face span outside the collection");
      flag.push_back(*k);
    }
    w.push_back(p.top().witness);
    flag.push_back(l.size() - 1);
    out[st.coordinate(flag)] += orientation_sign(l.geometry, w);
  };
  auto rec = [&](auto&& self, int dim) -> void {
    if (dim == n) {
      emit();
      return;
    }
    for (std::size_t f = 0; f < top; ++f) {
      if (p.faces[f].dim != dim) continue;
      if (!chosen.empty() && !p.face_leq(chosen.back(), f)) continue;
      chosen.push_back(f);
      self(self, dim + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Chain collapse_fundamental_chain(const SphereTriangulation& tri, const SimplicialModel& collapse,
                                 const std::vector<std::size_t>& regions) {
  const int n = tri.arrangement.geometry.n;
  Chain out(collapse.complex.rank(n), 0);
  std::set<std::size_t> want(regions.begin(), regions.end());
  for (const auto& [s, i] : degree_index(collapse, n)) {
    if (!want.count(tri.cells[s.back()])) continue;
    std::vector<RatVec> w;
    for (auto v : s) w.push_back(tri.arrangement.cells[tri.cells[v]].witness);
    out[i] = orientation_sign_linear(w);
  }
  return out;
}

ZMatrix collapse_projection(const PtBicomplex& b, const SimplicialModel& collapse) {
  const int n = b.tri.arrangement.geometry.n;
  const std::size_t deg = static_cast<std::size_t>(n);
  ZMatrix m(collapse.complex.rank(n), deg < b.basis.size() ? b.basis[deg].size() : 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    const auto& g = b.basis[deg][j];
    if (g.flag == b.top_flag && collapse.has(g.simplex)) m(collapse.coordinate(g.simplex), j) = 1;
  }
  return m;
}

// ---------------------------------------------------------------- apartment matrices

std::string flavor_name(ApartmentFlavor f) {
  switch (f) {
    case ApartmentFlavor::StPoints: return "st-points";
    case ApartmentFlavor::StPolytopes: return "st-polytopes";
    case ApartmentFlavor::Local: return "local";
    case ApartmentFlavor::PtSpherical: return "pt-spherical";
  }
  return "?";
}

bool ApartmentReport::pass() const {
  return hypotheses == "MET" && all_cycles && map.iso() && collapse_agrees && wedge_verdict(homology, degree) &&
         generators == homology_rank;
}

namespace {

// Columns: coordinates of each chain in the top homology basis.
bool chains_to_columns(const ChainComplex& c, const TopHomology& h, const std::vector<Chain>& chains,
                       std::vector<std::vector<Integer>>& cols) {
  bool ok = true;
  for (const auto& z : chains) {
    if (!is_cycle(c, h.degree, z)) {
      ok = false;
      cols.push_back(std::vector<Integer>(h.rank(), 0));
      continue;
    }
    cols.push_back(homology_coordinates(h, z));
  }
  return ok;
}

}  // namespace

ApartmentReport apartment_matrix(const Collection& l, ApartmentFlavor flavor, const std::optional<ConvexPolytope>& a) {
  ApartmentReport rep;
  rep.flavor = flavor;
  rep.degree = l.geometry.n;
  const Geometry& g = l.geometry;
  const int n = g.n;
  switch (flavor) {
    case ApartmentFlavor::StPoints: {
      if (!generated_by_points(l)) {
        rep.hypotheses = "NOT_GENERATED_BY_POINTS";
        return rep;
      }
      rep.hypotheses = "MET";
      LsGroup ls = ls_group(l);
      SimplicialModel st = relative_st_complex(l);
      rep.homology = homology(st.complex);
      TopHomology h = top_homology(st.complex, n);
      rep.homology_rank = h.rank();
      std::vector<Chain> chains;
      for (const auto& t : ls.tuples) {
        std::vector<RatVec> reps;
        for (auto i : t) reps.push_back(ls.points[i].basis().row(0));
        chains.push_back(apartment_tuple(l, st, reps));
      }
      std::vector<std::vector<Integer>> cols;
      rep.all_cycles = chains_to_columns(st.complex, h, chains, cols);
      rep.map = certify_into_free(columns_to_matrix(cols, h.rank()), ls.group.relations);
      rep.generators = ls.group.free_rank;
      return rep;
    }
    case ApartmentFlavor::StPolytopes:
    case ApartmentFlavor::Local: {
      const bool local = flavor == ApartmentFlavor::Local;
      if (local && !a) {
        rep.hypotheses = "POLYTOPE_A_REQUIRED";
        return rep;
      }
      if (!local) {
        if (g.kind == GeometryKind::Spherical) {
          rep.hypotheses = "SPHERICAL_USES_PT";
          return rep;
        }
        Admissibility adm = admissible(l);
        if (adm != Admissibility::Admissible) {
          rep.hypotheses = admissibility_name(adm);
          return rep;
        }
      } else {
        if (g.kind == GeometryKind::Spherical) {
          rep.hypotheses = "SPHERICAL_USES_PT";
          return rep;
        }
        for (const auto& h : a->halfspaces)
          if (!l.contains(LinearSubspace::kernel(g.ambient(), {h}))) {
            rep.hypotheses = "A_NOT_AN_L_POLYTOPE";
            return rep;
          }
        if (!is_bounded(g, a->halfspaces)) {
          rep.hypotheses = "A_UNBOUNDED";
          return rep;
        }
      }
      rep.hypotheses = "MET";
      Collection sub = local ? restrict_to(l, *a) : l;
      SimplicialModel st = relative_st_complex(sub);
      rep.homology = homology(st.complex);
      TopHomology h = top_homology(st.complex, n);
      rep.homology_rank = h.rank();
      Arrangement arr = build_arrangement(l);
      std::vector<std::size_t> basis = region_basis(arr);
      if (local) basis = regions_inside(arr, basis, a->halfspaces);
      std::vector<Chain> chains;
      for (auto r : basis) chains.push_back(apartment_polytope(sub, st, region_polytope(arr, r)));
      std::vector<std::vector<Integer>> cols;
      rep.all_cycles = chains_to_columns(st.complex, h, chains, cols);
      rep.map = certify_into_free(columns_to_matrix(cols, h.rank()), ZMatrix(basis.size(), 0));
      rep.generators = basis.size();
      return rep;
    }
    case ApartmentFlavor::PtSpherical: {
      if (g.kind != GeometryKind::Spherical) {
        rep.hypotheses = "NOT_SPHERICAL";
        return rep;
      }
      if (admissible(l) != Admissibility::Admissible) {
        rep.hypotheses = "NOT_ADMISSIBLE";
        return rep;
      }
      rep.hypotheses = "MET";
      PtBicomplex b = pt_bicomplex(l);
      SimplicialModel coll = pt_collapse_complex(b.tri);
      rep.homology = homology(b.complex);
      TopHomology hb = top_homology(b.complex, n);
      TopHomology hc = top_homology(coll.complex, n);
      rep.homology_rank = hb.rank();
      ZMatrix proj = collapse_projection(b, coll);
      ZMatrix pk = proj * hb.basis;
      // The collapse map in top degree, written in both kernel bases.
      std::vector<std::vector<Integer>> ccols;
      for (std::size_t j = 0; j < pk.cols; ++j) ccols.push_back(homology_coordinates(hc, pk.column(j)));
      rep.collapse_agrees = hb.rank() == hc.rank() &&
                            certify_into_free(columns_to_matrix(ccols, hc.rank()), ZMatrix(hb.rank(), 0)).iso();
      std::vector<std::size_t> basis = region_basis(b.tri.arrangement);
      std::vector<std::vector<Integer>> cols;
      rep.all_cycles = true;
      for (auto r : basis) {
        Chain c = collapse_fundamental_chain(b.tri, coll, {r});
        if (!is_cycle(coll.complex, n, c)) rep.all_cycles = false;
        auto y = pk.cols ? solve_integer(pk, c) : std::nullopt;
        if (!y) {
          rep.all_cycles = false;
          cols.push_back(std::vector<Integer>(hb.rank(), 0));
          continue;
        }
        // The honest bicomplex cycle over the region.
        if (!is_cycle(b.complex, n, hb.basis.apply(*y))) rep.all_cycles = false;
        cols.push_back(*y);
      }
      rep.map = certify_into_free(columns_to_matrix(cols, hb.rank()), ZMatrix(basis.size(), 0));
      rep.generators = basis.size();
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- Pt -> Ls

bool PtLsReport::pass() const {
  if (hypotheses != "MET") return false;
  if (!spherical) return map.iso();
  return map.surjective && kernel_matches_joins;
}

std::vector<Integer> pt_to_ls(const Collection& l, const LsGroup& ls, const ConvexPolytope& p) {
  const Geometry& g = l.geometry;
  const std::size_t amb = g.ambient();
  const std::size_t k = p.vertices.size();
  // Lifted vertices lie on an affine hyperplane, so affine and linear
  // dependence agree.
  std::vector<RatVec> lifted;
  if (g.is_chart()) {
    for (const auto& v : p.vertices) {
      RatVec x = v;
      for (auto& c : x) c /= v[0];
      lifted.push_back(x);
    }
  } else {
    LinearSystem sys;
    sys.vars = amb;
    for (const auto& v : p.vertices) {
      RatVec row{Rational(-1)};
      row.insert(row.end(), v.begin(), v.end());
      sys.nonstrict.push_back(row);
    }
    auto c = feasible(sys);
    if (!c) throw std::invalid_argument("pt_to_ls: polytope is not strongly convex");
    for (const auto& v : p.vertices) {
      Rational s = dot(*c, v);
      RatVec x = v;
      for (auto& e : x) e /= s;
      lifted.push_back(x);
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lifted[a] < lifted[b]; });

  std::vector<std::vector<std::size_t>> simplices{{order[0]}};
  std::vector<RatVec> placed{lifted[order[0]]};
  std::size_t r = 1;
  for (std::size_t step = 1; step < k; ++step) {
    const std::size_t v = order[step];
    std::vector<RatVec> with = placed;
    with.push_back(lifted[v]);
    LinearSubspace span = LinearSubspace::span(amb, with);
    if (span.dim() > r) {
      for (auto& s : simplices) s.push_back(v);
      r = span.dim();
    } else {
      // Coordinates inside the current span, in its canonical basis.
      RatMatrix bt = span.basis().transpose();
      auto coords = [&](const RatVec& x) {
        auto c = solve(bt, x);
        if (!c) throw std::logic_error("pt_to_ls: vertex outside the current span");
        return *c;
      };
      std::map<std::vector<std::size_t>, std::vector<std::size_t>> opposite;
      for (const auto& s : simplices)
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<std::size_t> f = s;
          f.erase(f.begin() + static_cast<long>(i));
          opposite[f].push_back(s[i]);
        }
      std::vector<std::vector<std::size_t>> added;
      for (const auto& [f, opp] : opposite) {
        if (opp.size() != 1) continue;
        std::vector<RatVec> base;
        for (auto x : f) base.push_back(coords(lifted[x]));
        auto side = [&](const RatVec& x) {
          auto m = base;
          m.push_back(coords(x));
          return orientation_sign_linear(m);
        };
        int sv = side(lifted[v]), so = side(lifted[opp[0]]);
        if (sv != 0 && sv == -so) {
          auto s = f;
          s.push_back(v);
          added.push_back(s);
        }
      }
      simplices.insert(simplices.end(), added.begin(), added.end());
    }
    placed.push_back(lifted[v]);
  }
  if (r != amb) throw std::invalid_argument("pt_to_ls: polytope is not full-dimensional");

  std::map<std::vector<std::size_t>, std::size_t> gen;
  for (std::size_t i = 0; i < ls.tuples.size(); ++i) gen[ls.tuples[i]] = i;
  std::vector<Integer> out(ls.tuples.size(), 0);
  for (const auto& s : simplices) {
    std::vector<std::pair<std::size_t, RatVec>> tagged;
    for (auto x : s) {
      auto sp = LinearSubspace::span(amb, {p.vertices[x]});
      auto it = std::find(ls.points.begin(), ls.points.end(), sp);
      if (it == ls.points.end()) throw std::invalid_argument("pt_to_ls: vertex outside the collection");
      tagged.emplace_back(static_cast<std::size_t>(it - ls.points.begin()), p.vertices[x]);
    }
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::size_t> t;
    std::vector<RatVec> vs;
    for (auto& [i, x] : tagged) {
      t.push_back(i);
      vs.push_back(x);
    }
    auto it = gen.find(t);
    if (it == gen.end()) throw std::logic_error("pt_to_ls: simplex is not a generator");
    out[it->second] += orientation_sign(g, vs);
  }
  return out;
}

PtLsReport verify_pt_ls(const Collection& l) {
  PtLsReport rep;
  const Geometry& g = l.geometry;
  rep.spherical = g.kind == GeometryKind::Spherical;
  if (!generated_by_both(l)) {
    rep.hypotheses = "NOT_GENERATED_BY_BOTH";
    return rep;
  }
  if (rep.spherical && admissible(l) != Admissibility::Admissible) {
    rep.hypotheses = "NOT_ADMISSIBLE";
    return rep;
  }
  rep.hypotheses = "MET";
  LsGroup ls = ls_group(l);
  Arrangement arr = build_arrangement(l);
  std::vector<std::size_t> basis = region_basis(arr);
  std::vector<std::vector<Integer>> cols;
  for (auto r : basis) cols.push_back(pt_to_ls(l, ls, region_polytope(arr, r)));
  ZMatrix f = columns_to_matrix(cols, ls.tuples.size());
  rep.pt_rank = basis.size();
  rep.ls_rank = ls.group.free_rank;
  rep.map = certify_into_presented(f, ls.group.relations);
  ZMatrix ker = kernel_into_presented(f, ls.group.relations);
  rep.kernel_rank = zrank(ker);
  if (!rep.spherical) return rep;

  // Joins of an antipodal pair with a simplex on the remaining points.
  const int n = g.n;
  const std::size_t k = ls.points.size();
  std::vector<std::vector<Integer>> joins;
  std::vector<bool> pick(k);
  for (std::size_t x = 0; x < k; ++x) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < k; ++i)
      if (i != x) others.push_back(i);
    if (others.size() < static_cast<std::size_t>(n)) continue;
    std::vector<bool> mask(others.size(), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
      std::vector<RatVec> ps;
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask[i]) ps.push_back(ls.points[others[i]].basis().row(0));
      for (std::size_t signs = 0; signs < (std::size_t(1) << n); ++signs) {
        std::vector<RatVec> vs{ls.points[x].basis().row(0)};
        for (std::size_t i = 0; i < ps.size(); ++i) {
          RatVec v = ps[i];
          if ((signs >> i) & 1)
            for (auto& e : v) e = -e;
          vs.push_back(v);
        }
        RatMatrix m(vs, g.ambient());
        if (determinant(m) == 0) continue;
        std::vector<Integer> sum(basis.size(), 0);
        bool ok = true;
        for (int side : {1, -1}) {
          auto ws = vs;
          for (auto& e : ws[0]) e *= side;
          auto pb = polytope_from_halfspaces(g, simplex_cone(ws));
          if (!pb.polytope) {
            ok = false;
            break;
          }
          auto vec = polytope_to_vector(arr, basis, {*pb.polytope});
          if (!vec) {
            ok = false;
            break;
          }
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*vec)[i];
        }
        if (ok) joins.push_back(sum);
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  ZMatrix j = columns_to_matrix(joins, basis.size());
  rep.kernel_matches_joins = lattices_equal(ker, j);
  return rep;
}

// ---------------------------------------------------------------- exact sequence

bool ExactSequenceReport::pass() const {
  return hypotheses == "MET" && composite_zero && inclusion_injective && facet_surjective && kernel_is_image &&
         rank_additive && lifts_ok && dashed_map_agrees;
}

namespace {

using FlagKey = std::vector<LinearSubspace>;

void add_term(std::map<FlagKey, Integer>& m, const FlagKey& k, const Integer& c) {
  Integer& x = m[k];
  x += c;
  if (x == 0) m.erase(k);
}

}  // namespace

ExactSequenceReport exact_sequence_check(const Collection& l, const RatVec& u, const std::optional<ConvexPolytope>& a) {
  ExactSequenceReport rep;
  const Geometry& g = l.geometry;
  const int n = g.n;
  rep.local = a.has_value();
  if (is_zero(u) || u.size() != g.ambient()) {
    rep.hypotheses = "INVALID_HYPERPLANE";
    return rep;
  }
  LinearSubspace uu = LinearSubspace::kernel(g.ambient(), {u});
  if (!geo_nonempty(uu, g)) {
    rep.hypotheses = "HYPERPLANE_MISSES_GEOMETRY";
    return rep;
  }
  if (l.contains(uu)) {
    rep.hypotheses = "U_IN_L";
    return rep;
  }
  if (a) {
    for (const auto& h : a->halfspaces)
      if (!l.contains(LinearSubspace::kernel(g.ambient(), {h}))) {
        rep.hypotheses = "A_NOT_AN_L_POLYTOPE";
        return rep;
      }
  } else if (g.kind == GeometryKind::Hyperbolic) {
    rep.hypotheses = "POLYTOPE_A_REQUIRED";
    return rep;
  } else if (admissible(l) != Admissibility::Admissible) {
    rep.hypotheses = "NOT_ADMISSIBLE";
    return rep;
  }
  rep.hypotheses = "MET";

  Variants v = variants(l, uu);
  Arrangement al = build_arrangement(l);
  Arrangement ac = build_arrangement(v.cup);
  Frame f = make_frame(g, uu);
  Collection lc = localize(v.cap, f);
  Arrangement loc = build_arrangement(lc);
  std::vector<std::size_t> bl = region_basis(al), bc = region_basis(ac), bu = region_basis(loc);
  std::vector<RatVec> a_local;
  if (a) {
    bl = regions_inside(al, bl, a->halfspaces);
    bc = regions_inside(ac, bc, a->halfspaces);
    for (const auto& h : a->halfspaces) a_local.push_back(f.pull_functional(h));
    bu = regions_inside(loc, bu, a_local);
  }
  rep.rank_l = bl.size();
  rep.rank_cup = bc.size();
  rep.rank_cap = bu.size();
  auto ui = ac.hyperplane_index(u);
  if (!ui) throw std::logic_error("exact_sequence_check: U missing from the refined arrangement");

  ZMatrix inc(bc.size(), bl.size());
  for (std::size_t j = 0; j < bl.size(); ++j)
    for (std::size_t i = 0; i < bc.size(); ++i)
      if (al.signs_of(ac.cells[bc[i]].witness) == al.cells[bl[j]].signs) inc(i, j) = 1;
  std::map<std::size_t, std::size_t> bu_pos;
  for (std::size_t i = 0; i < bu.size(); ++i) bu_pos[bu[i]] = i;
  ZMatrix fac(bu.size(), bc.size());
  for (std::size_t j = 0; j < bc.size(); ++j) {
    auto facet = region_facet(ac, bc[j], *ui);
    if (!facet) continue;
    auto y = f.to_local(ac.cells[*facet].witness);
    if (!y) throw std::logic_error("exact_sequence_check: facet off U");
    auto cell = loc.locate(*y);
    if (!cell || !bu_pos.count(*cell)) continue;
    fac(bu_pos[*cell], j) = ac.cells[bc[j]].signs[*ui];
  }

  rep.composite_zero = is_zero_matrix(fac * inc);
  rep.inclusion_injective = zrank(inc) == bl.size();
  rep.facet_surjective = bu.empty() || (zrank(fac) == bu.size() && is_saturated(fac));
  ZMatrix k = bc.empty() ? ZMatrix(0, 0) : (bu.empty() ? ZMatrix::identity(bc.size()) : kernel_basis(fac));
  rep.kernel_is_image = lattices_equal(k, inc);
  rep.rank_additive = rep.rank_cup == rep.rank_l + rep.rank_cap;

  // Cofacet lifts and the boundary of their apartments.
  std::optional<ConvexPolytope> a_loc_poly;
  if (a && !bu.empty()) a_loc_poly = polytope_from_halfspaces(f.local, a_local).polytope;
  Collection cup_sub = a ? restrict_to(v.cup, *a) : v.cup;
  SimplicialModel st_cup = relative_st_complex(cup_sub);
  Collection loc_sub = a_loc_poly ? restrict_to(lc, *a_loc_poly) : lc;
  SimplicialModel st_loc = relative_st_complex(loc_sub);
  auto u_in_sub = cup_sub.index_of(uu);

  rep.lifts_ok = true;
  rep.dashed_map_agrees = true;
  int global = 0;
  for (std::size_t i = 0; i < bu.size(); ++i) {
    auto cell = ac.locate(f.to_ambient(loc.cells[bu[i]].witness));
    std::optional<Lift> lift;
    if (cell && ac.cells[*cell].dim == n - 1) lift = cofacet_lift(ac, bc, *cell, *ui, +1);
    if (!lift) {
      rep.lifts_ok = rep.dashed_map_agrees = false;
      continue;
    }
    auto q = std::find(bc.begin(), bc.end(), lift->region) - bc.begin();
    for (std::size_t r = 0; r < bu.size(); ++r)
      if (fac(r, static_cast<std::size_t>(q)) * lift->sign != (r == i ? 1 : 0)) rep.lifts_ok = false;

    if (!u_in_sub) {
      rep.dashed_map_agrees = false;
      continue;
    }
    Chain up = apartment_polytope(cup_sub, st_cup, region_polytope(ac, lift->region));
    std::map<FlagKey, Integer> lhs, rhs;
    for (const auto& [s, c] : degree_index(st_cup, n)) {
      if (up[c] == 0 || n < 1 || s[static_cast<std::size_t>(n - 1)] != *u_in_sub) continue;
      FlagKey key;
      for (int t = 0; t + 1 < n; ++t) key.push_back(cup_sub.members[s[static_cast<std::size_t>(t)]]);
      add_term(lhs, key, up[c] * lift->sign);
    }
    Chain down = apartment_polytope(loc_sub, st_loc, region_polytope(loc, bu[i]));
    for (const auto& [s, c] : degree_index(st_loc, n - 1)) {
      if (down[c] == 0) continue;
      FlagKey key;
      for (std::size_t t = 0; t + 1 < s.size(); ++t) key.push_back(f.push(loc_sub.members[s[t]]));
      add_term(rhs, key, down[c]);
    }
    if (lhs.empty() || lhs.size() != rhs.size()) {
      rep.dashed_map_agrees = false;
      continue;
    }
    int eps = lhs.begin()->second == rhs.begin()->second ? 1 : -1;
    if (global == 0) global = eps;
    if (eps != global) rep.dashed_map_agrees = false;
    for (const auto& [key, c] : lhs) {
      auto it = rhs.find(key);
      if (it == rhs.end() || it->second * global != c) rep.dashed_map_agrees = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- duality

bool DualityReport::pass() const {
  return hypotheses == "MET" && bijection_ok && apartment_iso && ls_dual_rank == st_rank;
}

DualityReport duality_check(const Collection& l) {
  DualityReport rep;
  const Geometry& g = l.geometry;
  if (g.kind != GeometryKind::Spherical) {
    rep.hypotheses = "NOT_SPHERICAL";
    return rep;
  }
  if (admissible(l) != Admissibility::Admissible) {
    rep.hypotheses = "NOT_ADMISSIBLE";
    return rep;
  }
  if (!generated_by_hyperplanes(l)) {
    rep.hypotheses = "NOT_GENERATED_BY_HYPERPLANES";
    return rep;
  }
  rep.hypotheses = "MET";
  Collection d = dualize(l);
  auto proper = [&](const Collection& c) {
    std::vector<LinearSubspace> out;
    for (const auto& m : c.members)
      if (m.dim() >= 1 && m.dim() <= static_cast<std::size_t>(g.n)) out.push_back(m);
    return out;
  };
  auto pl = proper(l), pd = proper(d);
  rep.bijection_ok = pl.size() == pd.size();
  std::set<LinearSubspace> image;
  std::vector<LinearSubspace> perp;
  for (const auto& m : pl) {
    perp.push_back(m.orthogonal_complement());
    if (!d.contains(perp.back())) rep.bijection_ok = false;
    image.insert(perp.back());
  }
  if (image.size() != pl.size()) rep.bijection_ok = false;
  for (std::size_t i = 0; i < pl.size() && rep.bijection_ok; ++i)
    for (std::size_t j = 0; j < pl.size(); ++j)
      if (pl[j].contains(pl[i]) != perp[i].contains(perp[j])) {
        rep.bijection_ok = false;
        break;
      }
  rep.st_rank = homology(relative_st_complex(l).complex).betti(g.n);
  ApartmentReport ar = apartment_matrix(d, ApartmentFlavor::StPoints);
  rep.apartment_iso = ar.hypotheses == "MET" && ar.all_cycles && ar.map.iso();
  rep.ls_dual_rank = ar.generators;
  return rep;
}

// ---------------------------------------------------------------- suspension

bool SuspensionReport::pass() const {
  return hypotheses == "MET" && region_bijection && predicted_rank == pt_rank && reduced_pt_rank == pt_rank &&
         reduced_wedge;
}

SuspensionReport suspension_check(const Collection& l) {
  SuspensionReport rep;
  const Geometry& g = l.geometry;
  if (g.kind != GeometryKind::Spherical) {
    rep.hypotheses = "NOT_SPHERICAL";
    return rep;
  }
  if (admissible(l) == Admissibility::Admissible) {
    rep.hypotheses = "NOT_APPLICABLE";
    return rep;
  }
  if (l.hyperplanes().empty()) {
    rep.hypotheses = "NO_HYPERPLANES";
    return rep;
  }
  rep.hypotheses = "MET";
  LinearSubspace u = common_intersection(l);
  rep.u_dim = u.dim();
  Frame f = make_frame(g, u.orthogonal_complement());
  std::vector<RatVec> fs;
  if (f.local.n > 0)
    for (const auto& h : l.hyperplane_functionals()) fs.push_back(f.pull_functional(h));
  Collection red = closure_by_functionals(f.local, fs);
  Arrangement al = build_arrangement(l);
  Arrangement ar = build_arrangement(red);
  auto regions = al.cells_of_dim(g.n);
  auto reduced = ar.cells_of_dim(f.local.n);
  rep.pt_rank = regions.size();
  rep.reduced_pt_rank = reduced.size();
  RatMatrix proj = projection_onto_complement(u);
  std::set<std::size_t> hit;
  rep.region_bijection = true;
  for (auto r : regions) {
    auto y = f.to_local(proj.apply(al.cells[r].witness));
    auto c = y ? ar.locate(*y) : std::nullopt;
    if (!c || ar.cells[*c].dim != f.local.n || !hit.insert(*c).second) rep.region_bijection = false;
  }
  if (hit.size() != reduced.size()) rep.region_bijection = false;
  HomologySummary h = homology(pt_bicomplex(red).complex);
  rep.predicted_rank = h.betti(f.local.n);
  rep.reduced_wedge = wedge_verdict(h, f.local.n);
  return rep;
}

}  // namespace tits
