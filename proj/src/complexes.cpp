#include "tits/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tits {

std::size_t ChainComplex::rank(int degree) const {
  if (degree < min_degree || degree > max_degree()) return 0;
  return labels[static_cast<std::size_t>(degree - min_degree)].size();
}

void ChainComplex::check() const {
  for (int k = min_degree + 1; k <= max_degree(); ++k) {
    if (d(k).rows() != rank(k - 1) || d(k).cols() != rank(k)) throw std::logic_error("chain complex: shape mismatch");
    if (k - 1 > min_degree && !(d(k - 1) * d(k)).is_zero())
      throw std::logic_error("chain complex: boundary squared is nonzero in degree " + std::to_string(k));
  }
}

std::size_t HomologySummary::betti(int degree) const {
  for (const auto& g : groups)
    if (g.degree == degree) return g.betti;
  return 0;
}

bool HomologySummary::operator==(const HomologySummary& o) const {
  auto nonzero = [](const HomologySummary& h) {
    std::vector<HomologyGroup> out;
    for (const auto& g : h.groups)
      if (g.betti > 0 || !g.torsion.empty()) out.push_back(g);
    return out;
  };
  return nonzero(*this) == nonzero(o);
}

std::string HomologySummary::describe() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& g : groups) {
    if (g.betti == 0 && g.torsion.empty()) continue;
    if (any) os << ", ";
    any = true;
    os << "H" << g.degree << "=";
    bool first = true;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      first = false;
    }
    for (const auto& t : g.torsion) {
      if (!first) os << "+";
      os << "Z/" << t.get_str();
      first = false;
    }
  }
  if (!any) os << "0";
  return os.str();
}

HomologySummary homology(const ChainComplex& c) {
  c.check();
  std::vector<SnfResult> snf;
  for (int k = c.min_degree; k <= c.max_degree(); ++k) snf.push_back(smith_normal_form(c.d(k)));
  HomologySummary h;
  for (int k = c.min_degree; k <= c.max_degree(); ++k) {
    std::size_t i = static_cast<std::size_t>(k - c.min_degree);
    HomologyGroup g;
    g.degree = k;
    std::size_t out_rank = k > c.min_degree ? snf[i].rank : 0;
    std::size_t in_rank = 0;
    if (k < c.max_degree()) {
      in_rank = snf[i + 1].rank;
      for (const auto& f : snf[i + 1].invariant_factors)
        if (f > 1) g.torsion.push_back(f);
    }
    g.betti = c.rank(k) - out_rank - in_rank;
    h.groups.push_back(g);
  }
  return h;
}

bool wedge_verdict(const HomologySummary& h, int n) {
  for (const auto& g : h.groups) {
    if (!g.torsion.empty()) return false;
    if (g.degree != n && g.betti != 0) return false;
  }
  return true;
}

std::size_t SimplicialModel::coordinate(const std::vector<std::size_t>& simplex) const {
  std::size_t deg = simplex.size() - 1 - static_cast<std::size_t>(complex.min_degree);
  if (simplex.size() + 0 < static_cast<std::size_t>(complex.min_degree + 1) || deg >= index.size())
    throw std::out_of_range("simplex not in model");
  auto it = index[deg].find(simplex);
  if (it == index[deg].end()) throw std::out_of_range("simplex not in model");
  return it->second;
}

bool SimplicialModel::has(const std::vector<std::size_t>& simplex) const {
  int deg = static_cast<int>(simplex.size()) - 1 - complex.min_degree;
  if (deg < 0 || static_cast<std::size_t>(deg) >= index.size()) return false;
  return index[static_cast<std::size_t>(deg)].count(simplex) > 0;
}

SimplicialModel simplicial_chains(const std::vector<std::vector<std::size_t>>& simplices, bool augmented,
                                  const std::vector<std::string>& vertex_names) {
  SimplicialModel m;
  std::size_t top = 0;
  for (const auto& s : simplices) top = std::max(top, s.size());
  int lo = augmented ? -1 : 0;
  if (!augmented) {
    lo = static_cast<int>(top);
    for (const auto& s : simplices) lo = std::min(lo, static_cast<int>(s.size()) - 1);
    if (simplices.empty()) lo = 0;
  }
  int hi = std::max(lo, static_cast<int>(top) - 1);
  m.complex.min_degree = lo;
  m.complex.labels.assign(static_cast<std::size_t>(hi - lo + 1), {});
  m.index.assign(static_cast<std::size_t>(hi - lo + 1), {});
  auto name = [&](const std::vector<std::size_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += vertex_names.empty() ? std::to_string(s[i]) : vertex_names[s[i]];
    }
    return out + ")";
  };
  std::vector<std::vector<std::size_t>> all = simplices;
  if (augmented) all.push_back({});
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& s : all) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] >= s[i]) throw std::invalid_argument("simplicial_chains: vertices must increase");
    std::size_t deg = static_cast<std::size_t>(static_cast<int>(s.size()) - 1 - lo);
    m.index[deg][s] = m.complex.labels[deg].size();
    m.complex.labels[deg].push_back(name(s));
  }
  for (int k = lo; k <= hi; ++k) {
    std::size_t i = static_cast<std::size_t>(k - lo);
    IntMatrix d(k > lo ? m.complex.labels[i - 1].size() : 0, m.complex.labels[i].size());
    if (k > lo)
      for (const auto& [s, col] : m.index[i])
        for (std::size_t j = 0; j < s.size(); ++j) {
          std::vector<std::size_t> f = s;
          f.erase(f.begin() + static_cast<long>(j));
          auto it = m.index[i - 1].find(f);
          if (it != m.index[i - 1].end()) d.add(it->second, col, j % 2 ? -1 : 1);
        }
    m.complex.boundary.push_back(std::move(d));
  }
  m.complex.check();
  return m;
}

std::vector<std::vector<std::size_t>> all_chains(std::size_t n, const std::vector<std::vector<bool>>& less) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    for (std::size_t j = cur.back() + 1; j < n; ++j)
      if (less[cur.back()][j]) {
        cur.push_back(j);
        self(self);
        cur.pop_back();
      }
  };
  for (std::size_t i = 0; i < n; ++i) {
    cur = {i};
    rec(rec);
  }
  return out;
}

std::vector<std::vector<bool>> member_order(const Collection& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      less[i][j] = l.members[j].dim() > l.members[i].dim() && l.members[j].contains(l.members[i]);
  return less;
}

namespace {

std::vector<std::string> member_names(const Collection& l) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < l.size(); ++i) out.push_back("L" + std::to_string(i));
  return out;
}

}  // namespace

SimplicialModel order_complex(const Collection& l, bool include_top) {
  auto less = member_order(l);
  std::vector<std::vector<std::size_t>> chains;
  for (auto& c : all_chains(l.size(), less)) {
    if (!include_top && l.members[c.back()].dim() == l.geometry.ambient()) continue;
    chains.push_back(std::move(c));
  }
  return simplicial_chains(chains, true, member_names(l));
}

SimplicialModel relative_st_complex(const Collection& l) {
  if (!l.contains_top()) throw std::invalid_argument("relative_st_complex: collection without the whole space");
  auto less = member_order(l);
  const std::size_t top = l.size() - 1;
  std::vector<std::vector<std::size_t>> chains;
  for (auto& c : all_chains(l.size(), less))
    if (c.back() == top) chains.push_back(std::move(c));
  // Flags are (U_0, ..., U_{p-1}, X) and sit in degree p.
  return simplicial_chains(chains, false, member_names(l));
}

SimplicialModel local_complex(const Collection& l, const ConvexPolytope& a) {
  if (!(a.geometry == l.geometry)) throw std::invalid_argument("local_complex: geometry mismatch");
  for (const auto& h : a.halfspaces)
    if (!l.contains(LinearSubspace::kernel(l.geometry.ambient(), {h})))
      throw std::invalid_argument("local_complex: A is not an L-polytope");
  return relative_st_complex(restrict_to(l, a));
}

SimplicialModel tpl_complex(const Collection& l, const std::vector<LinearSubspace>& points) {
  const std::size_t k = points.size();
  if (k > 14) throw std::invalid_argument("tpl_complex: too many points");
  std::vector<LinearSubspace> proper;
  for (const auto& m : l.members)
    if (m.dim() < l.geometry.ambient()) proper.push_back(m);
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    std::vector<std::size_t> t;
    std::vector<LinearSubspace> pts;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) {
        t.push_back(i);
        pts.push_back(points[i]);
      }
    if (t.size() < l.geometry.ambient()) continue;
    LinearSubspace s = span_points(l.geometry, pts);
    bool degenerate = std::any_of(proper.begin(), proper.end(), [&](const LinearSubspace& m) { return m.contains(s); });
    if (!degenerate) tuples.push_back(t);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
  auto m = simplicial_chains(tuples, false, names);
  return m;
}

bool SphereTriangulation::inside(const std::vector<std::size_t>& simplex, const LinearSubspace& v) const {
  return v.contains(arrangement.cells[cells[simplex.back()]].flat);
}

SimplicialModel SphereTriangulation::model() const { return simplicial_chains(simplices, false); }

SphereTriangulation sphere_triangulation(const Collection& l) {
  if (l.geometry.kind != GeometryKind::Spherical) throw std::invalid_argument("sphere_triangulation: spherical only");
  if (admissible(l) != Admissibility::Admissible) throw std::invalid_argument("NOT_ADMISSIBLE");
  SphereTriangulation t;
  t.arrangement = build_arrangement(l);
  for (std::size_t i = 0; i < t.arrangement.cells.size(); ++i)
    if (t.arrangement.cells[i].in_model) t.cells.push_back(i);
  const std::size_t n = t.cells.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) less[i][j] = t.arrangement.leq(t.cells[i], t.cells[j]);
  t.simplices = all_chains(n, less);
  return t;
}

PtBicomplex pt_bicomplex(const Collection& l) {
  PtBicomplex b;
  b.tri = sphere_triangulation(l);
  auto less = member_order(l);
  const std::size_t top = l.size() - 1;
  for (auto& c : all_chains(l.size(), less))
    if (c.back() == top) b.flags.push_back(std::move(c));
  std::sort(b.flags.begin(), b.flags.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::map<std::vector<std::size_t>, std::size_t> flag_index;
  for (std::size_t i = 0; i < b.flags.size(); ++i) flag_index[b.flags[i]] = i;
  b.top_flag = flag_index.at({top});
  // simplices of the triangulation inside each member
  std::vector<std::vector<std::vector<std::size_t>>> in_member(l.size());
  for (const auto& s : b.tri.simplices)
    for (std::size_t m = 0; m < l.size(); ++m)
      if (b.tri.inside(s, l.members[m])) in_member[m].push_back(s);
  std::size_t max_deg = 0;
  for (std::size_t f = 0; f < b.flags.size(); ++f)
    for (const auto& s : in_member[b.flags[f].front()]) {
      std::size_t deg = b.flags[f].size() - 1 + s.size() - 1;
      max_deg = std::max(max_deg, deg);
      if (b.basis.size() <= deg) {
        b.basis.resize(deg + 1);
        b.index.resize(deg + 1);
      }
      b.index[deg][{f, s}] = b.basis[deg].size();
      b.basis[deg].push_back({f, s});
    }
  b.complex.min_degree = 0;
  for (std::size_t deg = 0; deg < b.basis.size(); ++deg) {
    std::vector<std::string> labels;
    for (const auto& g : b.basis[deg]) {
      std::string s = "F";
      for (auto x : b.flags[g.flag]) s += "." + std::to_string(x);
      s += "|s";
      for (auto x : g.simplex) s += "." + std::to_string(x);
      labels.push_back(s);
    }
    b.complex.labels.push_back(labels);
    IntMatrix d(deg > 0 ? b.basis[deg - 1].size() : 0, b.basis[deg].size());
    if (deg > 0)
      for (std::size_t col = 0; col < b.basis[deg].size(); ++col) {
        const auto& g = b.basis[deg][col];
        const auto& flag = b.flags[g.flag];
        const std::size_t k = flag.size() - 1;
        // Horizontal part: deleting U_k = X leaves the quotiented sub-diagram.
        for (std::size_t i = 0; i < k; ++i) {
          auto f = flag;
          f.erase(f.begin() + static_cast<long>(i));
          std::size_t row = b.index[deg - 1].at({flag_index.at(f), g.simplex});
          d.add(row, col, i % 2 ? -1 : 1);
        }
        // Vertical part with the sign (-1)^k.
        if (g.simplex.size() > 1)
          for (std::size_t j = 0; j < g.simplex.size(); ++j) {
            auto s = g.simplex;
            s.erase(s.begin() + static_cast<long>(j));
            std::size_t row = b.index[deg - 1].at({g.flag, s});
            d.add(row, col, ((j + k) % 2) ? -1 : 1);
          }
      }
    b.complex.boundary.push_back(std::move(d));
  }
  b.complex.check();
  return b;
}

SimplicialModel pt_collapse_complex(const SphereTriangulation& tri) {
  const int n = tri.arrangement.geometry.n;
  std::vector<std::vector<std::size_t>> rel;
  for (const auto& s : tri.simplices)
    if (tri.arrangement.cells[tri.cells[s.back()]].dim == n) rel.push_back(s);
  return simplicial_chains(rel, false);
}

HomologySummary pt_collapse_crosscheck(const Collection& l) {
  return homology(pt_collapse_complex(sphere_triangulation(l)).complex);
}

}  // namespace tits
