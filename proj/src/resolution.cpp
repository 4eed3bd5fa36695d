#include "tits/resolution.hpp"

#include <map>
#include <stdexcept>

namespace tits {

namespace {

using Tuple = std::vector<std::uint32_t>;

Tuple face(const Tuple& t, std::size_t i) {
  const std::size_t p = t.size();
  Tuple out;
  if (i == 0) return Tuple(t.begin() + 1, t.end());
  if (i == p) return Tuple(t.begin(), t.end() - 1);
  for (std::size_t k = 0; k < p; ++k) {
    if (k == i) {
      out.back() |= t[k];
      continue;
    }
    out.push_back(t[k]);
  }
  return out;
}

// Ordered tuples of pairwise disjoint nonempty masks, in lexicographic order.
void extend(const Tuple& prefix, std::uint32_t used, std::uint32_t full, std::size_t p, std::vector<Tuple>& out) {
  if (prefix.size() == p) {
    out.push_back(prefix);
    return;
  }
  const std::uint32_t free = full & ~used;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if ((m & free) != m) continue;
    Tuple next = prefix;
    next.push_back(m);
    extend(next, used | m, full, p, out);
  }
}

}  // namespace

Resolution build_resolution(const Arrangement& a, int p_max) {
  Resolution r;
  r.basis = region_basis(a);
  const std::size_t b = r.basis.size();
  if (b > 6) throw std::invalid_argument("SIZE_GUARD: more than 6 basis regions");
  if (p_max < 0) p_max = static_cast<int>(b);
  if (static_cast<std::size_t>(p_max) > b + 1) throw std::invalid_argument("SIZE_GUARD: p_max above |basis| + 1");
  r.p_max = p_max;
  r.complete = static_cast<std::size_t>(p_max) >= b;
  const std::uint32_t full = (std::uint32_t(1) << b) - 1;

  std::map<Tuple, std::size_t> below;
  r.identities_ok = true;
  for (int p = 0; p <= p_max; ++p) {
    ResolutionLevel lv;
    lv.p = p;
    extend({}, 0, full, static_cast<std::size_t>(p), lv.tuples);
    if (p > 0) {
      lv.faces.assign(static_cast<std::size_t>(p) + 1, std::vector<std::size_t>(lv.tuples.size()));
      for (std::size_t t = 0; t < lv.tuples.size(); ++t)
        for (std::size_t i = 0; i <= static_cast<std::size_t>(p); ++i)
          lv.faces[i][t] = below.at(face(lv.tuples[t], i));
    }
    // d_i d_j = d_{j-1} d_i for i < j
    if (p >= 2) {
      const auto& down = r.levels.back();
      for (std::size_t t = 0; t < lv.tuples.size(); ++t)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(p); ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (down.faces[i][lv.faces[j][t]] != down.faces[j - 1][lv.faces[i][t]]) r.identities_ok = false;
    }
    below.clear();
    for (std::size_t t = 0; t < lv.tuples.size(); ++t) below[lv.tuples[t]] = t;
    if (lv.tuples.empty() && p > 0) break;
    r.levels.push_back(std::move(lv));
  }

  ChainComplex& c = r.complex;
  c.min_degree = -1;
  c.labels.push_back({"()"});
  c.boundary.push_back(IntMatrix(0, 1));
  for (const auto& lv : r.levels) {
    std::vector<std::string> labels;
    for (const auto& t : lv.tuples) {
      std::string s = "(";
      for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
      labels.push_back(s + ")");
    }
    c.labels.push_back(std::move(labels));
    if (lv.p == 0) {
      IntMatrix e(1, 1);
      e.add(0, 0, 1);
      c.boundary.push_back(std::move(e));
      continue;
    }
    IntMatrix d(c.labels[c.labels.size() - 2].size(), lv.tuples.size());
    for (std::size_t t = 0; t < lv.tuples.size(); ++t)
      for (std::size_t i = 0; i < lv.faces.size(); ++i) d.add(lv.faces[i][t], t, i % 2 ? -1 : 1);
    c.boundary.push_back(std::move(d));
  }
  c.check();
  return r;
}

Resolution build_resolution(const Collection& l, int p_max) { return build_resolution(build_arrangement(l), p_max); }

ResolutionReport resolution_homology(const Collection& l, int p_max) {
  Resolution r = build_resolution(l, p_max);
  ResolutionReport rep;
  for (const auto& lv : r.levels) rep.level_counts.push_back(lv.tuples.size());
  rep.pt_rank = r.basis.size();
  rep.identities_ok = r.identities_ok;
  rep.homology = homology(r.complex);
  auto group = [&](int deg) {
    for (const auto& g : rep.homology.groups)
      if (g.degree == deg) return g;
    return HomologyGroup{deg, 0, {}};
  };
  HomologyGroup h0 = group(0), h1 = group(1);
  rep.h0_vanishes = h0.betti == 0 && h0.torsion.empty();
  rep.h1_is_pt = h1.betti == rep.pt_rank && h1.torsion.empty();
  if (!r.complete)
    for (int d = r.p_max; d <= static_cast<int>(r.basis.size()); ++d) rep.unreliable.push_back(d);
  return rep;
}

}  // namespace tits
