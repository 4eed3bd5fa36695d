#pragma once

#include <cstdint>
#include <vector>

#include "tits/arrangement.hpp"
#include "tits/complexes.hpp"

namespace tits {

// Level p of the semi-simplicial set of polytope tuples. A polytope is a
// nonempty union of basis regions, stored as a bit mask over the basis.
struct ResolutionLevel {
  int p = 0;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::vector<std::size_t>> faces;  // faces[i][t]: index of d_i(tuple t) one level down
};

struct Resolution {
  std::vector<std::size_t> basis;  // arrangement region ids
  int p_max = 0;
  bool complete = false;  // every nonempty level was built
  std::vector<ResolutionLevel> levels;
  ChainComplex complex;  // augmented by a single generator in degree -1
  bool identities_ok = false;
};

// Refuses more than 6 basis regions or p_max above |basis| + 1.
Resolution build_resolution(const Arrangement& a, int p_max);
Resolution build_resolution(const Collection& l, int p_max);

struct ResolutionReport {
  std::vector<std::size_t> level_counts;
  std::size_t pt_rank = 0;
  HomologySummary homology;  // reduced
  bool identities_ok = false;
  bool h0_vanishes = false;
  bool h1_is_pt = false;
  std::vector<int> unreliable;  // degrees affected by truncation
  bool pass() const { return identities_ok && h0_vanishes && h1_is_pt; }
};

// p_max < 0 builds every level.
ResolutionReport resolution_homology(const Collection& l, int p_max = -1);

}  // namespace tits
