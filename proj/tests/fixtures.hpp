#pragma once

// Shared complexes used across the test suites.  Each builder is named for
// the shape it produces; the weighted edge carries masses {0:1, 1:2, edge:3}.

#include <vector>

#include "hodgeheat/complex.hpp"
#include "hodgeheat/generators.hpp"

namespace fixtures {

using hodgeheat::BuildOptions;
using hodgeheat::WeightedComplex;

inline WeightedComplex single_edge() { return hodgeheat::build_complex({{0, 1}}); }

inline WeightedComplex hollow_triangle() { return hodgeheat::generate_cycle(3, false); }

inline WeightedComplex filled_triangle() { return hodgeheat::generate_cycle(3, true); }

inline WeightedComplex path_n(int n) { return hodgeheat::generate_path(n); }

inline WeightedComplex weighted_edge() {
  BuildOptions opt;
  opt.combinatorial = false;
  return hodgeheat::build_complex({{0, 1}},
                                  {{"0", 1.0}, {"1", 2.0}, {"0,1", 3.0}}, opt);
}

inline WeightedComplex torus() { return hodgeheat::generate_torus(); }

/// The five standard fixtures, in the order the suites sweep them.
inline std::vector<WeightedComplex> standard_fixtures() {
  std::vector<WeightedComplex> out;
  out.push_back(single_edge());
  out.push_back(hollow_triangle());
  out.push_back(filled_triangle());
  out.push_back(path_n(5));
  out.push_back(weighted_edge());
  return out;
}

/// Seeded random weighted complex capped at `max_total` closure simplices
/// (resamples with shifted seeds until the cap holds; deterministic).
inline WeightedComplex random_small_complex(std::uint64_t seed, int max_total) {
  for (std::uint64_t shift = 0;; ++shift) {
    WeightedComplex cx = hodgeheat::random_weighted_complex(seed + 1000 * shift);
    if (cx.total_simplices() <= max_total) return cx;
  }
}

}  // namespace fixtures
