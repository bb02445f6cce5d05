#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// Outcome of every verification family on one complex.
struct ComplexVerdict {
  std::vector<BoundReport> reports;
  std::map<std::string, double> hypotheses;  ///< fitted (M, C), (nu, C), K, ...
  std::uint64_t seed = 0;                    ///< master seed for all randomness
  std::vector<double> t_grid;
  bool all_pass = false;
};

/// Runs the full check battery (per degree block: kernel bounds, contraction,
/// energy, domination, l1 extension, resolvent chain, heat residual; per
/// complex: operator-norm suite, harmonic/rank consistency).
ComplexVerdict run_all_checks(const WeightedComplex& cx,
                              const std::vector<double>& ts,
                              std::uint64_t seed = 1);

std::string verdict_to_json(const ComplexVerdict& v);

}  // namespace hodgeheat
