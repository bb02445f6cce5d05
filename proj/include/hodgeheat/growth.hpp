#pragma once

#include <vector>

#include "hodgeheat/metric.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// Exponential volume-growth fit m(B_r(x)) <= C e^{nu r} m(x).
struct GrowthFit {
  double nu = 0;     ///< minimal grid rate with C(nu) <= c_cap
  double C = 1;      ///< the certified constant at that rate
  double c_cap = 10;
  std::vector<std::pair<double, double>> table;  ///< (nu, C(nu)) sweep, Pareto list
  double jump_size = 1;
  double diameter = 0;  ///< largest finite distance
};

/// Sweeps nu over a grid, C(nu) = max over sites x and radii r (multiples of
/// the jump size up to the diameter) of m(B_r(x)) / (e^{nu r} m(x)); returns
/// the whole sweep and the minimal nu with C(nu) <= c_cap.
GrowthFit fit_growth(const MetricData& md, const RVec& m, double c_cap = 10.0,
                     double nu_max = 6.0, int nu_steps = 121);

struct DegreeGrowthReport {
  double max_count_ratio = 0;  ///< max over (x,r) of #B_r(x) / (C^2 e^{2 nu r})
  int max_degree = 0;          ///< max number of coupled neighbours (b > 0)
  double degree_bound = 0;     ///< C^2 e^{2 nu s}
  bool pass = false;
};

/// Consequences of the growth fit: ball cardinality #B_r(x) <= C^2 e^{2 nu r}
/// and coupling degree <= C^2 e^{2 nu s}.
DegreeGrowthReport degree_growth_consistency(const MetricData& md, const RVec& m,
                                             const GrowthFit& fit,
                                             const RMat& b);

/// sup_x sum_y sqrt(m(y)/m(x)) e^{-beta d(x,y)}.
double summability(const MetricData& md, const RVec& m, double beta);

}  // namespace hodgeheat
