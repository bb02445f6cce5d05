#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodgeheat/form_bound.hpp"
#include "hodgeheat/growth.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// One plot row of an inequality sweep.
struct SeriesRow {
  double t = 0;  ///< abscissa (time, index, or distance depending on check)
  double lhs = 0;
  double rhs = 0;
  double slack = 0;  ///< rhs - lhs (nonnegative when the bound holds)
  std::string label;
};

/// Outcome of one verified inequality family.
/// pass <=> max_violation <= tolerance (violation = lhs - rhs, signed).
struct BoundReport {
  std::string check;
  std::map<std::string, double> params;
  long long samples = 0;
  double max_violation = -kInf;
  double tolerance = tol::bound;
  bool pass = false;
  std::vector<SeriesRow> series;
  std::vector<std::string> notes;
  double runtime_seconds = 0;  ///< informational only; excluded from serialization
  double worst_lhs = 0, worst_rhs = 0;  ///< the sample attaining max_violation

  /// Record one sample; returns the signed violation lhs - rhs.
  double record(double lhs, double rhs);
  void finalize() { pass = samples >= 0 && max_violation <= tolerance; }
};

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);
/// 40 log-spaced points in [0.05, 20].
std::vector<double> default_time_grid();

/// View Schrodinger data as an operator block (matrix + measure + keys).
LaplacianMatrix to_operator(const SchrodingerData& sd);
/// Same coupling and measure, phases +1 and potential 0.
SchrodingerData free_version(const SchrodingerData& sd);

/// Central-difference check that t -> e^{-tH} f solves the heat equation.
BoundReport verify_heat_equation(const LaplacianMatrix& H, const Vec& f,
                                 const std::vector<double>& ts, double h = 1e-4,
                                 double residual_tol = 1e-7);

/// Gaussian-type kernel bound |p_t(x,y)| <= exp(-l2 t - (t/s^2) zeta(s d/t)) / sqrt(m m),
/// its exponential-weight variant for beta in {0.5, 1, 2} (plus 3 nu/2 + 0.1
/// when nu is finite), and the two-set form on random disjoint supports.
/// Requires a certified intrinsic metric.
BoundReport dgg_check(const LaplacianMatrix& H, const MetricData& md, double lambda2,
                      const std::vector<double>& ts,
                      double nu = std::numeric_limits<double>::quiet_NaN(),
                      std::uint64_t seed = 20240817);

/// t -> exp(2 l2 t - 2 t (cosh(kappa s/2)-1)/s^2) * sum m e^omega |u_t|^2 is
/// nonincreasing. kappa must dominate the realized Lipschitz constant of omega.
BoundReport energy_monotonicity(const LaplacianMatrix& H, const MetricData& md,
                                const Vec& u0, const RVec& omega, double kappa,
                                const std::vector<double>& ts);

/// Truncation semigroups converge along a nested exhaustion: restriction error
/// nonincreasing (tolerance 1e-9) and bottom eigenvalue nonincreasing.
BoundReport exhaustion_convergence(const SchrodingerData& sd,
                                   const std::vector<std::vector<int>>& nested_sets,
                                   const Vec& f, double t);

/// ||e^{-tH}||_{p,p} lower bracket <= e^{-D_p t} + 1e-10 for p in the admissible
/// interval determined by M (endpoints included when finite).
BoundReport contraction_check(const LaplacianMatrix& H, double M, double C,
                              const std::vector<double>& p_grid,
                              const std::vector<double>& ts);

/// |p_t| <= e^{Kt} p~_t entrywise against the phase-free potential-free kernel,
/// Markov mass of p~ at most 1, and ||e^{-tH}||_{1,1} <= e^{Kt}.
BoundReport domination_check(const SchrodingerData& sd, double K,
                             const std::vector<double>& ts);

/// ||e^{-tH}||_{1,1} <= summability(beta) e^{(C_beta - l2) t} at beta = 3 nu/2 + margin,
/// with the interpolated bound at p in {1.5, 3, 4} and the spectral-gap slack.
BoundReport l1_extension_check(const SchrodingerData& sd, const MetricData& md,
                               const GrowthFit& fit, const std::vector<double>& ts,
                               double margin = 0.1);

}  // namespace hodgeheat
