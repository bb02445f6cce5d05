#pragma once

#include <vector>

#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

struct FormBoundEntry {
  double C = 0;
  double M = 0;          ///< smallest M on the positive-form complement; see below
  bool infinite = false; ///< kernel of the positive form carries uncancelled c_- mass
};

/// Result of bounding the negative potential part against the energy form:
///   sum c_-(x) |phi(x)|^2 <= M * form(phi) + C * ||phi||_2^2.
/// M is computed per C as the largest generalized eigenvalue of
/// (diag(c_-) - C diag(m), q-matrix) restricted to the orthogonal complement
/// of ker q, where q is the positive-part form (gradient + c_+); q is PSD by
/// construction, which keeps the eigenproblem well posed even when the full
/// form fails positivity (that failure is flagged, not fatal).
/// (M_pair, C_pair) upgrades one grid entry to a pair valid for the FULL form
/// (verified by a PSD eigencheck, bisected upward if necessary) so that it can
/// feed the semigroup contraction rate; the fallback is (0, sup c_-/m).
struct FormBoundEstimate {
  std::vector<FormBoundEntry> entries;
  bool form_indefinite = false;  ///< full form has a negative direction (model error)
  double min_form_eig = 0;       ///< smallest eigenvalue of the full form matrix
  double M_pair = 0;
  double C_pair = 0;
  std::vector<Vec> witnesses;    ///< maximizing directions per grid entry
};

FormBoundEstimate estimate_form_bound(const SchrodingerData& sd,
                                      const std::vector<double>& C_grid);

/// 4(p-1)/p^2, the p-form coefficient.
double cp_coefficient(double p);

/// kappa(p) = sup_{t in (0,1)} (1+t)(1+t^{p-1})/(1+t^{p/2})^2, by grid search
/// with golden-section refinement (boundary suprema chased geometrically).
double kappa_p(double p);

/// Re q(f, f|f|^{p-2}) with the zero convention at f = 0.
double pform_lhs(const SchrodingerData& sd, const Vec& f, double p);
/// q(f |f|^{(p-2)/2}).
double pform_rhs_energy(const SchrodingerData& sd, const Vec& f, double p);

/// Contraction interval I for form bound M: [2(M+1)/M - 2 sqrt(M+1)/M,
/// 2(M+1)/M + 2 sqrt(M+1)/M]; (1, inf) when M = 0 (returned as {1, inf}).
std::pair<double, double> contraction_interval(double M);

/// D_p = (C_p - M(1 - C_p)) lambda2 - C (1 - C_p).
double contraction_rate(double p, double M, double C, double lambda2);

}  // namespace hodgeheat
