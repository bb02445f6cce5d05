#pragma once

#include <cstdint>

#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// Certified bracket around an operator norm; lower == upper when exact.
struct NormBracket {
  double lower = 0;
  double upper = 0;
  bool exact = false;
};

/// ||T||_{1->1} on ell^1(m): sup_y (1/m(y)) sum_x m(x)|T_xy|.
double operator_norm_11(const Mat& T, const RVec& m);
/// ||T||_{inf->inf}: sup_x sum_y |T_xy|.
double operator_norm_inf(const Mat& T);
/// ||T||_{2->2} on ell^2(m): top singular value of M^{1/2} T M^{-1/2}.
double operator_norm_22(const Mat& T, const RVec& m);

/// ||T||_{ell^2(m) -> ell^inf}: sup_x sqrt(sum_y |T_xy|^2/m(y)).
double operator_norm_2_inf(const Mat& T, const RVec& m);
/// ||T||_{ell^1(m) -> ell^2(m)}: sup_y sqrt(sum_x m(x)|T_xy|^2)/m(y).
double operator_norm_1_2(const Mat& T, const RVec& m);

/// Norm of T on ell^p(m). Exact for p in {1, 2, inf}; otherwise an
/// interpolation upper bound paired with a sampled lower bound.
NormBracket lp_operator_norm(const Mat& T, const RVec& m, double p,
                             std::uint64_t seed = 12345, int nsamples = 200);

/// Weighted vector p-norm (sum_x m(x)|f(x)|^p)^{1/p}; sup |f| for p = inf.
double lp_vector_norm(const Vec& f, const RVec& m, double p);

}  // namespace hodgeheat
