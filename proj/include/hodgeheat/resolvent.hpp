#pragma once

#include <cstdint>

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// (H - z)^{-1} with its site-measure kernel g(x,y) = G_xy / m(y).
struct ResolventKernel {
  cplx z;
  Mat G;
  Mat g;
  RVec m;
  std::vector<std::string> keys;
  double identity_residual = 0;  ///< max entry of (H - z) G - I
};

/// Rectangle of spectral parameters sampled on an nre x nim grid.
struct ZRect {
  double re_lo = -2.0, re_hi = -0.5;
  double im_lo = -1.0, im_hi = 1.0;
  int nre = 5, nim = 5;
};

/// Solve (H - z) G = I. Refuses z within condition 1e12 of the spectrum.
ResolventKernel resolvent(const LaplacianMatrix& H, cplx z);

/// |g_alpha(x,y)| <= e^{-eps d(x,y)} / ((-alpha - C_eps) sqrt(m(x) m(y)))
/// for alpha < -C_eps, C_eps = (cosh(eps s) - 1)/s^2.
BoundReport resolvent_decay_check(const LaplacianMatrix& H, const MetricData& md,
                                  double eps, double alpha);

/// sup over the z-grid and a family of eps-Lipschitz weights psi of
/// ||e^psi (H - z)^{-1} e^{-psi}||_{2,2}; finite, with the unweighted sup and
/// their ratio reported as observations.
BoundReport weighted_resolvent_check(const LaplacianMatrix& H, const MetricData& md,
                                     const ZRect& rect, double eps, int n_psi = 10,
                                     std::uint64_t seed = 77);

/// Kernel decay of (H - z)^{-2} through the factorization
/// G_z^2 = G_alpha (I + (z - alpha) G_z)^2 G_alpha at alpha = -(1 + C_eps),
/// with the pairwise weight psi(v) = eps (d(v,y) ^ d(x,y)).
BoundReport squared_resolvent_check(const LaplacianMatrix& H, const MetricData& md,
                                    const ZRect& rect, double eps = 0.5);

}  // namespace hodgeheat
