#pragma once

#include <cstdint>
#include <vector>

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/complex.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// Full eigenvalue data of one operator block.
struct SpectralReport {
  LapVariant variant = LapVariant::hodge;
  int degree = 0;
  RVec eigenvalues;        ///< ascending
  double lambda2 = 0;      ///< smallest eigenvalue
  int kernel_dim = 0;      ///< #{lambda <= rank_tol_abs}
  double rank_tol_abs = 0; ///< 1e-8 * ||operator||
  double spectral_gap = 0; ///< smallest eigenvalue above the kernel cut
};

SpectralReport spectrum(const LaplacianMatrix& H);

/// Dimension of the harmonic space at degree k (kernel of the full Laplacian
/// block). On an augmented complex this is the reduced count.
int betti(const WeightedComplex& cx, int k);

/// Independent oracle: dim C_k - rank(up incidence) - rank(down incidence).
int betti_rank_oracle(const WeightedComplex& cx, int k);

/// The operator-norm inequality suite: per-degree sup/l1 norms of the
/// incidence operators against their combinatorial constants, p-norms of the
/// Laplacians against the weight constant D = sup (dim+2) gamma / m, and the
/// indicator-energy identity.
std::vector<BoundReport> norm_bound_suite(const WeightedComplex& cx);

/// Variational consistency: the bottom eigenvalue is a lower bound for every
/// sampled Rayleigh quotient and is attained by the computed eigenvector.
BoundReport rayleigh_consistency(const LaplacianMatrix& H, int nsamples = 1000,
                                 std::uint64_t seed = 5150);

}  // namespace hodgeheat
