#pragma once

#include <string>
#include <vector>

#include "hodgeheat/complex.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

enum class LapVariant { up, down, hodge };

std::string to_string(LapVariant v);
LapVariant lap_variant_from_string(const std::string& s);

/// A degree-preserving operator block acting on functions over `keys` with
/// site weights `m`; self-adjoint for the m-weighted inner product.
struct LaplacianMatrix {
  LapVariant variant = LapVariant::hodge;
  int degree = 0;
  Mat A;                          ///< operator matrix, (Af)(x) = sum_y A(x,y) f(y)
  RVec m;                         ///< site weights
  std::vector<std::string> keys;  ///< canonical simplex keys

  int size() const { return static_cast<int>(A.rows()); }
  /// M^{1/2} A M^{-1/2}, explicitly hermitized; PSD for Hodge data.
  Mat symmetrized() const;
  /// max_{x,y} m(x) |A(x,y) - conj(A(y,x)) m(y)/m(x)| style asymmetry defect.
  double self_adjointness_defect() const;
};

/// Coboundary incidence matrix block k -> k+1 with entries theta in {-1,0,1}.
SpMat coboundary_matrix(const WeightedComplex& cx, int k);
/// Weighted boundary matrix block k -> k-1, entries m(tau) theta / m(rho).
SpMat boundary_matrix(const WeightedComplex& cx, int k);

/// Assembles the degree-`degree` block of the up / down / Hodge Laplacian by
/// explicit incidence loops (structural zeros are exact).
LaplacianMatrix assemble_laplacian(const WeightedComplex& cx, int degree,
                                   LapVariant variant);

}  // namespace hodgeheat
