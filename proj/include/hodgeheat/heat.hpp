#pragma once

#include <vector>

#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// Spectral representation of e^{-tH} for an m-self-adjoint operator block.
/// The eigendecomposition is done per connectivity component of the coupling
/// graph, so matrix entries between uncoupled sites are exactly zero.
class HeatSemigroup {
 public:
  explicit HeatSemigroup(const LaplacianMatrix& L);

  int size() const { return static_cast<int>(m_.size()); }
  const RVec& m() const { return m_; }
  const std::vector<std::string>& keys() const { return keys_; }
  double lambda2() const { return evals_.minCoeff(); }
  const RVec& eigenvalues() const { return evals_; }

  /// e^{-tH} as an operator matrix on functions (t may be negative).
  Mat propagator(double t) const;
  Vec apply(double t, const Vec& f) const;
  /// Heat kernel p_t(x,y) = (e^{-tH})_{xy} / m(y); p_0(x,y) = delta_xy/m(x).
  Mat kernel(double t) const;

 private:
  RVec m_;
  std::vector<std::string> keys_;
  RVec evals_;          // all eigenvalues (component-concatenated)
  Mat evecs_;           // symmetrized-basis eigenvectors, block structure
  std::vector<std::vector<int>> components_;
  std::vector<std::pair<int, int>> eig_span_;  // per component: offset,count in evals_
};

/// zeta(r) = r asinh(r) - sqrt(1 + r^2) + 1 (zeta(inf) = inf, zeta(0) = 0).
double zeta(double r);
/// C_beta = (cosh(beta s) - 1)/s^2.
double c_beta(double beta, double s);

struct HeatEqCheck {
  double residual = 0;       ///< max over grid of ||du/dt + Hu||_2 at step h
  double residual_half = 0;  ///< same at step h/2
  double order = 0;          ///< observed convergence order
  bool pass = false;
};

/// Central-difference residuals of u_t = e^{-tH} f against du/dt = -Hu.
HeatEqCheck heat_equation_residuals(const HeatSemigroup& hs, const LaplacianMatrix& L,
                                    const Vec& f, const std::vector<double>& ts,
                                    double h = 1e-4, double residual_tol = 1e-7);

}  // namespace hodgeheat
