#pragma once

#include "hodgeheat/complex.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// A (possibly mixed-degree) cochain: one dense complex block per degree the
/// complex carries, aligned with WeightedComplex block ordering.
class Cochain {
 public:
  explicit Cochain(const WeightedComplex& cx);

  const WeightedComplex& complex() const { return *cx_; }
  int min_degree() const { return cx_->min_degree(); }
  int max_degree() const { return cx_->dim(); }

  Vec& block(int k);
  const Vec& block(int k) const;

  cplx value(const Simplex& s) const;
  void set(const Simplex& s, cplx v);

  /// Indicator cochain of a single simplex.
  static Cochain indicator(const WeightedComplex& cx, const Simplex& s);

 private:
  const WeightedComplex* cx_;
  std::vector<Vec> blocks_;  // indexed by degree+1
};

/// Coboundary: (delta w)(sigma) = sum over codim-1 faces tau of
/// theta(tau, sigma) w(tau).  Raises each degree block by one.
Cochain coboundary(const Cochain& w);

/// Weighted boundary: (del w)(rho) = (1/m(rho)) sum over cofaces tau of
/// m(tau) theta(rho, tau) w(tau).  Lowers each degree block by one; adjoint of
/// the coboundary for the weighted inner product.
Cochain boundary(const Cochain& w);

/// Weighted lp norm, p in [1, inf]; throws std::invalid_argument for p < 1.
double lp_norm(const Cochain& w, double p);

/// Weighted inner product <w, v> = sum m(s) w(s) conj(v(s)).
cplx inner_product(const Cochain& w, const Cochain& v);

}  // namespace hodgeheat
