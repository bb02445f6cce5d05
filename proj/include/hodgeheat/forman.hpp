#pragma once

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// Weighted curvature of a simplex tau, returned as c(tau)/m(tau):
///   sum_{rho < tau} m(tau)/m(rho) + sum_{sigma > tau} m(sigma)/m(tau)
///   - sum_{tau' ~ tau} | m(tau')/m(rho) - sum_{sigma > tau,tau'} m(sigma)/m(tau) |
/// where tau' runs over the same-degree simplices coupled to tau through a
/// shared codimension-1 face rho in the complex (first term inside |.|) or a
/// shared coface (second term).  For degree >= 1 the coupled simplices are
/// exactly those reached via a shared face, which recovers the classical
/// double-sum form of the correction term; at degree 0 without the empty
/// simplex only the coface route exists and the curvature of the plain graph
/// Laplacian comes out identically zero.  This value coincides with the
/// potential extracted from the Hodge Laplacian block.
double forman_curvature(const WeightedComplex& cx, const Simplex& tau);

/// Combinatorial specialization for m == 1 and fully-faced simplices:
///   2(k+1) + (k+2) #cofaces - sum_{rho < tau} #cofaces(rho).
double forman_curvature_combinatorial(const WeightedComplex& cx, const Simplex& tau);

}  // namespace hodgeheat
