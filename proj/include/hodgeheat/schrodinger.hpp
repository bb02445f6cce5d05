#pragma once

#include <string>
#include <vector>

#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

/// Magnetic Schrödinger data (b, o, c) over a finite weighted site set (X, m):
///   (H f)(x) = (1/m(x)) sum_y b(x,y) (f(x) - o(x,y) f(y)) + c(x) f(x) / m(x).
/// b is symmetric with zero diagonal; o has unit modulus where b > 0 (and is 1
/// elsewhere) with o(y,x) = conj(o(x,y)); c is a real signed potential.
/// Hodge-extracted data has o in {-1, +1}, but every operation here accepts
/// unit complex phases.
struct SchrodingerData {
  RMat b;
  Mat o;
  RVec c;
  RVec m;
  std::vector<std::string> keys;
  int degree = 0;

  int size() const { return static_cast<int>(m.size()); }
  bool real_magnetic() const;  ///< all phases real (+-1)
};

/// Reads (b, o, c) off a self-adjoint operator block:
///   b(x,y) = m(x) |A(x,y)| (x != y), o(x,y) = -A(x,y)/|A(x,y)| where b > 0,
///   c(x) = m(x) Re A(x,x) - sum_y b(x,y).
/// Throws when the m-weighted self-adjointness defect exceeds tolerance.
SchrodingerData extract_schrodinger(const LaplacianMatrix& L);

/// Rebuilds the operator matrix; exact inverse of extract_schrodinger.
LaplacianMatrix reassemble(const SchrodingerData& sd);

/// Sesquilinear energy form
///   Q(f,g) = (1/2) sum_{x,y} b(x,y) (f(x)-o(x,y)f(y)) conj(g(x)-o(x,y)g(y))
///            + sum_x c(x) f(x) conj(g(x)).
cplx quadratic_form(const SchrodingerData& sd, const Vec& f, const Vec& g);
double quadratic_form(const SchrodingerData& sd, const Vec& f);

/// Positive-part form q(f,g): same gradient term with c replaced by max(c,0).
cplx positive_form(const SchrodingerData& sd, const Vec& f, const Vec& g);
double positive_form(const SchrodingerData& sd, const Vec& f);

/// Dirichlet-type truncation to the sites in K (indices into sd):
/// H_K keeps b,o inside K and adds the boundary coupling to the potential,
///   c_K(x) = c(x) + sum_{y not in K} b(x,y).
LaplacianMatrix truncate(const SchrodingerData& sd, const std::vector<int>& K);

/// Probe function: phi_x(x) = 1, phi_x(y) = conj(o(x,y)) on b-neighbors,
/// 0 elsewhere; satisfies (H phi_x)(x) = c(x)/m(x) exactly.
Vec phi_probe(const SchrodingerData& sd, int x);

}  // namespace hodgeheat
