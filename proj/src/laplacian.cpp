#include "hodgeheat/laplacian.hpp"

#include <stdexcept>
#include <vector>

namespace hodgeheat {

std::string to_string(LapVariant v) {
  switch (v) {
    case LapVariant::up: return "up";
    case LapVariant::down: return "down";
    case LapVariant::hodge: return "hodge";
  }
  return "?";
}

LapVariant lap_variant_from_string(const std::string& s) {
  if (s == "up") return LapVariant::up;
  if (s == "down") return LapVariant::down;
  if (s == "hodge") return LapVariant::hodge;
  throw std::invalid_argument("unknown laplacian variant '" + s + "'");
}

Mat LaplacianMatrix::symmetrized() const {
  const int n = size();
  Mat s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s(i, j) = std::sqrt(m(i)) * A(i, j) / std::sqrt(m(j));
  s = ((s + s.adjoint()) / 2.0).eval();
  return s;
}

double LaplacianMatrix::self_adjointness_defect() const {
  const int n = size();
  double d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d = std::max(d, std::abs(m(i) * A(i, j) - std::conj(m(j) * A(j, i))));
  return d;
}

SpMat coboundary_matrix(const WeightedComplex& cx, int k) {
  if (!cx.has_block(k) || !cx.has_block(k + 1))
    return SpMat(std::max(cx.block_size(k + 1), 0), std::max(cx.block_size(k), 0));
  SpMat d(cx.block_size(k + 1), cx.block_size(k));
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < cx.block_size(k); ++i)
    for (const auto& cf : cx.cofaces(k, i))
      trip.emplace_back(cf.idx, i, static_cast<double>(cf.sign));
  d.setFromTriplets(trip.begin(), trip.end());
  return d;
}

SpMat boundary_matrix(const WeightedComplex& cx, int k) {
  if (!cx.has_block(k) || !cx.has_block(k - 1))
    return SpMat(std::max(cx.block_size(k - 1), 0), std::max(cx.block_size(k), 0));
  SpMat d(cx.block_size(k - 1), cx.block_size(k));
  const RVec& m_hi = cx.weights(k);
  const RVec& m_lo = cx.weights(k - 1);
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < cx.block_size(k); ++i)
    for (const auto& f : cx.faces(k, i))
      trip.emplace_back(f.idx, i, m_hi(i) / m_lo(f.idx) * static_cast<double>(f.sign));
  d.setFromTriplets(trip.begin(), trip.end());
  return d;
}

LaplacianMatrix assemble_laplacian(const WeightedComplex& cx, int degree, LapVariant variant) {
  if (!cx.has_block(degree))
    throw std::invalid_argument("no degree-" + std::to_string(degree) + " block in complex");
  const int n = cx.block_size(degree);
  const RVec& m = cx.weights(degree);
  RMat A = RMat::Zero(n, n);

  const bool want_up = variant != LapVariant::down;
  const bool want_down = variant != LapVariant::up;

  if (want_up && cx.has_block(degree + 1)) {
    // (del delta w)(tau) = (1/m(tau)) sum_{sigma > tau} m(sigma) theta(tau,sigma)
    //                      sum_{tau' < sigma} theta(tau',sigma) w(tau')
    const RVec& m_up = cx.weights(degree + 1);
    for (int s = 0; s < cx.block_size(degree + 1); ++s) {
      const auto& fs = cx.faces(degree + 1, s);
      for (const auto& fi : fs)
        for (const auto& fj : fs)
          A(fi.idx, fj.idx) += m_up(s) * fi.sign * fj.sign / m(fi.idx);
    }
  }
  if (want_down && cx.has_block(degree - 1)) {
    // (delta del w)(tau) = sum_{rho < tau} theta(rho,tau) (1/m(rho))
    //                      sum_{tau' > rho} m(tau') theta(rho,tau') w(tau')
    const RVec& m_dn = cx.weights(degree - 1);
    for (int r = 0; r < cx.block_size(degree - 1); ++r) {
      const auto& cfs = cx.cofaces(degree - 1, r);
      for (const auto& ci : cfs)
        for (const auto& cj : cfs)
          A(ci.idx, cj.idx) += ci.sign * cj.sign * m(cj.idx) / m_dn(r);
    }
  }

  LaplacianMatrix L;
  L.variant = variant;
  L.degree = degree;
  L.A = A.cast<cplx>();
  L.m = m;
  L.keys = cx.keys(degree);
  return L;
}

}  // namespace hodgeheat
