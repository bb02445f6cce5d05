#include "hodgeheat/forman.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hodgeheat {

double forman_curvature(const WeightedComplex& cx, const Simplex& tau) {
  auto idx = cx.find(tau);
  if (!idx) throw std::invalid_argument("simplex '" + tau.key() + "' not in complex");
  const int k = tau.dim();
  const int i = *idx;
  const double m_tau = cx.weights(k)(i);

  double face_term = 0;
  if (cx.has_block(k - 1)) {
    const RVec& m_lo = cx.weights(k - 1);
    for (const auto& f : cx.faces(k, i)) face_term += m_tau / m_lo(f.idx);
  }
  const double coface_term = cx.gamma(k, i) / m_tau;

  // Same-degree couplings: face route (value m(tau')/m(rho)) and coface route
  // (value m(sigma)/m(tau)); a pair coupled both ways contributes the absolute
  // difference of the two routes.
  std::map<int, std::pair<double, double>> nbr;  // tau' index -> (face, coface)
  if (cx.has_block(k - 1)) {
    const RVec& m_lo = cx.weights(k - 1);
    const RVec& m_k = cx.weights(k);
    for (const auto& f : cx.faces(k, i))
      for (const auto& up : cx.cofaces(k - 1, f.idx))
        if (up.idx != i) nbr[up.idx].first += m_k(up.idx) / m_lo(f.idx);
  }
  if (cx.has_block(k + 1)) {
    const RVec& m_hi = cx.weights(k + 1);
    for (const auto& cf : cx.cofaces(k, i))
      for (const auto& down : cx.faces(k + 1, cf.idx))
        if (down.idx != i) nbr[down.idx].second += m_hi(cf.idx) / m_tau;
  }
  double correction = 0;
  for (const auto& [j, routes] : nbr) {
    (void)j;
    correction += std::abs(routes.first - routes.second);
  }
  return face_term + coface_term - correction;
}

double forman_curvature_combinatorial(const WeightedComplex& cx, const Simplex& tau) {
  auto idx = cx.find(tau);
  if (!idx) throw std::invalid_argument("simplex '" + tau.key() + "' not in complex");
  const int k = tau.dim();
  const int i = *idx;
  double acc = 2.0 * (k + 1) + (k + 2.0) * cx.cofaces(k, i).size();
  for (const auto& f : cx.faces(k, i)) acc -= cx.cofaces(k - 1, f.idx).size();
  return acc;
}

}  // namespace hodgeheat
