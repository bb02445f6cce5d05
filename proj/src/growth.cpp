#include "hodgeheat/growth.hpp"

#include <cmath>
#include <set>

namespace hodgeheat {

GrowthFit fit_growth(const MetricData& md, const RVec& m, double c_cap, double nu_max,
                     int nu_steps) {
  const int n = md.size();
  GrowthFit fit;
  fit.c_cap = c_cap;
  fit.jump_size = md.jump_size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (std::isfinite(md.dist(x, y))) fit.diameter = std::max(fit.diameter, md.dist(x, y));

  // radii: multiples of the jump size covering [0, diameter]
  std::vector<double> radii = {0.0};
  if (fit.jump_size > 0)
    for (double r = fit.jump_size; r <= fit.diameter + fit.jump_size; r += fit.jump_size)
      radii.push_back(r);

  std::vector<std::pair<double, double>> vol;  // (r, max_x m(B_r)/m(x)) per radius
  for (double r : radii) {
    double worst = 0;
    for (int x = 0; x < n; ++x) worst = std::max(worst, ball_volume(md, m, x, r) / m(x));
    vol.emplace_back(r, worst);
  }

  bool found = false;
  for (int i = 0; i < nu_steps; ++i) {
    double nu = nu_max * i / (nu_steps - 1);
    double C = 0;
    for (auto [r, v] : vol) C = std::max(C, v * std::exp(-nu * r));
    fit.table.emplace_back(nu, C);
    if (!found && C <= c_cap) {
      fit.nu = nu;
      fit.C = C;
      found = true;
    }
  }
  if (!found) {  // take the last grid point; caller sees C > c_cap
    fit.nu = fit.table.back().first;
    fit.C = fit.table.back().second;
  }
  return fit;
}

DegreeGrowthReport degree_growth_consistency(const MetricData& md, const RVec& m,
                                             const GrowthFit& fit, const RMat& b) {
  (void)m;
  const int n = md.size();
  DegreeGrowthReport rep;
  const double C2 = fit.C * fit.C;
  std::vector<double> radii = {0.0};
  if (fit.jump_size > 0)
    for (double r = fit.jump_size; r <= fit.diameter + fit.jump_size; r += fit.jump_size)
      radii.push_back(r);
  for (double r : radii)
    for (int x = 0; x < n; ++x) {
      double cnt = static_cast<double>(ball(md, x, r).size());
      rep.max_count_ratio =
          std::max(rep.max_count_ratio, cnt / (C2 * std::exp(2.0 * fit.nu * r)));
    }
  for (int x = 0; x < n; ++x) {
    int deg = 0;
    for (int y = 0; y < n; ++y)
      if (y != x && b(x, y) > 0) ++deg;
    rep.max_degree = std::max(rep.max_degree, deg);
  }
  rep.degree_bound = C2 * std::exp(2.0 * fit.nu * fit.jump_size);
  rep.pass = rep.max_count_ratio <= 1.0 + tol::bound &&
             static_cast<double>(rep.max_degree) <= rep.degree_bound + tol::bound;
  return rep;
}

double summability(const MetricData& md, const RVec& m, double beta) {
  const int n = md.size();
  double worst = 0;
  for (int x = 0; x < n; ++x) {
    double acc = 0;
    for (int y = 0; y < n; ++y) {
      if (std::isinf(md.dist(x, y))) continue;
      acc += std::sqrt(m(y) / m(x)) * std::exp(-beta * md.dist(x, y));
    }
    worst = std::max(worst, acc);
  }
  return worst;
}

}  // namespace hodgeheat
