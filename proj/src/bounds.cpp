#include "hodgeheat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hodgeheat/norms.hpp"

namespace hodgeheat {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_positive(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) throw std::invalid_argument(std::string(who) + ": empty grid");
  for (double t : grid)
    if (!(t > 0)) throw std::invalid_argument(std::string(who) + ": grid values must be positive");
}

double realized_lipschitz(const RVec& f, const RMat& d) {
  double best = 0;
  for (int x = 0; x < f.size(); ++x)
    for (int y = x + 1; y < f.size(); ++y) {
      if (!std::isfinite(d(x, y)) || d(x, y) <= 0) continue;
      best = std::max(best, std::abs(f(x) - f(y)) / d(x, y));
    }
  return best;
}

}  // namespace

double BoundReport::record(double lhs, double rhs) {
  const double v = lhs - rhs;
  if (v > max_violation) {
    max_violation = v;
    worst_lhs = lhs;
    worst_rhs = rhs;
  }
  ++samples;
  return v;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
  return out;
}

std::vector<double> logspace(double a, double b, int n) {
  if (!(a > 0) || !(b > 0))
    throw std::invalid_argument("logspace: endpoints must be positive");
  auto g = linspace(std::log(a), std::log(b), n);
  for (double& v : g) v = std::exp(v);
  return g;
}

std::vector<double> default_time_grid() { return logspace(0.05, 20.0, 40); }

LaplacianMatrix to_operator(const SchrodingerData& sd) { return reassemble(sd); }

SchrodingerData free_version(const SchrodingerData& sd) {
  SchrodingerData out = sd;
  out.o = Mat::Ones(sd.size(), sd.size());
  out.c = RVec::Zero(sd.size());
  return out;
}

BoundReport verify_heat_equation(const LaplacianMatrix& H, const Vec& f,
                                 const std::vector<double>& ts, double h,
                                 double residual_tol) {
  require_positive(ts, "verify_heat_equation");
  HeatSemigroup hs(H);
  const HeatEqCheck chk = heat_equation_residuals(hs, H, f, ts, h, residual_tol);
  BoundReport rep;
  rep.check = "heat-equation-residual";
  rep.params["h"] = h;
  rep.params["residual"] = chk.residual;
  rep.params["residual_half_step"] = chk.residual_half;
  rep.params["order"] = chk.order;
  rep.params["residual_tol"] = residual_tol;
  rep.tolerance = 0.0;
  rep.record(chk.residual, residual_tol);
  const double floor = 1e-14 * (f.norm() + 1.0);
  if (chk.residual_half > floor) rep.record(1.9 - chk.order, 0.0);  // order >= 1.9
  for (double t : ts) rep.series.push_back({t, chk.residual, residual_tol, residual_tol - chk.residual, "residual"});
  rep.notes.push_back("second-order central differences; order estimated from h -> h/2");
  rep.finalize();
  return rep;
}

BoundReport dgg_check(const LaplacianMatrix& H, const MetricData& md, double lambda2,
                      const std::vector<double>& ts, double nu, std::uint64_t seed) {
  require_positive(ts, "dgg_check");
  if (!md.intrinsic_certified)
    throw std::invalid_argument("dgg_check: metric not certified intrinsic; rescale and certify first");
  if (md.size() != H.size())
    throw std::invalid_argument("dgg_check: metric and operator size mismatch");
  HeatSemigroup hs(H);
  const double l2 = hs.lambda2();
  if (std::abs(lambda2 - l2) > 1e-8 * (1.0 + std::abs(l2)))
    throw std::invalid_argument("dgg_check: supplied lambda2 does not match the smallest eigenvalue");
  const double s = md.jump_size;
  const int n = H.size();

  BoundReport rep;
  rep.check = "gaussian-kernel-bound";
  rep.params["lambda2"] = lambda2;
  rep.params["jump_size"] = s;
  rep.params["n"] = n;
  rep.params["seed"] = static_cast<double>(seed);
  rep.tolerance = tol::bound;

  std::vector<double> betas = {0.5, 1.0, 2.0};
  if (std::isfinite(nu)) betas.push_back(1.5 * nu + 0.1);
  for (std::size_t i = 0; i < betas.size(); ++i)
    rep.params["beta_" + std::to_string(i)] = betas[i];

  // Random disjoint support pairs for the two-set form.
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> set_pairs;
  if (n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 6; ++trial) {
      std::set<int> A, B;
      const int ka = 1 + pick(rng) % std::max(1, n / 2);
      const int kb = 1 + pick(rng) % std::max(1, n / 2);
      while (static_cast<int>(A.size()) < ka) A.insert(pick(rng));
      while (static_cast<int>(B.size()) < kb) {
        int v = pick(rng);
        if (!A.count(v)) B.insert(v);
      }
      if (!B.empty())
        set_pairs.emplace_back(std::vector<int>(A.begin(), A.end()),
                               std::vector<int>(B.begin(), B.end()));
    }
  }

  for (double t : ts) {
    const Mat P = hs.kernel(t);
    double worst_lhs = 0, worst_rhs = 0, worst_v = -kInf;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const double lhs = std::abs(P(x, y));
        const double d = md.dist(x, y);
        double rhs = 0;
        if (std::isfinite(d))
          rhs = std::exp(-lambda2 * t - (t / (s * s)) * zeta(s * d / t)) /
                std::sqrt(H.m(x) * H.m(y));
        const double v = rep.record(lhs, rhs);
        if (v > worst_v) {
          worst_v = v;
          worst_lhs = lhs;
          worst_rhs = rhs;
        }
        for (double beta : betas) {
          double rhsb = 0;
          if (std::isfinite(d))
            rhsb = std::exp(-beta * d + c_beta(beta, s) * t - lambda2 * t) /
                   std::sqrt(H.m(x) * H.m(y));
          rep.record(lhs, rhsb);
        }
      }
    }
    rep.series.push_back({t, worst_lhs, worst_rhs, worst_rhs - worst_lhs, "pointwise-worst"});

    // Two-set form: |<1_A, e^{-tH} 1_B>_m| <= sqrt(m(A) m(B)) e^{-l2 t - (t/s^2) zeta(s d(A,B)/t)}.
    const Mat prop = hs.propagator(t);
    for (const auto& [A, B] : set_pairs) {
      Vec indB = Vec::Zero(n);
      for (int b : B) indB(b) = 1.0;
      const Vec w = prop * indB;
      cplx ip(0, 0);
      double mA = 0, mB = 0, dAB = kInf;
      for (int a : A) {
        ip += H.m(a) * w(a);
        mA += H.m(a);
      }
      for (int b : B) mB += H.m(b);
      for (int a : A)
        for (int b : B) dAB = std::min(dAB, md.dist(a, b));
      double rhs = 0;
      if (std::isfinite(dAB))
        rhs = std::sqrt(mA * mB) *
              std::exp(-lambda2 * t - (t / (s * s)) * zeta(s * dAB / t));
      rep.record(std::abs(ip), rhs);
    }
  }
  rep.notes.push_back("pointwise, exponential-weight, and two-set forms");
  rep.finalize();
  return rep;
}

BoundReport energy_monotonicity(const LaplacianMatrix& H, const MetricData& md,
                                const Vec& u0, const RVec& omega, double kappa,
                                const std::vector<double>& ts) {
  if (omega.size() != H.size() || u0.size() != H.size())
    throw std::invalid_argument("energy_monotonicity: size mismatch");
  for (int i = 0; i < omega.size(); ++i)
    if (!std::isfinite(omega(i)))
      throw std::invalid_argument("energy_monotonicity: weight function must be bounded");
  const double realized = realized_lipschitz(omega, md.dist);
  if (kappa < realized - 1e-12)
    throw std::invalid_argument(
        "energy_monotonicity: supplied Lipschitz constant " + fmt(kappa) +
        " is below the realized constant " + fmt(realized));
  std::vector<double> grid = ts;
  std::sort(grid.begin(), grid.end());
  if (grid.empty() || grid.front() < 0)
    throw std::invalid_argument("energy_monotonicity: need a nonnegative time grid");

  HeatSemigroup hs(H);
  const double l2 = hs.lambda2();
  const double s = md.jump_size;
  const double comp = 2.0 * c_beta(kappa / 2.0, s);

  BoundReport rep;
  rep.check = "weighted-energy-monotone";
  rep.params["kappa"] = kappa;
  rep.params["kappa_realized"] = realized;
  rep.params["lambda2"] = l2;
  rep.params["jump_size"] = s;
  rep.tolerance = tol::identity;

  auto energy = [&](double t) {
    const Vec u = hs.apply(t, u0);
    double e = 0;
    for (int i = 0; i < u.size(); ++i)
      e += H.m(i) * std::exp(omega(i)) * std::norm(u(i));
    return std::exp(2.0 * l2 * t - comp * t) * e;
  };

  double prev = energy(grid[0]);
  rep.series.push_back({grid[0], prev, prev, 0.0, "compensated-energy"});
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = energy(grid[i]);
    rep.record(cur, prev);
    rep.series.push_back({grid[i], cur, prev, prev - cur, "compensated-energy"});
    prev = cur;
  }
  rep.finalize();
  return rep;
}

BoundReport exhaustion_convergence(const SchrodingerData& sd,
                                   const std::vector<std::vector<int>>& nested_sets,
                                   const Vec& f, double t) {
  if (nested_sets.empty())
    throw std::invalid_argument("exhaustion_convergence: need at least one window");
  if (t < 0) throw std::invalid_argument("exhaustion_convergence: negative time");
  for (std::size_t i = 1; i < nested_sets.size(); ++i) {
    std::set<int> prev(nested_sets[i - 1].begin(), nested_sets[i - 1].end());
    std::set<int> cur(nested_sets[i].begin(), nested_sets[i].end());
    for (int v : prev)
      if (!cur.count(v))
        throw std::invalid_argument("exhaustion_convergence: windows are not nested at step " +
                                    std::to_string(i));
  }

  HeatSemigroup full(to_operator(sd));
  const Vec u = full.apply(t, f);

  BoundReport rep;
  rep.check = "exhaustion-convergence";
  rep.params["t"] = t;
  rep.params["n_windows"] = static_cast<double>(nested_sets.size());
  rep.params["lambda2_full"] = full.lambda2();
  rep.tolerance = 1e-9;

  double prev_err = kInf, prev_l2 = kInf;
  for (std::size_t i = 0; i < nested_sets.size(); ++i) {
    const auto& K = nested_sets[i];
    HeatSemigroup hsK(truncate(sd, K));
    Vec fK(K.size());
    for (std::size_t j = 0; j < K.size(); ++j) fK(j) = f(K[j]);
    const Vec uK = hsK.apply(t, fK);
    Vec ext = Vec::Zero(sd.size());
    for (std::size_t j = 0; j < K.size(); ++j) ext(K[j]) = uK(j);
    const double err = lp_vector_norm(ext - u, sd.m, 2.0);
    const double l2K = hsK.lambda2();
    if (i > 0) {
      rep.record(err, prev_err);
      rep.record(l2K, prev_l2);
    }
    rep.series.push_back({static_cast<double>(i), err, std::isfinite(prev_err) ? prev_err : err,
                          0.0, "restriction-error"});
    rep.series.push_back({static_cast<double>(i), l2K, std::isfinite(prev_l2) ? prev_l2 : l2K,
                          0.0, "bottom-eigenvalue"});
    prev_err = err;
    prev_l2 = l2K;
  }
  if (nested_sets.back().size() == static_cast<std::size_t>(sd.size())) {
    rep.record(prev_err, rep.tolerance);  // full window reproduces the host semigroup
    rep.notes.push_back("final window covers the host; final error " + fmt(prev_err));
  } else {
    rep.notes.push_back("final window does not cover the host; limit error may be nonzero");
  }
  rep.finalize();
  return rep;
}

BoundReport contraction_check(const LaplacianMatrix& H, double M, double C,
                              const std::vector<double>& p_grid,
                              const std::vector<double>& ts) {
  require_positive(ts, "contraction_check");
  if (M < 0 || C < 0)
    throw std::invalid_argument("contraction_check: M and C must be nonnegative");
  HeatSemigroup hs(H);
  const double l2 = hs.lambda2();
  const auto I = contraction_interval(M);

  BoundReport rep;
  rep.check = "semigroup-contraction-rate";
  rep.params["M"] = M;
  rep.params["C"] = C;
  rep.params["lambda2"] = l2;
  rep.params["interval_lo"] = I.first;
  rep.params["interval_hi"] = I.second;
  rep.tolerance = 1e-10;

  std::vector<double> ps = p_grid;
  if (M > 0) {
    ps.push_back(I.first);
    ps.push_back(I.second);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-12; }),
           ps.end());
  std::vector<double> admitted;
  for (double p : ps) {
    const bool inside = (M > 0) ? (p >= I.first - 1e-12 && p <= I.second + 1e-12)
                                : (p > 1.0);
    if (inside)
      admitted.push_back(p);
    else
      rep.notes.push_back("p = " + fmt(p) + " outside admissible interval, skipped");
  }
  if (admitted.empty()) {
    rep.notes.push_back("no admissible p in the grid");
    rep.finalize();
    return rep;
  }

  for (double t : ts) {
    const Mat T = hs.propagator(t);
    for (double p : admitted) {
      const double Dp = contraction_rate(p, M, C, l2);
      const double lhs = lp_operator_norm(T, H.m, p).lower;
      const double rhs = std::exp(-Dp * t);
      rep.record(lhs, rhs);
      rep.series.push_back({t, lhs, rhs, rhs - lhs, "p=" + fmt(p)});
      if (std::abs(p - 2.0) < 1e-12)
        rep.params["p2_gap"] =
            std::max(rep.params.count("p2_gap") ? rep.params["p2_gap"] : 0.0,
                     std::abs(lhs - std::exp(-l2 * t)));
    }
  }
  if (rep.params.count("p2_gap"))
    rep.notes.push_back("p = 2 norm agrees with exp(-lambda2 t) to " + fmt(rep.params["p2_gap"]));
  rep.finalize();
  return rep;
}

BoundReport domination_check(const SchrodingerData& sd, double K,
                             const std::vector<double>& ts) {
  require_positive(ts, "domination_check");
  double realized = -kInf;
  for (int x = 0; x < sd.size(); ++x) realized = std::max(realized, -sd.c(x) / sd.m(x));
  if (K < realized - 1e-12)
    throw std::invalid_argument("domination_check: K = " + fmt(K) +
                                " is below the realized potential lower bound " + fmt(realized));

  HeatSemigroup hs(to_operator(sd));
  HeatSemigroup hs_free(to_operator(free_version(sd)));
  const int n = sd.size();

  BoundReport rep;
  rep.check = "free-kernel-domination";
  rep.params["K"] = K;
  rep.params["K_realized"] = realized;
  rep.tolerance = tol::bound;
  rep.notes.push_back("slack normalized by max(1, rhs)");

  for (double t : ts) {
    const Mat P = hs.kernel(t);
    const Mat Pf = hs_free.kernel(t);
    const double amp = std::exp(K * t);
    double worst_lhs = 0, worst_rhs = 0, worst_v = -kInf;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const double lhs = std::abs(P(x, y));
        const double rhs = amp * Pf(x, y).real();
        const double v = rep.record(lhs / std::max(1.0, rhs), rhs > 1.0 ? 1.0 : rhs);
        if (v > worst_v) {
          worst_v = v;
          worst_lhs = lhs;
          worst_rhs = rhs;
        }
      }
      double mass = 0;
      for (int y = 0; y < n; ++y) mass += sd.m(y) * Pf(x, y).real();
      rep.record(mass, 1.0);
    }
    rep.series.push_back({t, worst_lhs, worst_rhs, worst_rhs - worst_lhs, "kernel-domination"});
    const double n11 = operator_norm_11(hs.propagator(t), sd.m);
    const double r11 = std::exp(K * t);
    rep.record(n11 / std::max(1.0, r11), r11 > 1.0 ? 1.0 : r11);
    rep.series.push_back({t, n11, r11, r11 - n11, "l1-norm"});
  }
  rep.finalize();
  return rep;
}

BoundReport l1_extension_check(const SchrodingerData& sd, const MetricData& md,
                               const GrowthFit& fit, const std::vector<double>& ts,
                               double margin) {
  require_positive(ts, "l1_extension_check");
  if (md.size() != sd.size())
    throw std::invalid_argument("l1_extension_check: metric and data size mismatch");
  const double beta = 1.5 * fit.nu + margin;
  const double s = md.jump_size;
  const double Msum = summability(md, sd.m, beta);
  const double Cb = c_beta(beta, s);
  HeatSemigroup hs(to_operator(sd));
  const double l2 = hs.lambda2();

  BoundReport rep;
  rep.check = "l1-semigroup-extension";
  rep.params["nu"] = fit.nu;
  rep.params["beta"] = beta;
  rep.params["summability"] = Msum;
  rep.params["C_beta"] = Cb;
  rep.params["lambda2"] = l2;
  rep.params["jump_size"] = s;
  rep.tolerance = tol::bound;
  rep.notes.push_back("slack normalized by max(1, rhs)");

  const std::vector<double> interp_ps = {1.5, 3.0, 4.0};
  for (double t : ts) {
    const Mat T = hs.propagator(t);
    const double lhs1 = operator_norm_11(T, sd.m);
    const double rhs1 = Msum * std::exp((Cb - l2) * t);
    rep.record(lhs1 / std::max(1.0, rhs1), rhs1 > 1.0 ? 1.0 : rhs1);
    rep.series.push_back({t, lhs1, rhs1, rhs1 - lhs1, "l1-norm"});
    for (double p : interp_ps) {
      const double r = std::min(p, p / (p - 1.0));
      const double theta = (2.0 - r) / r;
      const double lhsp = lp_operator_norm(T, sd.m, p).upper;
      const double rhsp = std::pow(Msum, theta) * std::exp((theta * Cb - l2) * t);
      rep.record(lhsp / std::max(1.0, rhsp), rhsp > 1.0 ? 1.0 : rhsp);
      rep.series.push_back({t, lhsp, rhsp, rhsp - lhsp, "interp-p=" + fmt(p)});
    }
  }
  // Spectral-gap comparison: bottom of the l2 spectrum vs real part bound for lp,
  // with the interpolation penalty (2-r)/(r s^2) (cosh(3 nu s/2) - 1) >= 0.
  for (double p : interp_ps) {
    const double r = std::min(p, p / (p - 1.0));
    const double penalty = ((2.0 - r) / r) * c_beta(1.5 * fit.nu, s);
    rep.record(l2, l2 + penalty);
    rep.notes.push_back("gap comparison p=" + fmt(p) + ": " + fmt(l2) + " <= " +
                        fmt(l2 + penalty) + " (penalty " + fmt(penalty) + ")");
  }
  rep.finalize();
  return rep;
}

}  // namespace hodgeheat
