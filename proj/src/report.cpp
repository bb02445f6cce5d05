#include "hodgeheat/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "json.hpp"

#include "hodgeheat/form_bound.hpp"
#include "hodgeheat/growth.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/norms.hpp"
#include "hodgeheat/resolvent.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/spectral.hpp"

namespace hodgeheat {

namespace {

Vec random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec f(n);
  for (int i = 0; i < n; ++i) f(i) = cplx(g(rng), g(rng));
  return f;
}

std::string deg_key(int k, const char* name) {
  return "deg" + std::to_string(k) + "." + name;
}

MetricData metric_for_degree(const WeightedComplex& cx, int k) {
  if (k == 0) return scaled_intrinsic_metric(cx);
  return simplex_metric(cx, k);
}

/// Nested prefix windows K_1 subset K_2 subset K_3 = all sites.
std::vector<std::vector<int>> prefix_windows(int n) {
  std::vector<std::vector<int>> out;
  for (int part = 1; part <= 3; ++part) {
    const int len = std::max(1, (n * part) / 3);
    std::vector<int> w(part == 3 ? n : len);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i);
    out.push_back(std::move(w));
  }
  return out;
}

void run_degree_checks(const WeightedComplex& cx, int k, const std::vector<double>& ts,
                       std::uint64_t seed, ComplexVerdict& out) {
  const LaplacianMatrix H = assemble_laplacian(cx, k, LapVariant::hodge);
  const int n = H.size();
  if (n == 0) return;
  const std::uint64_t base = seed + 1000ull * static_cast<std::uint64_t>(k + 1);

  const SchrodingerData sd = extract_schrodinger(H);
  const MetricData md = certify_intrinsic(sd, metric_for_degree(cx, k));
  const SpectralReport sp = spectrum(H);
  const GrowthFit fit = fit_growth(md, sd.m);

  out.hypotheses[deg_key(k, "lambda2")] = sp.lambda2;
  out.hypotheses[deg_key(k, "kernel_dim")] = sp.kernel_dim;
  out.hypotheses[deg_key(k, "growth_nu")] = fit.nu;
  out.hypotheses[deg_key(k, "growth_C")] = fit.C;
  out.hypotheses[deg_key(k, "jump_size")] = md.jump_size;
  out.hypotheses[deg_key(k, "metric_rescale")] = md.rescale;

  auto tag = [&](BoundReport rep) {
    rep.params["degree"] = static_cast<double>(k);
    out.reports.push_back(std::move(rep));
  };

  // Heat equation, Gaussian kernel bound, energy monotonicity.  The residual
  // budget is the certified Taylor constant C h^2 with
  // C = lambda_max^3 ||f||_{2,m} / (6 sqrt(min m)), floored at 1e-7.
  {
    const Vec f = random_state(n, base + 11);
    const double h = 1e-4;
    const double lmax = sp.eigenvalues(sp.eigenvalues.size() - 1);
    const double fd_scale = std::pow(lmax, 3) * lp_vector_norm(f, H.m, 2.0) /
                            (6.0 * std::sqrt(H.m.minCoeff()));
    const double fd_tol = std::max(1e-7, 2.0 * fd_scale * h * h);
    tag(verify_heat_equation(H, f, ts, h, fd_tol));
  }
  tag(dgg_check(H, md, sp.lambda2, ts, fit.nu, base + 13));

  const double lip = 0.5;
  RVec omega(n);
  for (int v = 0; v < n; ++v) {
    const double d0 = md.dist(v, 0);
    omega(v) = lip * std::min(std::isfinite(d0) ? d0 : fit.diameter, fit.diameter);
  }
  tag(energy_monotonicity(H, md, random_state(n, base + 17), omega, lip, ts));

  // Exhaustion along nested prefix windows.  Error monotonicity rests on
  // kernel positivity plus a nonnegative state, so it runs on the vertex
  // block with phases +1; the eigenvalue half is degree-free.
  if (k == 0) {
    Vec f = random_state(n, base + 19);
    for (int i = 0; i < n; ++i) f(i) = std::abs(f(i));
    tag(exhaustion_convergence(sd, prefix_windows(n), f, 1.0));
  }

  // Form bound -> contraction rates.
  const FormBoundEstimate fb = estimate_form_bound(sd, {0.0, 0.5, 1.0, 2.0, 5.0});
  out.hypotheses[deg_key(k, "form_bound_M")] = fb.M_pair;
  out.hypotheses[deg_key(k, "form_bound_C")] = fb.C_pair;
  out.hypotheses[deg_key(k, "form_indefinite")] = fb.form_indefinite ? 1.0 : 0.0;
  tag(contraction_check(H, fb.M_pair, fb.C_pair, {1.5, 2.0, 3.0, 4.0}, ts));

  // Domination by the phase-free potential-free semigroup.
  double Kdom = -kInf;
  for (int x = 0; x < n; ++x) Kdom = std::max(Kdom, -sd.c(x) / sd.m(x));
  out.hypotheses[deg_key(k, "domination_K")] = Kdom;
  tag(domination_check(sd, Kdom, ts));

  // l1 extension under the growth fit, plus the growth consequences.
  tag(l1_extension_check(sd, md, fit, ts));
  {
    const DegreeGrowthReport dg = degree_growth_consistency(md, sd.m, fit, sd.b);
    BoundReport rep;
    rep.check = "growth-degree-consistency";
    rep.params["nu"] = fit.nu;
    rep.params["C"] = fit.C;
    rep.params["max_degree"] = static_cast<double>(dg.max_degree);
    rep.params["degree_bound"] = dg.degree_bound;
    rep.tolerance = tol::bound;
    rep.record(dg.max_count_ratio, 1.0);
    rep.record(static_cast<double>(dg.max_degree), dg.degree_bound);
    rep.finalize();
    tag(std::move(rep));
  }

  // Resolvent chain.
  const double eps = 0.5;
  const double Ceps = c_beta(eps, md.jump_size);
  tag(resolvent_decay_check(H, md, eps, -(1.0 + Ceps)));
  const ZRect rect;
  tag(weighted_resolvent_check(H, md, rect, eps, 10, base + 23));
  if (n <= 32) tag(squared_resolvent_check(H, md, rect, eps));

  // Variational consistency of the bottom eigenvalue.
  tag(rayleigh_consistency(H, 1000, base + 29));
}

BoundReport harmonic_rank_report(const WeightedComplex& cx) {
  BoundReport rep;
  rep.check = "harmonic-rank-consistency";
  rep.tolerance = 0.0;
  for (int k = 0; k <= cx.dim(); ++k) {
    const int b = betti(cx, k);
    const int oracle = betti_rank_oracle(cx, k);
    rep.params["betti_" + std::to_string(k)] = static_cast<double>(b);
    rep.record(std::abs(static_cast<double>(b - oracle)), 0.0);
  }
  if (cx.augmented()) rep.notes.push_back("augmented complex: reduced counts");
  rep.finalize();
  return rep;
}

}  // namespace

ComplexVerdict run_all_checks(const WeightedComplex& cx, const std::vector<double>& ts,
                              std::uint64_t seed) {
  ComplexVerdict v;
  v.seed = seed;
  v.t_grid = ts.empty() ? default_time_grid() : ts;
  for (int k = 0; k <= cx.dim(); ++k) {
    if (cx.block_size(k) == 0) continue;
    run_degree_checks(cx, k, v.t_grid, seed, v);
  }
  std::vector<BoundReport> suite = norm_bound_suite(cx);
  for (BoundReport& rep : suite) v.reports.push_back(std::move(rep));
  v.reports.push_back(harmonic_rank_report(cx));
  v.all_pass = std::all_of(v.reports.begin(), v.reports.end(),
                           [](const BoundReport& r) { return r.pass; });
  return v;
}

std::string verdict_to_json(const ComplexVerdict& v) {
  nlohmann::json j;
  j["all_pass"] = v.all_pass;
  j["seed"] = v.seed;
  j["t_grid"] = v.t_grid;
  nlohmann::json hyp = nlohmann::json::object();
  for (const auto& [key, val] : v.hypotheses) hyp[key] = val;
  j["hypotheses"] = hyp;
  nlohmann::json reports = nlohmann::json::array();
  for (const BoundReport& rep : v.reports)
    reports.push_back(nlohmann::json::parse(bound_report_to_json(rep)));
  j["reports"] = reports;
  return j.dump(2);
}

}  // namespace hodgeheat
