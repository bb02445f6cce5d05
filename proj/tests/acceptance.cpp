// Acceptance battery: thirteen numbered criteria, one verdict line each.
// Exit status is the number of failed criteria (0 = all green).

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "hodgeheat/bounds.hpp"
#include "hodgeheat/cochain.hpp"
#include "hodgeheat/form_bound.hpp"
#include "hodgeheat/forman.hpp"
#include "hodgeheat/growth.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/norms.hpp"
#include "hodgeheat/resolvent.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/spectral.hpp"

using namespace hodgeheat;

namespace {

int failures = 0;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct Host {
  std::string name;
  WeightedComplex cx;
};

std::vector<Host> fixture_hosts() {
  std::vector<Host> out;
  out.push_back({"single-edge", fixtures::single_edge()});
  out.push_back({"hollow-triangle", fixtures::hollow_triangle()});
  out.push_back({"filled-triangle", fixtures::filled_triangle()});
  out.push_back({"path-5", fixtures::path_n(5)});
  out.push_back({"weighted-edge", fixtures::weighted_edge()});
  return out;
}

std::vector<Host> random_hosts(int count, int max_total) {
  std::vector<Host> out;
  for (int seed = 1; seed <= count; ++seed)
    out.push_back({"random-" + std::to_string(seed),
                   fixtures::random_small_complex(seed, max_total)});
  return out;
}

Cochain random_unit_cochain(const WeightedComplex& cx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Cochain w(cx);
  for (int k = cx.min_degree(); k <= cx.dim(); ++k) {
    Vec& b = w.block(k);
    for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = cplx(g(rng), g(rng));
  }
  double n = lp_norm(w, 2.0);
  if (n > 0)
    for (int k = cx.min_degree(); k <= cx.dim(); ++k) w.block(k) /= n;
  return w;
}

Vec random_unit_vec(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Vec f(n);
  for (int i = 0; i < n; ++i) f[i] = cplx(g(rng), g(rng));
  double nn = f.norm();
  if (nn > 0) f /= nn;
  return f;
}

/// Certified intrinsic metric for one degree block of a complex.
MetricData block_metric(const WeightedComplex& cx, int k, const SchrodingerData& sd) {
  MetricData raw = (k == 0) ? scaled_intrinsic_metric(cx) : simplex_metric(cx, k);
  return certify_intrinsic(sd, std::move(raw));
}

using Outcome = std::pair<bool, std::string>;

void criterion(int id, const std::string& label, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s criterion %2d: %s  [%s]\n", out.first ? "PASS" : "FAIL", id,
              label.c_str(), out.second.c_str());
  std::fflush(stdout);
  if (!out.first) ++failures;
}

// --- 1 -----------------------------------------------------------------------

Outcome chain_identity_and_adjointness() {
  std::vector<Host> hosts = fixture_hosts();
  for (Host& h : random_hosts(50, 60)) hosts.push_back(std::move(h));

  double worst_dd = 0, worst_adj = 0;
  std::uint64_t seed = 10000;
  for (const Host& h : hosts) {
    const WeightedComplex& cx = h.cx;
    for (int k = cx.min_degree(); k + 2 <= cx.dim(); ++k) {
      SpMat dd = coboundary_matrix(cx, k + 1) * coboundary_matrix(cx, k);
      for (int c = 0; c < dd.outerSize(); ++c)
        for (SpMat::InnerIterator it(dd, c); it; ++it)
          worst_dd = std::max(worst_dd, std::abs(it.value()));
    }
    for (int rep = 0; rep < 5; ++rep) {
      Cochain w = random_unit_cochain(cx, ++seed);
      Cochain eta = random_unit_cochain(cx, ++seed);
      cplx lhs = inner_product(coboundary(w), eta);
      cplx rhs = inner_product(w, boundary(eta));
      worst_adj = std::max(worst_adj, std::abs(lhs - rhs));
    }
  }
  bool ok = worst_dd == 0.0 && worst_adj <= 1e-10;
  return {ok, "max |dd entry| = " + fmt(worst_dd) +
                  ", max adjointness residual = " + fmt(worst_adj) + " over " +
                  std::to_string(hosts.size()) + " complexes"};
}

// --- 2 -----------------------------------------------------------------------

Outcome harmonic_dimension_oracle() {
  struct Expect {
    std::string name;
    WeightedComplex cx;
    std::vector<int> want;
  };
  std::vector<Expect> cases;
  cases.push_back({"hollow-triangle", fixtures::hollow_triangle(), {1, 1}});
  cases.push_back({"filled-triangle", fixtures::filled_triangle(), {1, 0, 0}});
  cases.push_back({"torus", fixtures::torus(), {1, 2, 1}});

  for (const Expect& e : cases) {
    for (int k = 0; k <= e.cx.dim(); ++k) {
      int hk = betti(e.cx, k);
      int rk = betti_rank_oracle(e.cx, k);
      if (hk != e.want[k] || rk != e.want[k])
        return {false, e.name + " degree " + std::to_string(k) + ": kernel " +
                           std::to_string(hk) + ", rank oracle " +
                           std::to_string(rk) + ", expected " +
                           std::to_string(e.want[k])};
    }
  }
  return {true, "kernel dims = rank oracle = (1,1), (1,0,0), (1,2,1)"};
}

// --- 3 -----------------------------------------------------------------------

Outcome roundtrip_and_curvature_identity() {
  std::vector<Host> hosts = fixture_hosts();
  hosts.push_back({"torus", fixtures::torus()});
  for (Host& h : random_hosts(50, 40)) hosts.push_back(std::move(h));

  double worst_rt = 0, worst_cv = 0;
  int bad = 0;
  for (const Host& h : hosts) {
    const WeightedComplex& cx = h.cx;
    for (int k = 0; k <= cx.dim(); ++k) {
      for (LapVariant v : {LapVariant::up, LapVariant::down, LapVariant::hodge}) {
        LaplacianMatrix L = assemble_laplacian(cx, k, v);
        LaplacianMatrix back = reassemble(extract_schrodinger(L));
        double scale = std::max(1.0, L.A.cwiseAbs().maxCoeff());
        worst_rt =
            std::max(worst_rt, (back.A - L.A).cwiseAbs().maxCoeff() / scale);
      }
      SchrodingerData sd =
          extract_schrodinger(assemble_laplacian(cx, k, LapVariant::hodge));
      const auto& simplices = cx.simplices(k);
      for (int i = 0; i < cx.block_size(k); ++i) {
        double curv = forman_curvature(cx, simplices[i]);
        double pot = sd.c[i] / sd.m[i];
        double gap = std::abs(curv - pot);
        worst_cv = std::max(worst_cv, gap);
        if (gap > 1e-10) {
          ++bad;
          std::printf(
              "  counterexample: host=%s degree=%d simplex=%s curvature=%.17g "
              "potential=%.17g\n",
              h.name.c_str(), k, simplices[i].key().c_str(), curv, pot);
        }
      }
    }
  }
  bool ok = worst_rt <= 1e-12 && bad == 0;
  return {ok, "max round-trip defect = " + fmt(worst_rt) +
                  ", max curvature/potential gap = " + fmt(worst_cv)};
}

// --- 4 -----------------------------------------------------------------------

Outcome gaussian_kernel_bounds() {
  std::vector<Host> hosts = fixture_hosts();
  for (Host& h : random_hosts(20, 60)) hosts.push_back(std::move(h));

  const std::vector<double> ts = default_time_grid();  // 40 log points, [0.05, 20]
  double worst = -kInf;
  long blocks = 0;
  for (const Host& h : hosts) {
    for (int k = 0; k <= h.cx.dim(); ++k) {
      LaplacianMatrix L = assemble_laplacian(h.cx, k, LapVariant::hodge);
      SchrodingerData sd = extract_schrodinger(L);
      MetricData md = block_metric(h.cx, k, sd);
      HeatSemigroup hs(L);
      BoundReport rep = dgg_check(L, md, hs.lambda2(), ts);
      worst = std::max(worst, rep.max_violation);
      ++blocks;
      if (!rep.pass)
        return {false, h.name + " degree " + std::to_string(k) + ": violation " +
                           fmt(rep.max_violation)};
    }
  }
  bool ok = worst <= 1e-12;
  return {ok, "max violation = " + fmt(worst) + " over " +
                  std::to_string(blocks) + " degree blocks, 40 times each"};
}

// --- 5 -----------------------------------------------------------------------

Outcome semigroup_contraction() {
  struct Block {
    std::string name;
    SchrodingerData sd;
  };
  std::vector<Block> blocks;
  for (const Host& h : fixture_hosts())
    for (int k = 0; k <= h.cx.dim(); ++k)
      blocks.push_back(
          {h.name + "/deg" + std::to_string(k),
           extract_schrodinger(assemble_laplacian(h.cx, k, LapVariant::hodge))});
  {
    WeightedComplex donut = fixtures::torus();
    for (int k = 0; k <= 2; ++k)
      blocks.push_back(
          {"torus/deg" + std::to_string(k),
           extract_schrodinger(assemble_laplacian(donut, k, LapVariant::hodge))});
    // a hand-dented potential keeps the negative-potential branch honest
    SchrodingerData dented = extract_schrodinger(
        assemble_laplacian(fixtures::hollow_triangle(), 1, LapVariant::hodge));
    dented.c[0] = -1.0;
    blocks.push_back({"dented-ring/deg1", std::move(dented)});
  }

  const std::vector<double> ts = default_time_grid();
  double worst = -kInf, worst_p2 = 0;
  bool finite_interval_seen = false;
  for (Block& blk : blocks) {
    LaplacianMatrix H = to_operator(blk.sd);
    FormBoundEstimate est = estimate_form_bound(blk.sd, {0.0, 0.5, 1.0, 2.0, 5.0});

    std::vector<double> ps;
    if (est.M_pair > 0) {
      finite_interval_seen = true;
      auto I = contraction_interval(est.M_pair);
      for (int i = 0; i < 7; ++i)
        ps.push_back(I.first + (I.second - I.first) * i / 6.0);  // endpoints in
    } else {
      ps = {1.05, 1.2, 1.5, 2.0, 3.0, 6.0, 12.0};  // spans the open (1, inf)
    }
    ps.push_back(2.0);

    BoundReport rep = contraction_check(H, est.M_pair, est.C_pair, ps, ts);
    worst = std::max(worst, rep.max_violation);
    if (!rep.params.count("p2_gap"))
      return {false, blk.name + ": p = 2 missing from the admitted grid"};
    worst_p2 = std::max(worst_p2, rep.params["p2_gap"]);
    if (!rep.pass)
      return {false, blk.name + ": violation " + fmt(rep.max_violation) +
                         " with M = " + fmt(est.M_pair) +
                         ", C = " + fmt(est.C_pair)};
  }
  bool ok = worst <= 1e-10 && worst_p2 <= 1e-10 && finite_interval_seen;
  return {ok, "max violation = " + fmt(worst) +
                  ", max |p2 bracket - exp(-lambda2 t)| = " + fmt(worst_p2) +
                  ", finite exponent interval exercised: " +
                  (finite_interval_seen ? "yes" : "no")};
}

// --- 6 -----------------------------------------------------------------------

Outcome energy_monotone() {
  struct Blk {
    std::string name;
    WeightedComplex cx;
    int degree;
    LapVariant variant;
  };
  std::vector<Blk> blks;
  for (const Host& h : fixture_hosts())
    blks.push_back({h.name + "/deg0", h.cx, 0, LapVariant::up});
  blks.push_back(
      {"hollow-triangle/deg1", fixtures::hollow_triangle(), 1, LapVariant::hodge});
  blks.push_back(
      {"filled-triangle/deg1", fixtures::filled_triangle(), 1, LapVariant::hodge});

  const std::vector<double> ts = linspace(0.05, 4.0, 25);
  double worst = -kInf;
  std::uint64_t seed = 60000;
  for (const Blk& blk : blks) {
    LaplacianMatrix L = assemble_laplacian(blk.cx, blk.degree, blk.variant);
    SchrodingerData sd = extract_schrodinger(L);
    MetricData md = block_metric(blk.cx, blk.degree, sd);

    std::mt19937_64 rng(++seed);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      Vec u0 = random_unit_vec(L.size(), ++seed);
      RVec omega(L.size());
      for (int i = 0; i < L.size(); ++i) omega[i] = g(rng);
      // realized Lipschitz constant over finite-distance pairs
      double lip = 0;
      for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y)
          if (std::isfinite(md.dist(x, y)) && md.dist(x, y) > 0)
            lip = std::max(lip, std::abs(omega[x] - omega[y]) / md.dist(x, y));
      const double kappa = lip * (1.0 + uni(rng)) + 1e-6;
      BoundReport rep = energy_monotonicity(L, md, u0, omega, kappa, ts);
      worst = std::max(worst, rep.max_violation);
      if (!rep.pass)
        return {false, blk.name + " trial " + std::to_string(trial) +
                           ": violation " + fmt(rep.max_violation)};
    }
  }
  return {worst <= 1e-10,
          "max increase = " + fmt(worst) + " across 20 trials per block"};
}

// --- 7 -----------------------------------------------------------------------

Outcome free_kernel_domination() {
  std::vector<Host> hosts = fixture_hosts();
  hosts.push_back({"torus", fixtures::torus()});
  for (Host& h : random_hosts(10, 60)) hosts.push_back(std::move(h));

  const std::vector<double> ts = default_time_grid();
  double worst = -kInf;
  for (const Host& h : hosts) {
    for (int k = 0; k <= h.cx.dim(); ++k) {
      SchrodingerData sd =
          extract_schrodinger(assemble_laplacian(h.cx, k, LapVariant::hodge));
      double realized = 0;
      for (int i = 0; i < sd.size(); ++i)
        realized = std::max(realized, -sd.c[i] / sd.m[i]);
      for (double K : {realized, realized + 0.7}) {
        BoundReport rep = domination_check(sd, K, ts);
        worst = std::max(worst, rep.max_violation);
        if (!rep.pass)
          return {false, h.name + " degree " + std::to_string(k) + " (K = " +
                             fmt(K) + "): violation " + fmt(rep.max_violation)};
      }
    }
  }
  return {worst <= 1e-12, "max violation = " + fmt(worst) +
                              " (entrywise, Markov mass, operator bound)"};
}

// --- 8 -----------------------------------------------------------------------

Outcome l1_extension() {
  const std::vector<double> ts = logspace(0.05, 10, 25);
  double worst = -kInf;
  long blocks = 0;
  for (const Host& h : fixture_hosts()) {
    for (int k = 0; k <= h.cx.dim(); ++k) {
      SchrodingerData sd =
          extract_schrodinger(assemble_laplacian(h.cx, k, LapVariant::hodge));
      MetricData md = block_metric(h.cx, k, sd);
      GrowthFit fit = fit_growth(md, sd.m);
      BoundReport rep = l1_extension_check(sd, md, fit, ts, 0.1);
      worst = std::max(worst, rep.max_violation);
      ++blocks;
      if (!rep.pass)
        return {false, h.name + " degree " + std::to_string(k) + ": violation " +
                           fmt(rep.max_violation)};
    }
  }
  return {true, "max violation = " + fmt(worst) + " over " +
                    std::to_string(blocks) +
                    " blocks at beta = 3 nu / 2 + 0.1, with interpolation"};
}

// --- 9 -----------------------------------------------------------------------

Outcome resolvent_chain() {
  struct Blk {
    std::string name;
    WeightedComplex cx;
    int degree;
  };
  std::vector<Blk> blks;
  for (const Host& h : fixture_hosts()) blks.push_back({h.name, h.cx, 0});
  blks.push_back({"hollow-triangle-deg1", fixtures::hollow_triangle(), 1});
  blks.push_back({"filled-triangle-deg1", fixtures::filled_triangle(), 1});

  double worst_decay = -kInf, worst_ratio = 0;
  for (const Blk& b : blks) {
    LaplacianMatrix L = assemble_laplacian(b.cx, b.degree, LapVariant::hodge);
    SchrodingerData sd = extract_schrodinger(L);
    MetricData md = block_metric(b.cx, b.degree, sd);
    const double eps = 0.5;
    const double Ceps = c_beta(eps, md.jump_size);
    const double alpha = -(1.0 + Ceps);

    BoundReport decay = resolvent_decay_check(L, md, eps, alpha);
    worst_decay = std::max(worst_decay, decay.max_violation);
    if (!decay.pass)
      return {false, b.name + ": decay violation " + fmt(decay.max_violation)};

    ZRect rect;  // 5x5 over Re in [-2, -0.5], Im in [-1, 1]
    BoundReport wrep = weighted_resolvent_check(L, md, rect, eps, 10);
    if (!wrep.pass || !std::isfinite(wrep.params.at("sup_weighted")))
      return {false, b.name + ": weighted resolvent sweep not finite"};
    worst_ratio = std::max(worst_ratio, wrep.params.at("ratio"));

    BoundReport sq = squared_resolvent_check(L, md, rect, eps);
    if (!sq.pass)
      return {false, b.name + ": squared-kernel decay violation " +
                         fmt(sq.max_violation)};
  }
  // the <= 2x weighted/unweighted comparison is observed, not asserted
  return {true, "decay violation = " + fmt(worst_decay) +
                    "; weighted/unweighted sup ratio <= " + fmt(worst_ratio) +
                    " (observed; 2x reference)"};
}

// --- 10 ----------------------------------------------------------------------

Outcome norm_inequalities() {
  std::vector<Host> hosts = fixture_hosts();
  hosts.push_back({"torus", fixtures::torus()});
  for (Host& h : random_hosts(50, 60)) hosts.push_back(std::move(h));

  double min_slack = kInf, worst_ident = 0;
  for (const Host& h : hosts) {
    for (const BoundReport& rep : norm_bound_suite(h.cx)) {
      if (rep.check == "indicator-energy-identity") {
        worst_ident = std::max(worst_ident, rep.max_violation);
        if (!rep.pass)
          return {false, h.name + ": energy identity residual " +
                             fmt(rep.max_violation)};
      } else {
        min_slack = std::min(min_slack, -rep.max_violation);
        if (!rep.pass || rep.max_violation > 0)
          return {false, h.name + " " + rep.check + ": slack " +
                             fmt(-rep.max_violation)};
      }
    }
  }
  return {true, "min slack = " + fmt(min_slack + 0.0) + " across six families on " +
                    std::to_string(hosts.size()) +
                    " complexes; identity residual = " + fmt(worst_ident)};
}

// --- 11 ----------------------------------------------------------------------

Outcome heat_equation_fd() {
  const std::vector<double> ts = {0.25, 0.5, 1.0, 2.0};
  double worst_res = 0, worst_order = kInf;
  for (const Host& h : fixture_hosts()) {
    LaplacianMatrix L = assemble_laplacian(h.cx, 0, LapVariant::up);
    HeatSemigroup hs(L);
    Vec f = Vec::Zero(L.size());
    f[0] = cplx(1, 0);
    HeatEqCheck chk = heat_equation_residuals(hs, L, f, ts, 1e-4, 1e-7);
    worst_res = std::max(worst_res, chk.residual);
    worst_order = std::min(worst_order, chk.order);
    if (!chk.pass || chk.residual > 1e-7 || chk.order < 1.9)
      return {false, h.name + ": residual " + fmt(chk.residual) + ", order " +
                         fmt(chk.order)};
  }
  return {true, "max residual = " + fmt(worst_res) +
                    " at step 1e-4, min refinement order = " + fmt(worst_order)};
}

// --- 12 ----------------------------------------------------------------------

Outcome exhaustion_convergence_large() {
  struct Case {
    std::string name;
    WeightedComplex cx;
  };
  std::vector<Case> cases;
  cases.push_back({"path-50", fixtures::path_n(50)});
  cases.push_back({"grid-10x10", generate_grid(10, 10)});

  for (const Case& c : cases) {
    SchrodingerData sd =
        extract_schrodinger(assemble_laplacian(c.cx, 0, LapVariant::up));
    const int n = sd.size();
    std::vector<std::vector<int>> windows;
    for (int cut : {n / 4, n / 2, (3 * n) / 4, n}) {
      std::vector<int> w(cut);
      for (int i = 0; i < cut; ++i) w[i] = i;
      windows.push_back(std::move(w));
    }
    Vec f = Vec::Zero(n);
    f[0] = cplx(1, 0);
    f[1] = cplx(0.5, 0);
    BoundReport rep = exhaustion_convergence(sd, windows, f, 1.0);
    if (!rep.pass)
      return {false, c.name + ": violation " + fmt(rep.max_violation)};
  }
  return {true, "restriction error and bottom eigenvalue nonincreasing over 4 "
                "nested windows on both hosts (tolerance 1e-9)"};
}

// --- 13 ----------------------------------------------------------------------

Outcome pform_sandwich() {
  std::vector<std::pair<std::string, SchrodingerData>> blocks;
  blocks.emplace_back("hollow-triangle/deg1",
                      extract_schrodinger(assemble_laplacian(
                          fixtures::hollow_triangle(), 1, LapVariant::hodge)));
  blocks.emplace_back("weighted-edge/deg0",
                      extract_schrodinger(assemble_laplacian(
                          fixtures::weighted_edge(), 0, LapVariant::hodge)));
  blocks.emplace_back("torus/deg1",
                      extract_schrodinger(assemble_laplacian(
                          fixtures::torus(), 1, LapVariant::hodge)));
  {
    SchrodingerData dented = extract_schrodinger(assemble_laplacian(
        fixtures::hollow_triangle(), 1, LapVariant::hodge));
    dented.c[0] = -1.0;
    blocks.emplace_back("dented-ring/deg1", std::move(dented));
  }

  const std::vector<double> ps = {1.2, 1.5, 2.0, 3.0, 6.0};
  double worst_lower = -kInf, worst_upper = -kInf;
  std::uint64_t seed = 130000;
  for (const auto& [name, sd] : blocks) {
    for (double p : ps) {
      const double cp = cp_coefficient(p);
      const double kap = kappa_p(p);
      for (int rep = 0; rep < 1000; ++rep) {
        Vec f = random_unit_vec(sd.size(), ++seed);
        double lhs = pform_lhs(sd, f, p);
        double rhs = pform_rhs_energy(sd, f, p);
        worst_lower = std::max(worst_lower, cp * rhs - lhs);   // want <= 1e-10
        worst_upper = std::max(worst_upper, lhs - kap * rhs);  // want <= 1e-10
      }
    }
  }
  const double k2 = kappa_p(2.0);
  const double k1 = kappa_p(1.0);
  bool ok = worst_lower <= 1e-10 && worst_upper <= 1e-10 && k2 == 1.0 &&
            std::abs(k1 - 2.0) <= 1e-6;
  return {ok, "worst lower-slack deficit = " + fmt(worst_lower) +
                  ", worst upper-slack deficit = " + fmt(worst_upper) +
                  "; kappa(2) = " + fmt(k2) + ", kappa(1) = " + fmt(k1)};
}

}  // namespace

int main() {
  criterion(1, "chain identity and weighted adjointness", chain_identity_and_adjointness);
  criterion(2, "harmonic dimensions against the rank oracle", harmonic_dimension_oracle);
  criterion(3, "operator round trip and curvature identity", roundtrip_and_curvature_identity);
  criterion(4, "gaussian off-diagonal kernel bounds", gaussian_kernel_bounds);
  criterion(5, "semigroup contraction across the exponent interval", semigroup_contraction);
  criterion(6, "compensated energy monotonicity", energy_monotone);
  criterion(7, "free-kernel domination", free_kernel_domination);
  criterion(8, "l1 extension under volume growth", l1_extension);
  criterion(9, "resolvent decay chain", resolvent_chain);
  criterion(10, "incidence and operator norm inequalities", norm_inequalities);
  criterion(11, "finite-difference heat-equation residual", heat_equation_fd);
  criterion(12, "nested-truncation convergence", exhaustion_convergence_large);
  criterion(13, "powered-state dissipativity sandwich", pform_sandwich);

  if (failures == 0)
    std::printf("all 13 criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
