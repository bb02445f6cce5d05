#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hodgeheat/bounds.hpp"
#include "hodgeheat/form_bound.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/norms.hpp"
#include "hodgeheat/resolvent.hpp"
#include "hodgeheat/schrodinger.hpp"

using namespace hodgeheat;

namespace {

Vec random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Vec f(n);
  for (int i = 0; i < n; ++i) f[i] = cplx(g(rng), g(rng));
  return f;
}

LaplacianMatrix vertex_laplacian(const WeightedComplex& cx) {
  return assemble_laplacian(cx, 0, LapVariant::up);
}

MetricData certified_vertex_metric(const WeightedComplex& cx,
                                   const SchrodingerData& sd) {
  return certify_intrinsic(sd, scaled_intrinsic_metric(cx));
}

}  // namespace

TEST_CASE("heat kernel of one edge in closed form") {
  HeatSemigroup hs(vertex_laplacian(fixtures::single_edge()));
  for (double t : {0.1, 0.5, 1.0, 2.0, 7.0}) {
    Mat p = hs.kernel(t);
    double expect = (1.0 - std::exp(-2.0 * t)) / 2.0;
    CHECK(std::abs(p(0, 1) - cplx(expect, 0)) <= 1e-13);
    CHECK(std::abs(p(0, 0) - cplx(1.0 - expect, 0)) <= 1e-13);
  }
  CHECK(std::real(hs.kernel(1.0)(0, 1)) ==
        doctest::Approx(0.43233235838169365).epsilon(1e-14));

  // time zero: point masses scaled by the site measure
  WeightedComplex we = fixtures::weighted_edge();
  HeatSemigroup whs(assemble_laplacian(we, 0, LapVariant::up));
  Mat p0 = whs.kernel(0.0);
  CHECK(std::abs(p0(0, 0) - cplx(1.0, 0)) <= 1e-13);          // 1/m(0)
  CHECK(std::abs(p0(1, 1) - cplx(0.5, 0)) <= 1e-13);          // 1/m(1)
  CHECK(std::abs(p0(0, 1)) <= 1e-13);
}

TEST_CASE("propagators compose along time") {
  HeatSemigroup hs(
      assemble_laplacian(fixtures::hollow_triangle(), 1, LapVariant::hodge));
  for (double t : {0.3, 0.7})
    for (double s : {0.3, 0.7}) {
      Mat lhs = hs.propagator(t + s);
      Mat rhs = hs.propagator(t) * hs.propagator(s);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
  // symmetry of the kernel in the site measure
  Mat p = hs.kernel(0.9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(p(i, j) - std::conj(p(j, i))) <= 1e-12);
}

TEST_CASE("evolved states solve the evolution equation to second order") {
  LaplacianMatrix L = vertex_laplacian(fixtures::single_edge());
  HeatSemigroup hs(L);
  Vec f(2);
  f << cplx(1, 0), cplx(0, 0);
  HeatEqCheck chk = heat_equation_residuals(hs, L, f, {0.25, 0.5, 1.0, 2.0});
  CHECK(chk.pass);
  CHECK(chk.residual <= 1e-7);
  CHECK((chk.order >= 1.9 || chk.residual <= 1e-13));

  BoundReport rep = verify_heat_equation(L, f, {0.25, 0.5, 1.0, 2.0});
  CHECK(rep.pass);
}

TEST_CASE("hyperbolic rate functions") {
  CHECK(zeta(0.0) == 0.0);
  CHECK(zeta(1.0) == doctest::Approx(0.4671600246464479).epsilon(1e-15));
  CHECK(std::isinf(zeta(kInf)));
  // convexity-driven growth: increasing in r
  double prev = 0;
  for (double r : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    double z = zeta(r);
    CHECK(z > prev);
    prev = z;
  }
  CHECK(c_beta(1.0, 1.0) == doctest::Approx(0.5430806348152437).epsilon(1e-15));
  // small jump limit: (cosh(bs)-1)/s^2 -> b^2/2
  CHECK(c_beta(2.0, 1e-6) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("gaussian off-diagonal kernel bound on one edge") {
  WeightedComplex edge = fixtures::single_edge();
  LaplacianMatrix L = vertex_laplacian(edge);
  SchrodingerData sd = extract_schrodinger(L);
  MetricData md = certified_vertex_metric(edge, sd);
  REQUIRE(md.jump_size == 1.0);

  // closed forms at t = 1: kernel value vs the rate-function bound
  double lhs = 0.43233235838169365;
  double rhs = std::exp(-zeta(1.0));
  CHECK(rhs == doctest::Approx(0.6267797821736528).epsilon(1e-14));
  CHECK(lhs <= rhs);

  BoundReport rep = dgg_check(L, md, 0.0, default_time_grid());
  CHECK(rep.pass);
  CHECK(rep.max_violation <= 1e-12);
}

TEST_CASE("gaussian kernel bound across fixtures and degrees") {
  for (const WeightedComplex& cx : fixtures::standard_fixtures()) {
    LaplacianMatrix L = vertex_laplacian(cx);
    SchrodingerData sd = extract_schrodinger(L);
    MetricData md = certified_vertex_metric(cx, sd);
    HeatSemigroup hs(L);
    BoundReport rep = dgg_check(L, md, hs.lambda2(), default_time_grid());
    CHECK(rep.pass);
  }
  // degree-1 block through the chain metric
  WeightedComplex tri = fixtures::hollow_triangle();
  LaplacianMatrix L1 = assemble_laplacian(tri, 1, LapVariant::hodge);
  SchrodingerData sd1 = extract_schrodinger(L1);
  MetricData md1 = certify_intrinsic(sd1, simplex_metric(tri, 1));
  HeatSemigroup hs1(L1);
  BoundReport rep1 = dgg_check(L1, md1, hs1.lambda2(), default_time_grid());
  CHECK(rep1.pass);

  // uncertified metrics are refused
  CHECK_THROWS_AS(
      dgg_check(L1, simplex_metric(tri, 1), hs1.lambda2(), default_time_grid()),
      std::invalid_argument);
}

TEST_CASE("compensated weighted energy is nonincreasing") {
  WeightedComplex p6 = fixtures::path_n(6);
  LaplacianMatrix L = vertex_laplacian(p6);
  SchrodingerData sd = extract_schrodinger(L);
  MetricData md = certified_vertex_metric(p6, sd);

  std::uint64_t seed = 600;
  std::vector<double> ts = linspace(0.05, 3.0, 25);
  for (int rep = 0; rep < 10; ++rep) {
    Vec u0 = random_state(6, ++seed);
    const double lip = 0.4;
    RVec omega(6);
    for (int v = 0; v < 6; ++v) omega[v] = lip * md.dist(v, 0);
    BoundReport r = energy_monotonicity(L, md, u0, omega, lip, ts);
    CHECK(r.pass);
    CHECK(r.max_violation <= 1e-10);
  }

  // declaring a Lipschitz budget below the realized slope is rejected
  RVec steep(6);
  for (int v = 0; v < 6; ++v) steep[v] = 2.0 * md.dist(v, 0);
  CHECK_THROWS_AS(energy_monotonicity(L, md, random_state(6, 77), steep, 0.5, ts),
                  std::invalid_argument);
}

TEST_CASE("phaseless kernel dominates and contracts mass") {
  // degree-1 block of the hollow triangle carries genuine signs
  LaplacianMatrix L1 =
      assemble_laplacian(fixtures::hollow_triangle(), 1, LapVariant::hodge);
  SchrodingerData sd1 = extract_schrodinger(L1);
  CHECK(sd1.real_magnetic());

  SchrodingerData free1 = free_version(sd1);
  CHECK(free1.c.cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(free1.b(i, j) == sd1.b(i, j));
      if (i != j && free1.b(i, j) > 0) CHECK(free1.o(i, j) == cplx(1, 0));
    }

  double K = std::max(0.0, (-sd1.c.cwiseQuotient(sd1.m)).maxCoeff());
  BoundReport rep = domination_check(sd1, K, logspace(0.05, 20, 40));
  CHECK(rep.pass);

  // Markov property of the free kernel on a connected complex
  HeatSemigroup hs(to_operator(free1));
  for (double t : {0.5, 2.0}) {
    Mat p = hs.kernel(t);
    for (int x = 0; x < 3; ++x) {
      double mass = 0;
      for (int y = 0; y < 3; ++y) mass += free1.m[y] * std::real(p(x, y));
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  // an undersized K is refused (the hypothesis c/m >= -K fails)
  SchrodingerData neg = sd1;
  neg.c[0] = -2.0;
  CHECK_THROWS_AS(domination_check(neg, 0.5, {1.0}), std::invalid_argument);
}

TEST_CASE("unit-norm extension of the semigroup bound") {
  for (const WeightedComplex& cx :
       {fixtures::single_edge(), fixtures::path_n(5)}) {
    LaplacianMatrix L = vertex_laplacian(cx);
    SchrodingerData sd = extract_schrodinger(L);
    MetricData md = certified_vertex_metric(cx, sd);
    GrowthFit fit = fit_growth(md, sd.m);
    BoundReport rep = l1_extension_check(sd, md, fit, logspace(0.1, 10, 20));
    CHECK(rep.pass);
  }
}

TEST_CASE("semigroup contraction across the admissible exponent range") {
  // 3 I on the filled-triangle edges: explicit spectral bottom at 3
  LaplacianMatrix L =
      assemble_laplacian(fixtures::filled_triangle(), 1, LapVariant::hodge);
  HeatSemigroup hs(L);
  CHECK(hs.lambda2() == doctest::Approx(3.0).epsilon(1e-12));

  for (double t : {0.2, 1.0, 3.0})
    CHECK(operator_norm_22(hs.propagator(t), L.m) ==
          doctest::Approx(std::exp(-3.0 * t)).epsilon(1e-10));

  SchrodingerData sd = extract_schrodinger(L);
  FormBoundEstimate est = estimate_form_bound(sd, {0.0, 1.0});
  CHECK(est.M_pair == 0.0);

  BoundReport rep = contraction_check(L, est.M_pair, est.C_pair,
                                      {1.2, 1.5, 2.0, 3.0, 6.0},
                                      logspace(0.05, 5, 15));
  CHECK(rep.pass);
  CHECK_THROWS_AS(contraction_check(L, -1.0, 0.0, {2.0}, {1.0}),
                  std::invalid_argument);
}

TEST_CASE("restricted evolutions converge along a growing window") {
  WeightedComplex p10 = fixtures::path_n(10);
  SchrodingerData sd = extract_schrodinger(vertex_laplacian(p10));

  std::vector<std::vector<int>> windows;
  for (int cut : {4, 7, 10}) {
    std::vector<int> w(cut);
    for (int i = 0; i < cut; ++i) w[i] = i;
    windows.push_back(w);
  }
  Vec f = Vec::Zero(10);
  f[0] = cplx(1, 0);
  f[3] = cplx(0.5, 0);
  BoundReport rep = exhaustion_convergence(sd, windows, f, 1.0);
  CHECK(rep.pass);

  // non-nested windows are rejected
  CHECK_THROWS_AS(exhaustion_convergence(sd, {{0, 1}, {2, 3}}, f, 1.0),
                  std::invalid_argument);
}

TEST_CASE("resolvent of one edge in closed form") {
  LaplacianMatrix L = vertex_laplacian(fixtures::single_edge());
  ResolventKernel rk = resolvent(L, cplx(-1.0, 0.0));
  CHECK(std::abs(rk.G(0, 0) - cplx(2.0 / 3.0, 0)) <= 1e-12);
  CHECK(std::abs(rk.G(0, 1) - cplx(1.0 / 3.0, 0)) <= 1e-12);
  CHECK(std::abs(rk.G(1, 1) - cplx(2.0 / 3.0, 0)) <= 1e-12);
  CHECK(rk.identity_residual <= 1e-9);

  // spectral parameters on the spectrum are refused
  CHECK_THROWS_AS(resolvent(L, cplx(0.0, 0.0)), std::invalid_argument);

  WeightedComplex edge = fixtures::single_edge();
  SchrodingerData sd = extract_schrodinger(L);
  MetricData md = certified_vertex_metric(edge, sd);
  BoundReport rep = resolvent_decay_check(L, md, 0.5, -1.0);
  CHECK(rep.pass);
  // alpha must clear the curvature constant of the weight family
  CHECK_THROWS_AS(resolvent_decay_check(L, md, 0.5, -0.05), std::invalid_argument);
}

TEST_CASE("weighted resolvent sweeps stay bounded") {
  WeightedComplex p5 = fixtures::path_n(5);
  LaplacianMatrix L = vertex_laplacian(p5);
  SchrodingerData sd = extract_schrodinger(L);
  MetricData md = certified_vertex_metric(p5, sd);

  ZRect rect;  // default: Re in [-2,-0.5], Im in [-1,1], 5x5
  BoundReport wrep = weighted_resolvent_check(L, md, rect, 0.5);
  CHECK(wrep.pass);
  CHECK(std::isfinite(wrep.params.at("sup_weighted")));
  CHECK(wrep.params.at("sup_weighted") > 0);
  CHECK(wrep.params.count("ratio") == 1);

  BoundReport sq = squared_resolvent_check(L, md, rect, 0.5);
  CHECK(sq.pass);
}

TEST_CASE("operator norms on the weighted spaces") {
  LaplacianMatrix L = vertex_laplacian(fixtures::single_edge());
  CHECK(operator_norm_11(L.A, L.m) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(operator_norm_inf(L.A) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(operator_norm_22(L.A, L.m) == doctest::Approx(2.0).epsilon(1e-12));

  // p in {1, 2, inf} is exact; interpolated p carries a genuine bracket
  for (double p : {1.0, 2.0, kInf}) {
    NormBracket nb = lp_operator_norm(L.A, L.m, p);
    CHECK(nb.exact);
    CHECK(nb.lower == nb.upper);
  }
  LaplacianMatrix W =
      assemble_laplacian(fixtures::weighted_edge(), 0, LapVariant::up);
  for (double p : {1.5, 3.0}) {
    NormBracket nb = lp_operator_norm(W.A, W.m, p);
    CHECK_FALSE(nb.exact);
    CHECK(nb.lower <= nb.upper * (1.0 + 1e-12));
    CHECK(nb.lower > 0);
  }

  // vector norms against direct sums
  RVec m(2);
  m << 1.0, 2.0;
  Vec f(2);
  f << cplx(3, 4), cplx(1, 0);
  CHECK(lp_vector_norm(f, m, 1.0) == doctest::Approx(5.0 + 2.0).epsilon(1e-14));
  CHECK(lp_vector_norm(f, m, 2.0) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-14));
  CHECK(lp_vector_norm(f, m, kInf) == doctest::Approx(5.0).epsilon(1e-14));
}
