#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/spectral.hpp"

using namespace hodgeheat;

TEST_CASE("eigenvalue summaries of the small blocks") {
  SpectralReport edge =
      spectrum(assemble_laplacian(fixtures::single_edge(), 0, LapVariant::up));
  REQUIRE(edge.eigenvalues.size() == 2);
  CHECK(std::abs(edge.eigenvalues[0]) <= 1e-12);
  CHECK(edge.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(edge.lambda2) <= 1e-12);
  CHECK(edge.kernel_dim == 1);
  CHECK(edge.spectral_gap == doctest::Approx(2.0).epsilon(1e-12));

  SpectralReport ring =
      spectrum(assemble_laplacian(fixtures::hollow_triangle(), 1, LapVariant::hodge));
  REQUIRE(ring.eigenvalues.size() == 3);
  CHECK(std::abs(ring.eigenvalues[0]) <= 1e-12);
  CHECK(ring.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ring.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ring.kernel_dim == 1);

  SpectralReport full =
      spectrum(assemble_laplacian(fixtures::filled_triangle(), 1, LapVariant::hodge));
  CHECK(full.kernel_dim == 0);
  CHECK(full.lambda2 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("harmonic dimensions match the incidence-rank count") {
  WeightedComplex ring = fixtures::hollow_triangle();
  CHECK(betti(ring, 0) == 1);
  CHECK(betti(ring, 1) == 1);
  CHECK(betti_rank_oracle(ring, 0) == 1);
  CHECK(betti_rank_oracle(ring, 1) == 1);

  WeightedComplex full = fixtures::filled_triangle();
  CHECK(betti(full, 0) == 1);
  CHECK(betti(full, 1) == 0);
  CHECK(betti(full, 2) == 0);

  WeightedComplex donut = fixtures::torus();
  CHECK(betti(donut, 0) == 1);
  CHECK(betti(donut, 1) == 2);
  CHECK(betti(donut, 2) == 1);
  for (int k = 0; k <= 2; ++k)
    CHECK(betti(donut, k) == betti_rank_oracle(donut, k));

  CHECK(betti(fixtures::path_n(7), 0) == 1);
  CHECK(betti(fixtures::path_n(7), 1) == 0);

  // weights shift eigenvalues but never the harmonic dimension
  for (std::uint64_t seed = 201; seed <= 212; ++seed) {
    WeightedComplex cx = fixtures::random_small_complex(seed, 60);
    for (int k = 0; k <= cx.dim(); ++k) {
      INFO("seed ", seed, " degree ", k);
      CHECK(betti(cx, k) == betti_rank_oracle(cx, k));
    }
  }
}

TEST_CASE("augmented complexes count reduced harmonic dimensions") {
  BuildOptions on;
  on.augment = AugmentMode::on;
  WeightedComplex cx = build_complex({{0, 1, 2}}, {}, on);
  // connected: the extra face absorbs the constant component
  CHECK(betti(cx, 0) == 0);
  CHECK(betti(cx, 0) == betti_rank_oracle(cx, 0));

  WeightedComplex two = build_complex({{0, 1}, {2, 3}}, {}, on);
  CHECK(betti(two, 0) == 1);  // two components, one reduced class
  CHECK(betti(two, 0) == betti_rank_oracle(two, 0));
}

TEST_CASE("incidence and operator norm inequalities hold everywhere") {
  std::vector<WeightedComplex> hosts = fixtures::standard_fixtures();
  hosts.push_back(fixtures::torus());
  for (std::uint64_t seed = 221; seed <= 228; ++seed)
    hosts.push_back(fixtures::random_small_complex(seed, 60));

  std::set<std::string> seen;
  for (const WeightedComplex& cx : hosts) {
    for (const BoundReport& rep : norm_bound_suite(cx)) {
      INFO("check ", rep.check, " violation ", rep.max_violation);
      CHECK(rep.pass);
      seen.insert(rep.check);
    }
  }
  // the suite covers all six inequality families
  CHECK(seen.count("coboundary-sup-norm") == 1);
  CHECK(seen.count("coboundary-l1-norm") == 1);
  CHECK(seen.count("boundary-sup-norm") == 1);
  CHECK(seen.count("boundary-l1-norm") == 1);
  CHECK(seen.count("laplacian-p-norms") == 1);
  CHECK(seen.count("indicator-energy-identity") == 1);
}

TEST_CASE("bottom eigenvalue is a certified Rayleigh-quotient floor") {
  for (const WeightedComplex& cx : fixtures::standard_fixtures()) {
    for (int k = 0; k <= cx.dim(); ++k) {
      BoundReport rep =
          rayleigh_consistency(assemble_laplacian(cx, k, LapVariant::hodge), 500);
      INFO("degree ", k, " violation ", rep.max_violation);
      CHECK(rep.pass);
    }
  }
  BoundReport donut = rayleigh_consistency(
      assemble_laplacian(fixtures::torus(), 1, LapVariant::hodge), 500);
  CHECK(donut.pass);
}
