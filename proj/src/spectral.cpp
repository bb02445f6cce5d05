#include "hodgeheat/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hodgeheat/cochain.hpp"
#include "hodgeheat/norms.hpp"

namespace hodgeheat {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int svd_rank(const SpMat& sp) {
  if (sp.rows() == 0 || sp.cols() == 0 || sp.nonZeros() == 0) return 0;
  const RMat dense = RMat(sp);
  Eigen::JacobiSVD<RMat> svd(dense);
  const auto& sv = svd.singularValues();
  const double cut = tol::rank * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

double block_norm_inf(const RMat& T) {
  double best = 0;
  for (int x = 0; x < T.rows(); ++x) {
    double acc = 0;
    for (int y = 0; y < T.cols(); ++y) acc += std::abs(T(x, y));
    best = std::max(best, acc);
  }
  return best;
}

}  // namespace

SpectralReport spectrum(const LaplacianMatrix& H) {
  Eigen::SelfAdjointEigenSolver<Mat> es(H.symmetrized());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigendecomposition failed");
  SpectralReport rep;
  rep.variant = H.variant;
  rep.degree = H.degree;
  rep.eigenvalues = es.eigenvalues();
  rep.lambda2 = rep.eigenvalues.size() ? rep.eigenvalues.minCoeff() : 0.0;
  const double norm = rep.eigenvalues.size() ? rep.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  rep.rank_tol_abs = tol::rank * norm;
  rep.kernel_dim = 0;
  rep.spectral_gap = 0;
  for (int i = 0; i < rep.eigenvalues.size(); ++i) {
    if (rep.eigenvalues(i) <= rep.rank_tol_abs)
      ++rep.kernel_dim;
    else if (rep.spectral_gap == 0)
      rep.spectral_gap = rep.eigenvalues(i);
  }
  return rep;
}

int betti(const WeightedComplex& cx, int k) {
  if (k < 0) throw std::invalid_argument("betti: degree must be nonnegative");
  if (!cx.has_block(k) || cx.block_size(k) == 0) return 0;
  const SpectralReport rep = spectrum(assemble_laplacian(cx, k, LapVariant::hodge));
  return rep.kernel_dim;
}

int betti_rank_oracle(const WeightedComplex& cx, int k) {
  if (k < 0) throw std::invalid_argument("betti_rank_oracle: degree must be nonnegative");
  if (!cx.has_block(k) || cx.block_size(k) == 0) return 0;
  const int dim_ck = cx.block_size(k);
  int rank_up = 0, rank_down = 0;
  if (cx.has_block(k + 1) && cx.block_size(k + 1) > 0)
    rank_up = svd_rank(coboundary_matrix(cx, k));
  if (k - 1 >= cx.min_degree() && cx.block_size(k - 1) > 0)
    rank_down = svd_rank(coboundary_matrix(cx, k - 1));
  return dim_ck - rank_up - rank_down;
}

std::vector<BoundReport> norm_bound_suite(const WeightedComplex& cx) {
  std::vector<BoundReport> out;
  const int kmin = cx.min_degree();
  const int kmax = cx.dim();

  // Per-simplex coface-mass ratios gamma/m.  The weight constants C and D and
  // every closed-form norm below draw on this one table, so an inequality that
  // is an equality in exact arithmetic compares equal in floating point too
  // instead of drifting an ulp across the bound.
  std::vector<RVec> ratio(kmax - kmin + 1);
  double Cconst = 0, Dconst = 0;
  for (int k = kmin; k <= kmax; ++k) {
    RVec& r = ratio[k - kmin];
    r = RVec::Zero(cx.block_size(k));
    for (int i = 0; i < cx.block_size(k); ++i) {
      r(i) = cx.gamma(k, i) / cx.weights(k)(i);
      Cconst = std::max(Cconst, r(i));
      Dconst = std::max(Dconst, (k + 2) * r(i));
    }
  }

  BoundReport rowsum;
  rowsum.check = "coboundary-sup-norm";
  rowsum.tolerance = tol::bound;
  BoundReport colsum;
  colsum.check = "boundary-l1-norm";
  colsum.tolerance = tol::bound;
  BoundReport cob1;
  cob1.check = "coboundary-l1-norm";
  cob1.params["C"] = Cconst;
  cob1.tolerance = tol::bound;
  BoundReport bndinf;
  bndinf.check = "boundary-sup-norm";
  bndinf.params["C"] = Cconst;
  bndinf.tolerance = tol::bound;

  for (int k = kmin; k <= kmax; ++k) {
    if (cx.block_size(k) == 0) continue;
    if (k + 1 <= kmax && cx.block_size(k + 1) > 0) {
      // Row sums of the coboundary block are counts of +-1 entries: exact.
      const double ninf = block_norm_inf(RMat(coboundary_matrix(cx, k)));
      rowsum.record(ninf, k + 2.0);
      rowsum.series.push_back({static_cast<double>(k), ninf, k + 2.0, k + 2.0 - ninf, "deg"});
      // The weighted column sum of the coboundary at a simplex is its coface
      // mass over its own mass, the same quantity that defines C.
      double n11 = 0;
      for (int i = 0; i < cx.block_size(k); ++i) n11 = std::max(n11, ratio[k - kmin](i));
      cob1.record(n11, Cconst);
      cob1.series.push_back({static_cast<double>(k), n11, Cconst, Cconst - n11, "deg"});
    }
    if (k - 1 >= kmin && cx.block_size(k - 1) > 0) {
      // Conjugating the boundary block by the weight diagonals leaves the
      // integer incidence matrix, so its weighted column sum at a simplex is
      // exactly the simplex's face count.
      double n11 = 0;
      for (int i = 0; i < cx.block_size(k); ++i)
        n11 = std::max(n11, static_cast<double>(cx.faces(k, i).size()));
      colsum.record(n11, k + 1.0);
      colsum.series.push_back({static_cast<double>(k), n11, k + 1.0, k + 1.0 - n11, "deg"});
      // The plain row sum of the boundary at a simplex is again its coface
      // mass over its own mass.
      double ninf = 0;
      for (int x = 0; x < cx.block_size(k - 1); ++x)
        ninf = std::max(ninf, ratio[k - 1 - kmin](x));
      bndinf.record(ninf, Cconst);
      bndinf.series.push_back({static_cast<double>(k), ninf, Cconst, Cconst - ninf, "deg"});
    }
  }
  rowsum.finalize();
  colsum.finalize();
  cob1.finalize();
  bndinf.finalize();
  out.push_back(rowsum);
  out.push_back(colsum);
  out.push_back(cob1);
  out.push_back(bndinf);

  BoundReport lap;
  lap.check = "laplacian-p-norms";
  lap.params["D"] = Dconst;
  lap.tolerance = tol::bound;
  const double pvals[] = {1.0, 2.0, kInf};
  for (int k = std::max(kmin, 0); k <= kmax; ++k) {
    if (cx.block_size(k) == 0) continue;
    // Half-Laplacian row sums in closed form: two distinct same-degree
    // simplices determine their common coface (the union) and common face
    // (the intersection) uniquely, so no two incidence products land on the
    // same matrix entry and the absolute row sums telescope to
    //   sum_y |up(x, y)|   = (k+2) gamma(x)/m(x),
    //   sum_y |down(x, y)| = sum over faces rho of x of gamma(rho)/m(rho).
    // Self-adjointness in the weighted pairing makes the weighted column sums
    // equal to the row sums, so these cover p = 1 and p = inf at once, through
    // the same ratio table that defines D.  The full Laplacian mixes the two
    // halves with genuine cancellation, so it is measured from the matrix.
    double up_val = 0, down_val = 0;
    for (int i = 0; i < cx.block_size(k); ++i)
      up_val = std::max(up_val, (k + 2) * ratio[k - kmin](i));
    if (k - 1 >= kmin)
      for (int i = 0; i < cx.block_size(k); ++i) {
        double acc = 0;
        for (const auto& f : cx.faces(k, i)) acc += ratio[k - 1 - kmin](f.idx);
        down_val = std::max(down_val, acc);
      }
    for (LapVariant v : {LapVariant::up, LapVariant::down, LapVariant::hodge}) {
      const LaplacianMatrix L = assemble_laplacian(cx, k, v);
      const double cap = (v == LapVariant::hodge) ? 2.0 * Dconst : Dconst;
      for (double p : pvals) {
        double n;
        if (v == LapVariant::hodge || p == 2.0)
          n = lp_operator_norm(L.A, L.m, p).upper;
        else
          n = (v == LapVariant::up) ? up_val : down_val;
        lap.record(n, cap);
        lap.series.push_back({static_cast<double>(k), n, cap, cap - n,
                              to_string(v) + "-p=" + (std::isfinite(p) ? fmt(p) : "inf")});
      }
    }
  }
  lap.finalize();
  out.push_back(lap);

  BoundReport ident;
  ident.check = "indicator-energy-identity";
  ident.tolerance = tol::identity;
  for (int k = kmin; k <= kmax; ++k) {
    for (int i = 0; i < cx.block_size(k); ++i) {
      const Simplex& s = cx.simplices(k)[i];
      const Cochain ind = Cochain::indicator(cx, s);
      const Cochain d = coboundary(ind);
      const double g = cx.gamma(k, i);
      for (double p : {1.0, 2.0, 3.0}) {
        const double lhs = std::pow(lp_norm(d, p), p);
        ident.record(std::abs(lhs - g), 0.0);
      }
    }
  }
  ident.finalize();
  out.push_back(ident);
  return out;
}

BoundReport rayleigh_consistency(const LaplacianMatrix& H, int nsamples,
                                 std::uint64_t seed) {
  Eigen::SelfAdjointEigenSolver<Mat> es(H.symmetrized());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("rayleigh_consistency: eigendecomposition failed");
  const double l2 = es.eigenvalues().minCoeff();
  const int n = H.size();

  BoundReport rep;
  rep.check = "rayleigh-variational-consistency";
  rep.params["lambda2"] = l2;
  rep.params["nsamples"] = nsamples;
  rep.tolerance = 1e-8;

  auto rayleigh = [&](const Vec& f) {
    cplx num(0, 0);
    double den = 0;
    const Vec Af = H.A * f;
    for (int i = 0; i < n; ++i) {
      num += H.m(i) * Af(i) * std::conj(f(i));
      den += H.m(i) * std::norm(f(i));
    }
    return num.real() / den;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sample_min = kInf;
  for (int k = 0; k < nsamples; ++k) {
    Vec f(n);
    for (int i = 0; i < n; ++i) f(i) = cplx(gauss(rng), gauss(rng));
    const double r = rayleigh(f);
    sample_min = std::min(sample_min, r);
    rep.record(l2, r);  // lambda2 is a lower bound for every quotient
  }
  // The bottom eigenvector attains the infimum.
  int argmin = 0;
  es.eigenvalues().minCoeff(&argmin);
  Vec ground = es.eigenvectors().col(argmin);
  for (int i = 0; i < n; ++i) ground(i) /= std::sqrt(H.m(i));  // undo symmetrization
  const double attained = rayleigh(ground);
  rep.record(std::abs(attained - l2), 0.0);
  rep.params["sample_min"] = sample_min;
  rep.params["attained"] = attained;
  rep.notes.push_back("bottom eigenvector quotient " + fmt(attained) + " vs eigenvalue " + fmt(l2));
  rep.finalize();
  return rep;
}

}  // namespace hodgeheat
