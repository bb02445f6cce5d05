#include "hodgeheat/form_bound.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hodgeheat {

namespace {

Mat full_form_matrix(const SchrodingerData& sd) {
  Mat A = reassemble(sd).A;
  Mat S = sd.m.asDiagonal().toDenseMatrix().cast<cplx>() * A;
  return ((S + S.adjoint()) / 2.0).eval();
}

RVec c_minus(const SchrodingerData& sd) {
  return sd.c.cwiseMin(0.0).cwiseAbs();
}

}  // namespace

FormBoundEstimate estimate_form_bound(const SchrodingerData& sd,
                                      const std::vector<double>& C_grid) {
  const int n = sd.size();
  FormBoundEstimate est;

  const Mat Sfull = full_form_matrix(sd);
  const RVec cm = c_minus(sd);
  Mat Sq = Sfull;
  for (int i = 0; i < n; ++i) Sq(i, i) += cm(i);  // positive-part form matrix

  Eigen::SelfAdjointEigenSolver<Mat> es_full(Sfull);
  est.min_form_eig = es_full.eigenvalues().minCoeff();
  const double scale_full = std::max(1.0, es_full.eigenvalues().cwiseAbs().maxCoeff());
  est.form_indefinite = est.min_form_eig < -tol::identity * scale_full;

  Eigen::SelfAdjointEigenSolver<Mat> es_q(Sq);
  const RVec qev = es_q.eigenvalues();
  const double qscale = std::max(qev.cwiseAbs().maxCoeff(), 1.0);
  const double rank_cut = tol::rank_form * qscale;

  std::vector<int> comp, kern;
  for (int i = 0; i < n; ++i) (qev(i) > rank_cut ? comp : kern).push_back(i);

  for (double C : C_grid) {
    if (C < 0) throw std::invalid_argument("estimate_form_bound: C must be >= 0");
    RVec nd = cm - C * sd.m;  // diagonal of N = diag(c_-) - C diag(m)
    FormBoundEntry e;
    e.C = C;

    // Kernel obstruction: N must be <= 0 on ker q or no finite M exists.
    double kmax = 0;
    if (!kern.empty()) {
      Mat K(n, static_cast<int>(kern.size()));
      for (size_t a = 0; a < kern.size(); ++a) K.col(a) = es_q.eigenvectors().col(kern[a]);
      Mat Nk = K.adjoint() * nd.asDiagonal().toDenseMatrix().cast<cplx>() * K;
      Eigen::SelfAdjointEigenSolver<Mat> ek(((Nk + Nk.adjoint()) / 2.0).eval());
      kmax = ek.eigenvalues().maxCoeff();
    }
    if (kmax > tol::identity * std::max(1.0, cm.maxCoeff())) {
      e.infinite = true;
      e.M = kInf;
      est.entries.push_back(e);
      est.witnesses.emplace_back(Vec::Zero(n));
      continue;
    }

    if (comp.empty()) {
      e.M = 0;
      est.entries.push_back(e);
      est.witnesses.emplace_back(Vec::Zero(n));
      continue;
    }
    // Whitened pencil on the complement: eigs of L^{-1/2} V' N V L^{-1/2}.
    Mat V(n, static_cast<int>(comp.size()));
    RVec lam(static_cast<int>(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a) {
      V.col(a) = es_q.eigenvectors().col(comp[a]);
      lam(a) = qev(comp[a]);
    }
    Mat Nw = V.adjoint() * nd.asDiagonal().toDenseMatrix().cast<cplx>() * V;
    for (int r = 0; r < Nw.rows(); ++r)
      for (int c = 0; c < Nw.cols(); ++c)
        Nw(r, c) /= std::sqrt(lam(r)) * std::sqrt(lam(c));
    Eigen::SelfAdjointEigenSolver<Mat> ew(((Nw + Nw.adjoint()) / 2.0).eval());
    int top;
    ew.eigenvalues().maxCoeff(&top);
    e.M = std::max(0.0, ew.eigenvalues()(top));
    Vec witness = Vec::Zero(n);
    for (size_t a = 0; a < comp.size(); ++a)
      witness += V.col(a) * ew.eigenvectors()(a, top) / std::sqrt(lam(a));
    est.entries.push_back(e);
    est.witnesses.push_back(witness);
  }

  // Upgrade one entry to a pair valid for the full form,
  // verified by a PSD check of M*Q + C*diag(m) - diag(c_-) and bisected up
  // when border cases leave a small deficit.
  auto pair_valid = [&](double M, double C) {
    Mat T = M * Sfull;
    for (int i = 0; i < n; ++i) T(i, i) += C * sd.m(i) - cm(i);
    Eigen::SelfAdjointEigenSolver<Mat> et(((T + T.adjoint()) / 2.0).eval());
    return et.eigenvalues().minCoeff() >= -tol::identity * std::max(1.0, qscale * std::max(M, 1.0));
  };
  const double khat = (sd.c.array() / sd.m.array()).minCoeff() < 0
                          ? -(sd.c.array() / sd.m.array()).minCoeff()
                          : 0.0;
  bool found = false;
  if (!est.form_indefinite) {
    for (size_t i = 0; i < est.entries.size() && !found; ++i) {
      const auto& e = est.entries[i];
      if (e.infinite || e.M >= 1.0 - 1e-9) continue;
      double M = e.M / (1.0 - e.M), C = e.C / (1.0 - e.M);
      if (pair_valid(M, C)) {
        est.M_pair = M;
        est.C_pair = C;
        found = true;
      } else {
        double lo = M, hi = std::max(1.0, 4 * M);
        while (hi < 1e9 && !pair_valid(hi, C)) hi *= 4;
        if (hi < 1e9) {
          for (int it = 0; it < 80; ++it) {
            double mid = (lo + hi) / 2;
            (pair_valid(mid, C) ? hi : lo) = mid;
          }
          est.M_pair = hi;
          est.C_pair = C;
          found = true;
        }
      }
    }
  }
  if (!found) {
    est.M_pair = 0.0;
    est.C_pair = khat;
  }
  return est;
}

double cp_coefficient(double p) {
  if (p < 1) throw std::invalid_argument("cp_coefficient: p must be >= 1");
  return 4.0 * (p - 1.0) / (p * p);
}

namespace {
double kappa_val(double p, double t) {
  return (1.0 + t) * (1.0 + std::pow(t, p - 1.0)) /
         ((1.0 + std::pow(t, p / 2.0)) * (1.0 + std::pow(t, p / 2.0)));
}
}  // namespace

double kappa_p(double p) {
  if (p < 1) throw std::invalid_argument("kappa_p: p must be >= 1");
  double best_t = 0.5, best = kappa_val(p, 0.5);
  // log-spaced sweep toward 0 plus a linear sweep of the interior
  for (int i = 0; i <= 320; ++i) {
    double t = std::pow(10.0, -16.0 + 16.0 * i / 320.0);
    if (t >= 1.0) continue;
    double v = kappa_val(p, t);
    if (v > best) { best = v; best_t = t; }
  }
  for (int i = 1; i < 2000; ++i) {
    double t = i / 2000.0;
    double v = kappa_val(p, t);
    if (v > best) { best = v; best_t = t; }
  }
  // golden-section refinement around the best grid point
  double lo = std::max(best_t * 0.5, 1e-300), hi = std::min(best_t * 2.0, 1.0 - 1e-12);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = kappa_val(p, x1), f2 = kappa_val(p, x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a); f2 = kappa_val(p, x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a); f1 = kappa_val(p, x1);
    }
  }
  best = std::max(best, std::max(f1, f2));
  return best;
}

double pform_lhs(const SchrodingerData& sd, const Vec& f, double p) {
  const int n = sd.size();
  Vec g(n);
  for (int i = 0; i < n; ++i) {
    double a = std::abs(f(i));
    g(i) = a == 0 ? cplx{} : f(i) * std::pow(a, p - 2.0);
  }
  return std::real(positive_form(sd, f, g));
}

double pform_rhs_energy(const SchrodingerData& sd, const Vec& f, double p) {
  const int n = sd.size();
  Vec g(n);
  for (int i = 0; i < n; ++i) {
    double a = std::abs(f(i));
    g(i) = a == 0 ? cplx{} : f(i) * std::pow(a, (p - 2.0) / 2.0);
  }
  return positive_form(sd, g);
}

std::pair<double, double> contraction_interval(double M) {
  if (M < 0) throw std::invalid_argument("contraction_interval: M must be >= 0");
  if (M == 0) return {1.0, kInf};
  double mid = 2.0 * (M + 1.0) / M;
  double half = 2.0 * std::sqrt(M + 1.0) / M;
  return {mid - half, mid + half};
}

double contraction_rate(double p, double M, double C, double lambda2) {
  double cp = cp_coefficient(p);
  return (cp - M * (1.0 - cp)) * lambda2 - C * (1.0 - cp);
}

}  // namespace hodgeheat
