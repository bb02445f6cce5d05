#include "hodgeheat/norms.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hodgeheat {

double operator_norm_11(const Mat& T, const RVec& m) {
  double best = 0;
  for (int y = 0; y < T.cols(); ++y) {
    double col = 0;
    for (int x = 0; x < T.rows(); ++x) col += m(x) * std::abs(T(x, y));
    best = std::max(best, col / m(y));
  }
  return best;
}

double operator_norm_inf(const Mat& T) {
  double best = 0;
  for (int x = 0; x < T.rows(); ++x) {
    double row = 0;
    for (int y = 0; y < T.cols(); ++y) row += std::abs(T(x, y));
    best = std::max(best, row);
  }
  return best;
}

double operator_norm_22(const Mat& T, const RVec& m) {
  const int n = static_cast<int>(T.rows());
  Mat S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S(i, j) = std::sqrt(m(i) / m(j)) * T(i, j);
  Eigen::JacobiSVD<Mat> svd(S);
  return svd.singularValues()(0);
}

double operator_norm_2_inf(const Mat& T, const RVec& m) {
  double best = 0;
  for (int x = 0; x < T.rows(); ++x) {
    double acc = 0;
    for (int y = 0; y < T.cols(); ++y) acc += std::norm(T(x, y)) / m(y);
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

double operator_norm_1_2(const Mat& T, const RVec& m) {
  double best = 0;
  for (int y = 0; y < T.cols(); ++y) {
    double acc = 0;
    for (int x = 0; x < T.rows(); ++x) acc += m(x) * std::norm(T(x, y));
    best = std::max(best, std::sqrt(acc) / m(y));
  }
  return best;
}

double lp_vector_norm(const Vec& f, const RVec& m, double p) {
  if (p < 1) throw std::invalid_argument("lp_vector_norm: p must be >= 1");
  if (!std::isfinite(p)) {
    double best = 0;
    for (int i = 0; i < f.size(); ++i) best = std::max(best, std::abs(f(i)));
    return best;
  }
  double acc = 0;
  for (int i = 0; i < f.size(); ++i) acc += m(i) * std::pow(std::abs(f(i)), p);
  return std::pow(acc, 1.0 / p);
}

namespace {

// sign(v)|v|^{p-1} applied entrywise (the duality map for the p-norm).
Vec duality_map(const Vec& v, double p) {
  Vec out(v.size());
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    out(i) = (a > 0) ? (v(i) / a) * std::pow(a, p - 1.0) : cplx(0, 0);
  }
  return out;
}

}  // namespace

NormBracket lp_operator_norm(const Mat& T, const RVec& m, double p,
                             std::uint64_t seed, int nsamples) {
  if (p < 1) throw std::invalid_argument("lp_operator_norm: p must be >= 1");
  NormBracket out;
  if (p == 1.0 || !std::isfinite(p) || p == 2.0) {
    double v;
    if (p == 1.0)
      v = operator_norm_11(T, m);
    else if (p == 2.0)
      v = operator_norm_22(T, m);
    else
      v = operator_norm_inf(T);
    out.lower = out.upper = v;
    out.exact = true;
    return out;
  }

  const double u1 = operator_norm_11(T, m);
  const double u2 = operator_norm_22(T, m);
  const double ui = operator_norm_inf(T);
  if (p < 2.0) {
    const double theta = 2.0 / p - 1.0;
    out.upper = std::pow(u1, theta) * std::pow(u2, 1.0 - theta);
  } else {
    const double theta = 2.0 / p;
    out.upper = std::pow(u2, theta) * std::pow(ui, 1.0 - theta);
  }

  // Conjugate to the unweighted problem: Tw = M^{1/p} T M^{-1/p}.
  const int n = static_cast<int>(T.rows());
  Mat Tw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Tw(i, j) = std::pow(m(i) / m(j), 1.0 / p) * T(i, j);
  const Mat TwH = Tw.adjoint();
  const double q = p / (p - 1.0);

  auto ratio = [&](const Vec& x) -> double {
    const double nx = x.lpNorm<Eigen::Infinity>() > 0
                          ? std::pow(x.cwiseAbs().array().pow(p).sum(), 1.0 / p)
                          : 0.0;
    if (nx == 0) return 0.0;
    const Vec y = Tw * x;
    const double ny = std::pow(y.cwiseAbs().array().pow(p).sum(), 1.0 / p);
    return ny / nx;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0;
  Vec best_x = Vec::Zero(n);
  for (int s = 0; s < nsamples; ++s) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = cplx(gauss(rng), gauss(rng));
    const double r = ratio(x);
    if (r > best) {
      best = r;
      best_x = x;
    }
  }
  // Nonlinear power-iteration refinement from the best sample.
  Vec x = best_x;
  for (int it = 0; it < 40 && x.norm() > 0; ++it) {
    Vec y = Tw * x;
    if (y.norm() == 0) break;
    Vec z = TwH * duality_map(y, p);
    if (z.norm() == 0) break;
    x = duality_map(z, q);
    const double r = ratio(x);
    if (r > best) best = r;
  }
  out.lower = std::min(best, out.upper);
  out.exact = false;
  return out;
}

}  // namespace hodgeheat
