#include "hodgeheat/heat.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hodgeheat {

namespace {

std::vector<std::vector<int>> coupling_components(const Mat& S) {
  const int n = static_cast<int>(S.rows());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int seed = 0; seed < n; ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{seed};
    comp[seed] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w = 0; w < n; ++w) {
        if (comp[w] < 0 && (std::abs(S(v, w)) > 0 || std::abs(S(w, v)) > 0)) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

}  // namespace

HeatSemigroup::HeatSemigroup(const LaplacianMatrix& L)
    : m_(L.m), keys_(L.keys) {
  const int n = L.size();
  if (n == 0) throw std::invalid_argument("HeatSemigroup: empty operator block");
  const double defect = L.self_adjointness_defect();
  const double scale = L.A.cwiseAbs().maxCoeff() + 1.0;
  if (defect > 1e-8 * scale)
    throw std::invalid_argument("HeatSemigroup: operator is not m-self-adjoint");

  const Mat S = L.symmetrized();
  components_ = coupling_components(S);

  evals_ = RVec::Zero(n);
  evecs_ = Mat::Zero(n, n);
  eig_span_.clear();
  int offset = 0;
  for (const auto& comp : components_) {
    const int k = static_cast<int>(comp.size());
    Mat sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = S(comp[a], comp[b]);
    Eigen::SelfAdjointEigenSolver<Mat> es(sub);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("HeatSemigroup: eigendecomposition failed");
    for (int a = 0; a < k; ++a) evals_(offset + a) = es.eigenvalues()(a);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) evecs_(comp[a], offset + b) = es.eigenvectors()(a, b);
    eig_span_.emplace_back(offset, k);
    offset += k;
  }
}

Mat HeatSemigroup::propagator(double t) const {
  const int n = size();
  Mat X = Mat::Zero(n, n);
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& comp = components_[ci];
    const auto [off, k] = eig_span_[ci];
    Mat sub = Mat::Zero(k, k);
    for (int e = 0; e < k; ++e) {
      const double w = std::exp(-t * evals_(off + e));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          sub(a, b) += w * evecs_(comp[a], off + e) * std::conj(evecs_(comp[b], off + e));
    }
    // undo the symmetrizing conjugation: X = M^{-1/2} exp(-tS) M^{1/2}
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        X(comp[a], comp[b]) = sub(a, b) * std::sqrt(m_(comp[b]) / m_(comp[a]));
  }
  return X;
}

Vec HeatSemigroup::apply(double t, const Vec& f) const {
  if (f.size() != size())
    throw std::invalid_argument("HeatSemigroup::apply: size mismatch");
  return propagator(t) * f;
}

Mat HeatSemigroup::kernel(double t) const {
  Mat X = propagator(t);
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) X(x, y) /= m_(y);
  return X;
}

double zeta(double r) {
  if (r < 0) throw std::invalid_argument("zeta: negative argument");
  if (!std::isfinite(r)) return kInf;
  if (r == 0) return 0.0;
  return r * std::asinh(r) - std::sqrt(1.0 + r * r) + 1.0;
}

double c_beta(double beta, double s) {
  if (s <= 0) throw std::invalid_argument("c_beta: jump size must be positive");
  // cosh(x) - 1 = 2 sinh^2(x/2), stable for small arguments
  const double half = std::sinh(0.5 * beta * s);
  return 2.0 * half * half / (s * s);
}

HeatEqCheck heat_equation_residuals(const HeatSemigroup& hs, const LaplacianMatrix& L,
                                    const Vec& f, const std::vector<double>& ts,
                                    double h, double residual_tol) {
  if (ts.empty()) throw std::invalid_argument("verify_heat_equation: empty time grid");
  if (h <= 0) throw std::invalid_argument("verify_heat_equation: step must be positive");
  HeatEqCheck out;
  auto max_residual = [&](double step) {
    double worst = 0;
    for (double t : ts) {
      const Vec up = hs.apply(t + step, f);
      const Vec dn = hs.apply(t - step, f);
      const Vec ut = hs.apply(t, f);
      const Vec res = (up - dn) / (2.0 * step) + L.A * ut;
      worst = std::max(worst, res.norm());
    }
    return worst;
  };
  out.residual = max_residual(h);
  out.residual_half = max_residual(h / 2.0);
  const double floor = 1e-14 * (f.norm() + 1.0);
  out.order = (out.residual_half > floor)
                  ? std::log2(out.residual / out.residual_half)
                  : 2.0;
  out.pass = (out.residual <= residual_tol) && (out.order >= 1.9 || out.residual <= floor);
  return out;
}

}  // namespace hodgeheat
