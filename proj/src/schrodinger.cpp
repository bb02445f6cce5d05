#include "hodgeheat/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

namespace hodgeheat {

bool SchrodingerData::real_magnetic() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (std::abs(std::imag(o(i, j))) > 0) return false;
  return true;
}

SchrodingerData extract_schrodinger(const LaplacianMatrix& L) {
  const int n = L.size();
  double scale = std::max(1.0, L.A.cwiseAbs().maxCoeff() * L.m.maxCoeff());
  if (L.self_adjointness_defect() > tol::bound * scale * 10)
    throw std::invalid_argument("operator is not m-self-adjoint within tolerance");

  SchrodingerData sd;
  sd.degree = L.degree;
  sd.m = L.m;
  sd.keys = L.keys;
  sd.b = RMat::Zero(n, n);
  sd.o = Mat::Ones(n, n);
  sd.c = RVec::Zero(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      double mag = std::abs(L.A(x, y));
      if (mag > 0) {
        sd.b(x, y) = L.m(x) * mag;
        sd.o(x, y) = -L.A(x, y) / mag;
      }
    }
    double row = 0;
    for (int y = 0; y < n; ++y) row += sd.b(x, y);
    sd.c(x) = L.m(x) * std::real(L.A(x, x)) - row;
  }
  return sd;
}

LaplacianMatrix reassemble(const SchrodingerData& sd) {
  const int n = sd.size();
  LaplacianMatrix L;
  L.variant = LapVariant::hodge;
  L.degree = sd.degree;
  L.m = sd.m;
  L.keys = sd.keys;
  L.A = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    double row = 0;
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (sd.b(x, y) > 0) L.A(x, y) = -sd.b(x, y) * sd.o(x, y) / sd.m(x);
      row += sd.b(x, y);
    }
    L.A(x, x) = (row + sd.c(x)) / sd.m(x);
  }
  return L;
}

namespace {
cplx form_impl(const SchrodingerData& sd, const Vec& f, const Vec& g, bool positive_part) {
  const int n = sd.size();
  if (f.size() != n || g.size() != n)
    throw std::invalid_argument("quadratic_form: vector size mismatch");
  cplx acc{};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (sd.b(x, y) == 0) continue;
      cplx df = f(x) - sd.o(x, y) * f(y);
      cplx dg = g(x) - sd.o(x, y) * g(y);
      acc += 0.5 * sd.b(x, y) * df * std::conj(dg);
    }
  for (int x = 0; x < n; ++x) {
    double cx = positive_part ? std::max(sd.c(x), 0.0) : sd.c(x);
    acc += cx * f(x) * std::conj(g(x));
  }
  return acc;
}
}  // namespace

cplx quadratic_form(const SchrodingerData& sd, const Vec& f, const Vec& g) {
  return form_impl(sd, f, g, false);
}

double quadratic_form(const SchrodingerData& sd, const Vec& f) {
  return std::real(form_impl(sd, f, f, false));
}

cplx positive_form(const SchrodingerData& sd, const Vec& f, const Vec& g) {
  return form_impl(sd, f, g, true);
}

double positive_form(const SchrodingerData& sd, const Vec& f) {
  return std::real(form_impl(sd, f, f, true));
}

LaplacianMatrix truncate(const SchrodingerData& sd, const std::vector<int>& K) {
  const int n = sd.size();
  const int nk = static_cast<int>(K.size());
  if (nk == 0) throw std::invalid_argument("truncate: empty site subset");
  std::vector<bool> in(n, false);
  for (int i : K) {
    if (i < 0 || i >= n) throw std::invalid_argument("truncate: site index out of range");
    if (in[i]) throw std::invalid_argument("truncate: duplicate site index");
    in[i] = true;
  }

  LaplacianMatrix L;
  L.variant = LapVariant::hodge;
  L.degree = sd.degree;
  L.m = RVec(nk);
  L.A = Mat::Zero(nk, nk);
  for (int a = 0; a < nk; ++a) {
    L.m(a) = sd.m(K[a]);
    L.keys.push_back(sd.keys[K[a]]);
  }
  for (int a = 0; a < nk; ++a) {
    const int x = K[a];
    double row = 0, boundary = 0;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if (in[y]) row += sd.b(x, y);
      else boundary += sd.b(x, y);
    }
    for (int bcol = 0; bcol < nk; ++bcol) {
      const int y = K[bcol];
      if (y != x && sd.b(x, y) > 0) L.A(a, bcol) = -sd.b(x, y) * sd.o(x, y) / sd.m(x);
    }
    // Truncated potential c_K(x) = c(x) + coupling to the discarded sites.
    L.A(a, a) = (row + sd.c(x) + boundary) / sd.m(x);
  }
  return L;
}

Vec phi_probe(const SchrodingerData& sd, int x) {
  const int n = sd.size();
  if (x < 0 || x >= n) throw std::invalid_argument("phi_probe: site out of range");
  Vec phi = Vec::Zero(n);
  phi(x) = 1.0;
  for (int y = 0; y < n; ++y)
    if (y != x && sd.b(x, y) > 0) phi(y) = std::conj(sd.o(x, y));
  return phi;
}

}  // namespace hodgeheat
